#pragma once

#include <stdexcept>
#include <string>

namespace dpham {

/// Which bound of the (n, t) domain a parameter pair violates.
enum class ParamBound { NTooSmall, TTooSmall, TTooLarge };

class ParamError : public std::invalid_argument {
 public:
  ParamError(ParamBound bound, const std::string& what)
      : std::invalid_argument(what), bound_(bound) {}
  ParamBound bound() const noexcept { return bound_; }

 private:
  ParamBound bound_;
};

enum class ASequenceFault { WrongLength, OutOfRange, Residue, Order };

class ASequenceError : public std::invalid_argument {
 public:
  ASequenceError(ASequenceFault fault, const std::string& what)
      : std::invalid_argument(what), fault_(fault) {}
  ASequenceFault fault() const noexcept { return fault_; }

 private:
  ASequenceFault fault_;
};

/// A construction step produced something that is not what the construction
/// guarantees. Seeing one of these means there is a bug.
class IntegrityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The operation is only defined for one parity of n.
class ParityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace dpham

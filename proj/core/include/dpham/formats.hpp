#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dpham/construct.hpp"
#include "dpham/graph.hpp"
#include "dpham/verify.hpp"

namespace dpham {

enum class Construction { EvenLadder, OddPqrs, BruteForce };

const char* construction_name(Construction c) noexcept;
std::optional<Construction> parse_construction(std::string_view name) noexcept;

/// Self-contained, re-verifiable record of a Hamilton cycle.
struct CycleCertificate {
  Index n = 0;
  Index t = 0;
  std::optional<std::vector<Index>> a_sequence;
  /// Serial ids, see DpGraph::serial.
  std::vector<Index> cycle;
  Construction construction = Construction::EvenLadder;

  friend bool operator==(const CycleCertificate&, const CycleCertificate&) = default;
};

/// Text that is not a well-formed certificate (bad JSON, missing or mistyped
/// fields, invalid parameters, wrong cycle length).
class CertificateSyntaxError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Well-formed certificate whose cycle fails verification.
class CertificateVerificationError : public std::runtime_error {
 public:
  explicit CertificateVerificationError(VerificationReport report)
      : std::runtime_error("certificate cycle failed verification:\n" +
                           report.summary()),
        report_(std::move(report)) {}
  const VerificationReport& report() const noexcept { return report_; }

 private:
  VerificationReport report_;
};

/// Header "n t", then one "lo hi" serial pair per edge in sorted order.
std::string encode_edge_list(const DpGraph& g);

/// Graphviz description. Cycle edges, if a cycle is given, get a highlight
/// attribute. Throws std::invalid_argument if the cycle does not verify.
std::string encode_dot(const DpGraph& g,
                       const std::optional<HamiltonCycle>& cycle = std::nullopt);

CycleCertificate make_certificate(const HamiltonCycle& cycle,
                                  Construction construction,
                                  const std::optional<ASequence>& a = std::nullopt);

/// Throws std::invalid_argument if the certificate's cycle does not verify.
std::string encode_certificate(const CycleCertificate& cert);

/// Parses and re-verifies. Throws CertificateSyntaxError or
/// CertificateVerificationError.
CycleCertificate decode_certificate(std::string_view text);

/// Canonical cycle from the decoded certificate's ids.
HamiltonCycle certificate_cycle(const CycleCertificate& cert);

}  // namespace dpham

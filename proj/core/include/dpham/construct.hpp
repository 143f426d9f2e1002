#pragma once

#include <span>
#include <utility>
#include <vector>

#include "dpham/graph.hpp"

namespace dpham {

/// Representatives a_0..a_{2k} of the residue classes mod 2k+1, stored as
/// plain integers in [0, n) with
///   a_i = i (mod 2k+1)  and  a_0 < a_2 < ... < a_{2k} < a_1 < a_3 < ... < a_{2k-1} < n.
class ASequence {
 public:
  const std::vector<Index>& entries() const& noexcept { return entries_; }
  std::vector<Index> entries() && noexcept { return std::move(entries_); }
  Index k() const noexcept { return k_; }
  Index size() const noexcept { return static_cast<Index>(entries_.size()); }
  /// a_i with i taken mod 2k+1.
  Index operator[](Index i) const noexcept {
    return entries_[static_cast<std::size_t>(mod(i, size()))];
  }

  friend bool operator==(const ASequence&, const ASequence&) = default;

 private:
  friend ASequence validate_a_sequence(const GraphParams&, std::vector<Index>);
  ASequence(std::vector<Index> entries, Index k)
      : entries_(std::move(entries)), k_(k) {}

  std::vector<Index> entries_;
  Index k_ = 0;
};

/// Throws ASequenceError (length, range, residue, order) or ParityError.
ASequence validate_a_sequence(const GraphParams& params,
                              std::vector<Index> entries);

/// a_{2j} = 2j, a_{2j-1} = 2k + 2j.
ASequence canonical_a_sequence(const GraphParams& params);

/// A simple path of DP(n, t). Construction checks adjacency and repeats.
class VertexPath {
 public:
  /// Throws IntegrityError if `vertices` is empty, repeats a vertex, or has a
  /// non-adjacent consecutive pair.
  VertexPath(const DpGraph& g, std::vector<Vertex> vertices);

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const Vertex& front() const noexcept { return vertices_.front(); }
  const Vertex& back() const noexcept { return vertices_.back(); }
  std::size_t size() const noexcept { return vertices_.size(); }

 private:
  std::vector<Vertex> vertices_;
};

/// A closed tour of all 4n vertices. The closing edge back to the first
/// vertex is implicit.
///
/// Instances are canonical: they start at X_0 and the second vertex is the
/// lower-serial one of X_0's two cycle neighbours.
class HamiltonCycle {
 public:
  /// Rotates and orients `vertices` into canonical form. Throws
  /// IntegrityError if the sequence is not a Hamilton cycle of `g`.
  static HamiltonCycle canonical(const DpGraph& g, std::vector<Vertex> vertices);

  const GraphParams& params() const noexcept { return params_; }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }

  friend bool operator==(const HamiltonCycle&, const HamiltonCycle&) = default;

 private:
  HamiltonCycle(GraphParams params, std::vector<Vertex> vertices)
      : params_(params), vertices_(std::move(vertices)) {}

  GraphParams params_;
  std::vector<Vertex> vertices_;
};

// Even n.

/// U_{2i} X_{2i} X_{2i+1} U_{2i+1} V_{2i+1-t} Y_{2i+1-t} Y_{2i+2-t} V_{2i+2-t} U_{2i+2}
VertexPath even_ladder_path(const DpGraph& g, Index i);
HamiltonCycle even_hamilton(const DpGraph& g);

// Odd n. Path subscripts are taken mod 2k+1.

/// U_{a_i+t}, the X rim upward from a_i+t to a_{i+2}+t-1, U_{a_{i+2}+t-1}.
VertexPath path_P(const DpGraph& g, const ASequence& a, Index i);
/// V_{a_i}, the Y rim upward from a_i to a_{i+2}-1, V_{a_{i+2}-1}.
VertexPath path_Q(const DpGraph& g, const ASequence& a, Index i);
/// Walk +t from U_{a_{i+1}+t-1}, alternating U/V, to the first V_{a_i}.
VertexPath path_R(const DpGraph& g, const ASequence& a, Index i);
/// Walk -t from V_{a_{i+1}-1}, alternating V/U, to the first U_{a_i+t}.
VertexPath path_S(const DpGraph& g, const ASequence& a, Index i);

/// Glues (S_0 P_0)(R_1 Q_1)(S_2 P_2)...(S_{2k} P_{2k}) then
/// (R_0 Q_0)(S_1 P_1)...(R_{2k} Q_{2k}), closing at the start of S_0.
HamiltonCycle odd_hamilton(const DpGraph& g, const ASequence& a);

/// Even n: ladder construction. Odd n: path system over the canonical
/// a-sequence. Throws ParamError for an invalid pair.
HamiltonCycle hamilton_cycle(Index n, Index t);

}  // namespace dpham

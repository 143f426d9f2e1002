#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dpham/construct.hpp"
#include "dpham/graph.hpp"

namespace dpham {

enum class Check {
  // Cycle certificate checks.
  Length,
  OutOfRange,
  Duplication,
  Adjacency,
  Closure,
  // Proof-structure checks.
  XPartition,
  YPartition,
  InnerPartition,
  InnerSplit,
  InnerCycleSize,
};

const char* check_name(Check check) noexcept;

struct Finding {
  Check check;
  /// Sequence position, or path/cycle subscript for proof-structure checks.
  std::size_t position = 0;
  std::optional<Vertex> vertex;
  std::string detail;
};

/// Every failure found, not just the first.
struct VerificationReport {
  std::vector<Finding> failures;

  bool ok() const noexcept { return failures.empty(); }
  bool has(Check check) const noexcept;
  std::string summary() const;
};

/// Checks that `candidate` is a Hamilton cycle of `g`: 4n vertices, no
/// repeats, consecutive pairs adjacent and the last vertex adjacent to the
/// first. Edges are recomputed from the defining edge families, independently
/// of DpGraph::neighbors.
VerificationReport verify_hamilton(const DpGraph& g,
                                   std::span<const Vertex> candidate);

inline VerificationReport verify_hamilton(const DpGraph& g,
                                          const HamiltonCycle& c) {
  return verify_hamilton(g, c.vertices());
}

/// The alternating U/V cycle through residue class `residue` mod gcd(n, t):
///   U_i V_{i+t} U_{i+2t} ... U_{i+(p-1)t} V_i U_{i+t} ... V_{i+(p-1)t}
struct InnerCycle {
  Index residue = 0;
  std::vector<Vertex> vertices;

  /// U_i V_{i+t} ... U_{i+(p-1)t}
  std::span<const Vertex> u_half() const noexcept {
    return std::span(vertices).first(vertices.size() / 2);
  }
  /// V_i U_{i+t} ... V_{i+(p-1)t}
  std::span<const Vertex> v_half() const noexcept {
    return std::span(vertices).subspan(vertices.size() / 2);
  }
};

/// Odd n only; 0 <= residue < 2k+1.
InnerCycle cycle_C(const DpGraph& g, Index residue);

/// The coverage facts behind the odd construction:
///  1. X vertices of P_0..P_{2k} partition the X layer,
///  2. Y vertices of Q_0..Q_{2k} partition the Y layer,
///  3. the vertices of all R_i and S_i partition U and V,
///  4. R_i and S_i are disjoint and together make up exactly one inner cycle,
///  5. every inner cycle has 2p distinct vertices.
VerificationReport check_proof_partitions(const DpGraph& g, const ASequence& a);

}  // namespace dpham

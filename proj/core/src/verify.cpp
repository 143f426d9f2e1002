#include "dpham/verify.hpp"

#include <algorithm>
#include <sstream>

#include "dpham/errors.hpp"

namespace dpham {

namespace {

// Edge predicate read straight off the edge families
//   x_i x_{i+1}, y_i y_{i+1}, x_i u_i, y_i v_i, u_i v_{i+t}, v_i u_{i+t}.
bool defining_edge(Index n, Index t, Vertex a, Vertex b) {
  if (a.layer > b.layer) std::swap(a, b);
  const Index d = mod(b.index - a.index, n);
  switch (a.layer) {
    case Layer::X:
      if (b.layer == Layer::X) return d == 1 || d == n - 1;
      if (b.layer == Layer::U) return d == 0;
      return false;
    case Layer::U:
      return b.layer == Layer::V && (d == mod(t, n) || d == mod(-t, n));
    case Layer::V:
      return b.layer == Layer::Y && d == 0;
    case Layer::Y:
      return b.layer == Layer::Y && (d == 1 || d == n - 1);
  }
  return false;
}

std::string describe(Vertex v) { return label(v); }

// Counts occurrences of the vertices of `layers` across `groups` and
// reports every vertex that is missing or repeated.
void check_partition(const DpGraph& g,
                     const std::vector<std::vector<Vertex>>& groups,
                     std::initializer_list<Layer> layers, Check check,
                     VerificationReport& report) {
  std::vector<int> hits(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<std::size_t> first_group(hits.size(), 0);
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    for (const Vertex& v : groups[gi]) {
      if (std::find(layers.begin(), layers.end(), v.layer) == layers.end())
        continue;
      auto id = static_cast<std::size_t>(g.serial(v));
      if (hits[id]++ == 0) {
        first_group[id] = gi;
      } else {
        report.failures.push_back({check, gi, v,
                                   describe(v) + " also covered by group " +
                                       std::to_string(first_group[id])});
      }
    }
  }
  for (Layer layer : layers) {
    for (const Vertex& v : g.layer_vertices(layer)) {
      if (hits[static_cast<std::size_t>(g.serial(v))] == 0) {
        report.failures.push_back({check, 0, v, describe(v) + " not covered"});
      }
    }
  }
}

}  // namespace

const char* check_name(Check check) noexcept {
  switch (check) {
    case Check::Length:
      return "length";
    case Check::OutOfRange:
      return "out-of-range";
    case Check::Duplication:
      return "duplication";
    case Check::Adjacency:
      return "adjacency";
    case Check::Closure:
      return "closure";
    case Check::XPartition:
      return "x-partition";
    case Check::YPartition:
      return "y-partition";
    case Check::InnerPartition:
      return "inner-partition";
    case Check::InnerSplit:
      return "inner-split";
    case Check::InnerCycleSize:
      return "inner-cycle-size";
  }
  return "unknown";
}

bool VerificationReport::has(Check check) const noexcept {
  return std::any_of(failures.begin(), failures.end(),
                     [check](const Finding& f) { return f.check == check; });
}

std::string VerificationReport::summary() const {
  if (ok()) return "ok\n";
  std::ostringstream out;
  for (const Finding& f : failures) {
    out << check_name(f.check) << " at " << f.position;
    if (f.vertex) out << " (" << label(*f.vertex) << ")";
    if (!f.detail.empty()) out << ": " << f.detail;
    out << '\n';
  }
  return out.str();
}

VerificationReport verify_hamilton(const DpGraph& g,
                                   std::span<const Vertex> candidate) {
  VerificationReport report;
  const Index n = g.n();
  const Index t = g.t();
  const auto size = candidate.size();

  if (static_cast<Index>(size) != 4 * n) {
    report.failures.push_back({Check::Length, size, std::nullopt,
                               "expected " + std::to_string(4 * n) +
                                   " vertices, got " + std::to_string(size)});
  }

  auto in_range = [n](const Vertex& v) {
    return v.index >= 0 && v.index < n &&
           static_cast<int>(v.layer) < 4;
  };

  std::vector<std::size_t> first_seen(static_cast<std::size_t>(4 * n), size);
  for (std::size_t i = 0; i < size; ++i) {
    const Vertex& v = candidate[i];
    if (!in_range(v)) {
      report.failures.push_back({Check::OutOfRange, i, v, "index outside [0, n)"});
      continue;
    }
    auto id = static_cast<std::size_t>(static_cast<Index>(v.layer) * n + v.index);
    if (first_seen[id] != size) {
      report.failures.push_back({Check::Duplication, i, v,
                                 "first seen at " + std::to_string(first_seen[id])});
    } else {
      first_seen[id] = i;
    }
  }

  for (std::size_t i = 0; i + 1 < size; ++i) {
    const Vertex& a = candidate[i];
    const Vertex& b = candidate[i + 1];
    if (in_range(a) && in_range(b) && !defining_edge(n, t, a, b)) {
      report.failures.push_back({Check::Adjacency, i, a,
                                 describe(a) + " - " + describe(b) + " is not an edge"});
    }
  }

  if (size == 0) {
    report.failures.push_back({Check::Closure, 0, std::nullopt, "empty sequence"});
  } else {
    const Vertex& last = candidate[size - 1];
    const Vertex& first = candidate[0];
    if (size < 3 || !in_range(last) || !in_range(first) ||
        !defining_edge(n, t, last, first)) {
      report.failures.push_back({Check::Closure, size - 1, last,
                                 describe(last) + " does not close to " +
                                     describe(first)});
    }
  }
  return report;
}

InnerCycle cycle_C(const DpGraph& g, Index residue) {
  const auto& params = g.params();
  if (!params.odd()) {
    throw ParityError("inner cycles are defined for odd n only (got n=" +
                      std::to_string(params.n()) + ")");
  }
  if (residue < 0 || residue >= params.g()) {
    throw std::out_of_range("inner cycle residue " + std::to_string(residue) +
                            " outside [0, " + std::to_string(params.g()) + ")");
  }
  const Index p = *params.p();
  InnerCycle c{residue, {}};
  c.vertices.reserve(static_cast<std::size_t>(2 * p));
  for (Layer first : {Layer::U, Layer::V}) {
    const Layer second = first == Layer::U ? Layer::V : Layer::U;
    for (Index j = 0; j < p; ++j) {
      c.vertices.push_back(g.at(j % 2 == 0 ? first : second, residue + j * g.t()));
    }
  }
  return c;
}

VerificationReport check_proof_partitions(const DpGraph& g, const ASequence& a) {
  const auto& params = g.params();
  if (!params.odd()) {
    throw ParityError("proof partitions apply to odd n only");
  }
  const Index classes = params.g();
  const Index p = *params.p();
  VerificationReport report;

  std::vector<std::vector<Vertex>> ps, qs, rs, ss;
  for (Index i = 0; i < classes; ++i) {
    ps.push_back(path_P(g, a, i).vertices());
    qs.push_back(path_Q(g, a, i).vertices());
    rs.push_back(path_R(g, a, i).vertices());
    ss.push_back(path_S(g, a, i).vertices());
  }

  check_partition(g, ps, {Layer::X}, Check::XPartition, report);
  check_partition(g, qs, {Layer::Y}, Check::YPartition, report);

  std::vector<std::vector<Vertex>> inner(rs);
  inner.insert(inner.end(), ss.begin(), ss.end());
  check_partition(g, inner, {Layer::U, Layer::V}, Check::InnerPartition, report);

  std::vector<InnerCycle> cycles;
  for (Index r = 0; r < classes; ++r) cycles.push_back(cycle_C(g, r));

  for (Index i = 0; i < classes; ++i) {
    const auto si = static_cast<std::size_t>(i);
    std::vector<Vertex> r_set(rs[si]), s_set(ss[si]);
    std::sort(r_set.begin(), r_set.end());
    std::sort(s_set.begin(), s_set.end());
    std::vector<Vertex> common;
    std::set_intersection(r_set.begin(), r_set.end(), s_set.begin(), s_set.end(),
                          std::back_inserter(common));
    for (const Vertex& v : common) {
      report.failures.push_back({Check::InnerSplit, si, v,
                                 "shared by R_" + std::to_string(i) + " and S_" +
                                     std::to_string(i)});
    }
    std::vector<Vertex> both;
    std::merge(r_set.begin(), r_set.end(), s_set.begin(), s_set.end(),
               std::back_inserter(both));
    const Index residue = mod(rs[si].front().index, classes);
    std::vector<Vertex> cyc(cycles[static_cast<std::size_t>(residue)].vertices);
    std::sort(cyc.begin(), cyc.end());
    if (both != cyc) {
      report.failures.push_back({Check::InnerSplit, si, std::nullopt,
                                 "R_" + std::to_string(i) + " and S_" +
                                     std::to_string(i) + " do not make up C_" +
                                     std::to_string(residue)});
    }
  }

  for (const InnerCycle& c : cycles) {
    std::vector<Vertex> sorted(c.vertices);
    std::sort(sorted.begin(), sorted.end());
    const auto distinct =
        std::unique(sorted.begin(), sorted.end()) - sorted.begin();
    if (distinct != 2 * p || static_cast<Index>(c.vertices.size()) != 2 * p) {
      report.failures.push_back(
          {Check::InnerCycleSize, static_cast<std::size_t>(c.residue), std::nullopt,
           "C_" + std::to_string(c.residue) + " has " + std::to_string(distinct) +
               " distinct vertices, expected " + std::to_string(2 * p)});
    }
  }
  return report;
}

}  // namespace dpham

#include "dpham/construct.hpp"

#include <algorithm>
#include <string>

#include "dpham/errors.hpp"

namespace dpham {

namespace {

void require_odd(const GraphParams& params, const char* what) {
  if (!params.odd()) {
    throw ParityError(std::string(what) + " requires odd n (got n=" +
                      std::to_string(params.n()) + ")");
  }
}

void require_even(const GraphParams& params, const char* what) {
  if (params.odd()) {
    throw ParityError(std::string(what) + " requires even n (got n=" +
                      std::to_string(params.n()) + ")");
  }
}

std::string join(const std::vector<Index>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

// Subscripts in the order the interleaving condition requires them to
// increase: 0, 2, ..., 2k, 1, 3, ..., 2k-1.
std::vector<Index> interleaved_order(Index k) {
  std::vector<Index> order;
  for (Index j = 0; j <= k; ++j) order.push_back(2 * j);
  for (Index j = 1; j <= k; ++j) order.push_back(2 * j - 1);
  return order;
}

// Appends `path` to `tour`; the path must start where the tour ends.
void glue(std::vector<Vertex>& tour, const VertexPath& path, const char* name,
          Index i) {
  if (!tour.empty() && tour.back() != path.front()) {
    throw IntegrityError("junction mismatch entering " + std::string(name) +
                         "_" + std::to_string(i) + ": tour ends at " +
                         label(tour.back()) + ", path starts at " +
                         label(path.front()));
  }
  const auto& vs = path.vertices();
  tour.insert(tour.end(), vs.begin() + (tour.empty() ? 0 : 1), vs.end());
}

// Walks from `start`, stepping by `step` and flipping between U and V, up to
// and including the first arrival at `target`.
VertexPath inner_walk(const DpGraph& g, Vertex start, Vertex target,
                      Index step) {
  const Index guard = 2 * g.params().p().value_or(g.n());
  std::vector<Vertex> walk{start};
  Vertex cur = start;
  while (cur != target) {
    if (static_cast<Index>(walk.size()) > guard) {
      throw IntegrityError("inner walk from " + label(start) + " did not reach " +
                           label(target) + " within " + std::to_string(guard) +
                           " steps");
    }
    cur = g.at(cur.layer == Layer::U ? Layer::V : Layer::U, cur.index + step);
    walk.push_back(cur);
  }
  return VertexPath(g, std::move(walk));
}

// Rim run: `partner`_{from}, rim_{from}, ..., rim_{from+len-1}, `partner`_{from+len-1}.
VertexPath rim_path(const DpGraph& g, Layer partner, Layer rim, Index from,
                    Index len) {
  std::vector<Vertex> vs;
  vs.reserve(static_cast<std::size_t>(len + 2));
  vs.push_back(g.at(partner, from));
  for (Index j = 0; j < len; ++j) vs.push_back(g.at(rim, from + j));
  vs.push_back(g.at(partner, from + len - 1));
  return VertexPath(g, std::move(vs));
}

// Number of rim vertices between a_i and a_{i+2}. With a single residue class
// a_{i+2} = a_i and the run is the whole rim.
Index run_length(const DpGraph& g, const ASequence& a, Index i) {
  const Index len = mod(a[i + 2] - a[i], g.n());
  return len == 0 ? g.n() : len;
}

void check_simple_path(const DpGraph& g, std::span<const Vertex> path) {
  if (path.empty()) throw IntegrityError("empty path");
  for (std::size_t i = 0; i < path.size(); ++i) {
    const Vertex& v = path[i];
    if (!g.contains(v)) throw IntegrityError("path vertex out of range");
    if (i > 0 && !g.adjacent(path[i - 1], v)) {
      throw IntegrityError("path step " + label(path[i - 1]) + " -> " +
                           label(v) + " is not an edge");
    }
  }
  // Short paths (ladder rungs, short walks) are checked by sorting; long ones
  // against a bitmap over the whole vertex set.
  if (static_cast<Index>(path.size()) * 16 < g.vertex_count()) {
    std::vector<Vertex> sorted(path.begin(), path.end());
    std::sort(sorted.begin(), sorted.end());
    if (auto dup = std::adjacent_find(sorted.begin(), sorted.end());
        dup != sorted.end()) {
      throw IntegrityError("path repeats " + label(*dup));
    }
    return;
  }
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  for (const Vertex& v : path) {
    auto& mark = seen[static_cast<std::size_t>(g.serial(v))];
    if (mark) throw IntegrityError("path repeats " + label(v));
    mark = 1;
  }
}

}  // namespace

ASequence validate_a_sequence(const GraphParams& params,
                              std::vector<Index> entries) {
  require_odd(params, "an a-sequence");
  const Index k = *params.k();
  const Index classes = 2 * k + 1;
  if (static_cast<Index>(entries.size()) != classes) {
    throw ASequenceError(ASequenceFault::WrongLength,
                         "a-sequence must have 2k+1=" + std::to_string(classes) +
                             " entries (got " + std::to_string(entries.size()) +
                             ")");
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] < 0 || entries[i] >= params.n()) {
      throw ASequenceError(ASequenceFault::OutOfRange,
                           "a_" + std::to_string(i) + "=" +
                               std::to_string(entries[i]) + " is outside [0, " +
                               std::to_string(params.n()) + ")");
    }
  }
  const auto order = interleaved_order(k);
  for (std::size_t j = 1; j < order.size(); ++j) {
    const auto lo = static_cast<std::size_t>(order[j - 1]);
    const auto hi = static_cast<std::size_t>(order[j]);
    if (entries[lo] >= entries[hi]) {
      throw ASequenceError(ASequenceFault::Order,
                           "a_" + std::to_string(lo) + "=" +
                               std::to_string(entries[lo]) + " must precede a_" +
                               std::to_string(hi) + "=" +
                               std::to_string(entries[hi]) + " (sequence " +
                               join(entries) + ")");
    }
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (mod(entries[i], classes) != static_cast<Index>(i)) {
      throw ASequenceError(
          ASequenceFault::Residue,
          "a_" + std::to_string(i) + "=" + std::to_string(entries[i]) +
              " is not congruent to " + std::to_string(i) + " mod " +
              std::to_string(classes));
    }
  }
  return ASequence(std::move(entries), k);
}

ASequence canonical_a_sequence(const GraphParams& params) {
  require_odd(params, "canonical_a_sequence");
  const Index k = *params.k();
  std::vector<Index> entries(static_cast<std::size_t>(2 * k + 1));
  for (Index j = 0; j <= k; ++j) entries[static_cast<std::size_t>(2 * j)] = 2 * j;
  for (Index j = 1; j <= k; ++j)
    entries[static_cast<std::size_t>(2 * j - 1)] = 2 * k + 2 * j;
  return validate_a_sequence(params, std::move(entries));
}

VertexPath::VertexPath(const DpGraph& g, std::vector<Vertex> vertices)
    : vertices_(std::move(vertices)) {
  check_simple_path(g, vertices_);
}

HamiltonCycle HamiltonCycle::canonical(const DpGraph& g,
                                       std::vector<Vertex> vertices) {
  if (static_cast<Index>(vertices.size()) != g.vertex_count()) {
    throw IntegrityError("cycle has " + std::to_string(vertices.size()) +
                         " vertices, expected " +
                         std::to_string(g.vertex_count()));
  }
  check_simple_path(g, vertices);
  if (!g.adjacent(vertices.back(), vertices.front())) {
    throw IntegrityError("cycle does not close: " + label(vertices.back()) +
                         " is not adjacent to " + label(vertices.front()));
  }

  const Vertex origin{Layer::X, 0};
  auto it = std::find(vertices.begin(), vertices.end(), origin);
  std::rotate(vertices.begin(), it, vertices.end());
  if (g.serial(vertices.back()) < g.serial(vertices[1])) {
    std::reverse(vertices.begin() + 1, vertices.end());
  }
  return HamiltonCycle(g.params(), std::move(vertices));
}

VertexPath even_ladder_path(const DpGraph& g, Index i) {
  require_even(g.params(), "even_ladder_path");
  if (i < 0 || 2 * i >= g.n()) {
    throw std::out_of_range("ladder path index " + std::to_string(i) +
                            " outside [0, n/2)");
  }
  const Index t = g.t();
  return VertexPath(g, {g.at(Layer::U, 2 * i), g.at(Layer::X, 2 * i),
                        g.at(Layer::X, 2 * i + 1), g.at(Layer::U, 2 * i + 1),
                        g.at(Layer::V, 2 * i + 1 - t), g.at(Layer::Y, 2 * i + 1 - t),
                        g.at(Layer::Y, 2 * i + 2 - t), g.at(Layer::V, 2 * i + 2 - t),
                        g.at(Layer::U, 2 * i + 2)});
}

HamiltonCycle even_hamilton(const DpGraph& g) {
  require_even(g.params(), "even_hamilton");
  std::vector<Vertex> tour;
  tour.reserve(static_cast<std::size_t>(g.vertex_count() + 1));
  for (Index i = 0; 2 * i < g.n(); ++i) glue(tour, even_ladder_path(g, i), "X", i);
  if (tour.back() != tour.front()) {
    throw IntegrityError("ladder paths do not close at " + label(tour.front()));
  }
  tour.pop_back();
  return HamiltonCycle::canonical(g, std::move(tour));
}

VertexPath path_P(const DpGraph& g, const ASequence& a, Index i) {
  require_odd(g.params(), "path_P");
  return rim_path(g, Layer::U, Layer::X, a[i] + g.t(), run_length(g, a, i));
}

VertexPath path_Q(const DpGraph& g, const ASequence& a, Index i) {
  require_odd(g.params(), "path_Q");
  return rim_path(g, Layer::V, Layer::Y, a[i], run_length(g, a, i));
}

VertexPath path_R(const DpGraph& g, const ASequence& a, Index i) {
  require_odd(g.params(), "path_R");
  return inner_walk(g, g.at(Layer::U, a[i + 1] + g.t() - 1),
                    g.at(Layer::V, a[i]), g.t());
}

VertexPath path_S(const DpGraph& g, const ASequence& a, Index i) {
  require_odd(g.params(), "path_S");
  return inner_walk(g, g.at(Layer::V, a[i + 1] - 1),
                    g.at(Layer::U, a[i] + g.t()), -g.t());
}

HamiltonCycle odd_hamilton(const DpGraph& g, const ASequence& a) {
  require_odd(g.params(), "odd_hamilton");
  if (a.k() != *g.params().k()) {
    throw IntegrityError("a-sequence was validated for different parameters");
  }
  const Index classes = a.size();
  std::vector<Vertex> tour;
  tour.reserve(static_cast<std::size_t>(g.vertex_count() + 1));

  // Pass 0 starts with (S P) on even subscripts, pass 1 with (R Q).
  for (int pass = 0; pass < 2; ++pass) {
    for (Index i = 0; i < classes; ++i) {
      if ((i % 2 == 0) == (pass == 0)) {
        glue(tour, path_S(g, a, i), "S", i);
        glue(tour, path_P(g, a, i), "P", i);
      } else {
        glue(tour, path_R(g, a, i), "R", i);
        glue(tour, path_Q(g, a, i), "Q", i);
      }
    }
  }
  if (tour.back() != tour.front()) {
    throw IntegrityError("odd construction does not close: ends at " +
                         label(tour.back()) + ", started at " +
                         label(tour.front()));
  }
  tour.pop_back();
  return HamiltonCycle::canonical(g, std::move(tour));
}

HamiltonCycle hamilton_cycle(Index n, Index t) {
  const DpGraph g(make_params(n, t));
  if (!g.params().odd()) return even_hamilton(g);
  return odd_hamilton(g, canonical_a_sequence(g.params()));
}

}  // namespace dpham

#include "dpham/graph.hpp"

#include <algorithm>
#include <numeric>

#include "dpham/errors.hpp"

namespace dpham {

char layer_char(Layer layer) noexcept {
  switch (layer) {
    case Layer::X:
      return 'x';
    case Layer::U:
      return 'u';
    case Layer::V:
      return 'v';
    case Layer::Y:
      return 'y';
  }
  return '?';
}

GraphParams GraphParams::make(Index n, Index t) {
  if (n < 3) {
    throw ParamError(ParamBound::NTooSmall,
                     "n must satisfy n >= 3 (got n=" + std::to_string(n) + ")");
  }
  if (t < 1) {
    throw ParamError(ParamBound::TTooSmall,
                     "t must satisfy t >= 1 (got t=" + std::to_string(t) + ")");
  }
  if (2 * t >= n) {
    throw ParamError(ParamBound::TTooLarge,
                     "t must satisfy 2t < n (got n=" + std::to_string(n) +
                         ", t=" + std::to_string(t) + ")");
  }
  GraphParams params;
  params.n_ = n;
  params.t_ = t;
  params.g_ = std::gcd(n, t);
  if (params.odd()) {
    params.k_ = (params.g_ - 1) / 2;
    params.p_ = n / params.g_;
  }
  return params;
}

std::array<Vertex, 3> DpGraph::neighbors(const Vertex& v) const noexcept {
  const Index i = v.index;
  switch (v.layer) {
    case Layer::X:
      return {at(Layer::U, i), at(Layer::X, i + 1), at(Layer::X, i - 1)};
    case Layer::Y:
      return {at(Layer::V, i), at(Layer::Y, i + 1), at(Layer::Y, i - 1)};
    case Layer::U:
      return {at(Layer::X, i), at(Layer::V, i + t()), at(Layer::V, i - t())};
    case Layer::V:
      return {at(Layer::Y, i), at(Layer::U, i + t()), at(Layer::U, i - t())};
  }
  return {v, v, v};
}

bool DpGraph::adjacent(const Vertex& a, const Vertex& b) const noexcept {
  if (!contains(a) || !contains(b)) return false;
  // Forward difference b - a in [0, n).
  Index d = b.index - a.index;
  if (d < 0) d += n();
  const bool step = d == 1 || d == n() - 1;
  const bool cross = d == t() || d == n() - t();
  switch (a.layer) {
    case Layer::X:
      return (b.layer == Layer::X && step) || (b.layer == Layer::U && d == 0);
    case Layer::Y:
      return (b.layer == Layer::Y && step) || (b.layer == Layer::V && d == 0);
    case Layer::U:
      return (b.layer == Layer::X && d == 0) || (b.layer == Layer::V && cross);
    case Layer::V:
      return (b.layer == Layer::Y && d == 0) || (b.layer == Layer::U && cross);
  }
  return false;
}

std::vector<Vertex> DpGraph::layer_vertices(Layer layer) const {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(n()));
  for (Index i = 0; i < n(); ++i) out.push_back({layer, i});
  return out;
}

std::optional<Vertex> DpGraph::from_serial(Index id) const noexcept {
  if (id < 0 || id >= vertex_count()) return std::nullopt;
  return Vertex{static_cast<Layer>(id / n()), id % n()};
}

std::vector<Edge> DpGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count()));
  for (Layer layer : kAllLayers) {
    for (Index i = 0; i < n(); ++i) {
      const Vertex v{layer, i};
      const Index a = serial(v);
      for (const Vertex& w : neighbors(v)) {
        const Index b = serial(w);
        if (a < b) out.emplace_back(a, b);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string label(const Vertex& v) {
  return std::string(1, layer_char(v.layer)) + std::to_string(v.index);
}

}  // namespace dpham

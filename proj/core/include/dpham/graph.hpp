#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dpham {

using Index = std::int64_t;

/// Layers in top-to-bottom drawing order. The order fixes serial ids.
enum class Layer : std::uint8_t { X = 0, U = 1, V = 2, Y = 3 };

inline constexpr std::array<Layer, 4> kAllLayers{Layer::X, Layer::U, Layer::V,
                                                 Layer::Y};

char layer_char(Layer layer) noexcept;

struct Vertex {
  Layer layer;
  Index index;

  friend constexpr auto operator<=>(const Vertex&, const Vertex&) = default;
};

/// Reduces any integer into [0, n).
constexpr Index mod(Index value, Index n) noexcept {
  Index r = value % n;
  return r < 0 ? r + n : r;
}

/// Validated (n, t) with the derived quantities the constructions use.
/// k and p exist only for odd n, where gcd(n, t) = 2k + 1 and p = n / gcd.
class GraphParams {
 public:
  /// Throws ParamError naming the violated bound.
  static GraphParams make(Index n, Index t);

  Index n() const noexcept { return n_; }
  Index t() const noexcept { return t_; }
  Index g() const noexcept { return g_; }
  bool odd() const noexcept { return n_ % 2 != 0; }
  std::optional<Index> k() const noexcept { return k_; }
  std::optional<Index> p() const noexcept { return p_; }

  friend bool operator==(const GraphParams&, const GraphParams&) = default;

 private:
  GraphParams() = default;

  Index n_ = 0;
  Index t_ = 0;
  Index g_ = 0;
  std::optional<Index> k_;
  std::optional<Index> p_;
};

inline GraphParams make_params(Index n, Index t) {
  return GraphParams::make(n, t);
}

using Edge = std::pair<Index, Index>;

/// DP(n, t). Adjacency is evaluated from the index formulas; nothing is
/// stored beyond the parameters.
class DpGraph {
 public:
  explicit DpGraph(GraphParams params) : params_(params) {}

  const GraphParams& params() const noexcept { return params_; }
  Index n() const noexcept { return params_.n(); }
  Index t() const noexcept { return params_.t(); }
  Index vertex_count() const noexcept { return 4 * n(); }
  Index edge_count() const noexcept { return 6 * n(); }

  /// Vertex in `layer` at index `i` reduced mod n.
  Vertex at(Layer layer, Index i) const noexcept {
    return {layer, mod(i, n())};
  }

  bool contains(const Vertex& v) const noexcept {
    return v.index >= 0 && v.index < n();
  }

  /// The three neighbours, in the order (rim/partner, +, -) of the formulas.
  std::array<Vertex, 3> neighbors(const Vertex& v) const noexcept;

  bool adjacent(const Vertex& a, const Vertex& b) const noexcept;

  std::vector<Vertex> layer_vertices(Layer layer) const;

  /// X_i -> i, U_i -> n+i, V_i -> 2n+i, Y_i -> 3n+i.
  Index serial(const Vertex& v) const noexcept {
    return static_cast<Index>(v.layer) * n() + v.index;
  }
  /// Inverse of serial(); nullopt outside [0, 4n).
  std::optional<Vertex> from_serial(Index id) const noexcept;

  /// Every edge once as a serial pair (lo, hi), sorted.
  std::vector<Edge> edges() const;

 private:
  GraphParams params_;
};

/// "x0", "u12", ...
std::string label(const Vertex& v);

}  // namespace dpham

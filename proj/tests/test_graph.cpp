#include <gtest/gtest.h>

#include <set>

#include "dpham/errors.hpp"
#include "dpham/graph.hpp"
#include "reference.hpp"

namespace dpham {
namespace {

std::set<Vertex> as_set(const std::array<Vertex, 3>& a) { return {a.begin(), a.end()}; }

std::set<Vertex> vset(const std::string& text) {
  const auto vs = ref::parse(text);
  return {vs.begin(), vs.end()};
}

TEST(Params, DerivedQuantities) {
  auto p73 = make_params(7, 3);
  EXPECT_EQ(p73.g(), 1);
  EXPECT_EQ(p73.k(), 0);
  EXPECT_EQ(p73.p(), 7);

  auto p93 = make_params(9, 3);
  EXPECT_EQ(p93.g(), 3);
  EXPECT_EQ(p93.k(), 1);
  EXPECT_EQ(p93.p(), 3);

  auto p82 = make_params(8, 2);
  EXPECT_EQ(p82.g(), 2);
  EXPECT_FALSE(p82.k().has_value());
  EXPECT_FALSE(p82.p().has_value());
}

TEST(Params, RejectsEachBoundSeparately) {
  auto bound_of = [](Index n, Index t) {
    try {
      make_params(n, t);
    } catch (const ParamError& e) {
      return e.bound();
    }
    ADD_FAILURE() << "accepted n=" << n << " t=" << t;
    return ParamBound::NTooSmall;
  };
  EXPECT_EQ(bound_of(2, 1), ParamBound::NTooSmall);
  EXPECT_EQ(bound_of(7, 0), ParamBound::TTooSmall);
  EXPECT_EQ(bound_of(7, -2), ParamBound::TTooSmall);
  EXPECT_EQ(bound_of(4, 2), ParamBound::TTooLarge);
  EXPECT_EQ(bound_of(7, 4), ParamBound::TTooLarge);
  EXPECT_NO_THROW(make_params(3, 1));
  EXPECT_NO_THROW(make_params(5, 2));
}

TEST(Params, OddNHasOddGcdAndOddP) {
  for (Index n = 3; n <= 99; n += 2) {
    for (Index t = 1; 2 * t < n; ++t) {
      auto p = make_params(n, t);
      EXPECT_EQ(p.g() % 2, 1);
      EXPECT_EQ(2 * *p.k() + 1, p.g());
      EXPECT_EQ(*p.p() % 2, 1);
      EXPECT_GE(*p.p(), 3);
    }
  }
}

TEST(Graph, NeighborExamples) {
  const DpGraph g73(make_params(7, 3));
  EXPECT_EQ(as_set(g73.neighbors({Layer::U, 0})), vset("X0 V3 V4"));
  EXPECT_EQ(as_set(g73.neighbors({Layer::X, 0})), vset("X6 X1 U0"));

  const DpGraph g93(make_params(9, 3));
  EXPECT_EQ(as_set(g93.neighbors({Layer::V, 2})), vset("Y2 U5 U8"));
}

TEST(Graph, AdjacencyExamples) {
  const DpGraph g(make_params(7, 3));
  EXPECT_TRUE(g.adjacent({Layer::U, 0}, {Layer::V, 3}));
  EXPECT_FALSE(g.adjacent({Layer::X, 0}, {Layer::X, 0}));
  EXPECT_FALSE(g.adjacent({Layer::X, 0}, {Layer::Y, 0}));
  EXPECT_FALSE(g.adjacent({Layer::X, 0}, {Layer::X, 7}));
}

TEST(Graph, LayerVertices) {
  const DpGraph g(make_params(3, 1));
  EXPECT_EQ(g.layer_vertices(Layer::X), ref::parse("X0 X1 X2"));
  EXPECT_EQ(g.layer_vertices(Layer::V), ref::parse("V0 V1 V2"));

  std::set<Vertex> all;
  for (Layer l : kAllLayers) {
    for (const Vertex& v : g.layer_vertices(l)) all.insert(v);
  }
  EXPECT_EQ(static_cast<Index>(all.size()), 4 * g.n());
}

TEST(Graph, SerialIds) {
  const DpGraph g(make_params(3, 1));
  EXPECT_EQ(g.serial({Layer::X, 2}), 2);
  EXPECT_EQ(g.serial({Layer::U, 0}), 3);
  EXPECT_EQ(g.serial({Layer::V, 1}), 7);
  EXPECT_EQ(g.serial({Layer::Y, 2}), 11);
  for (Index id = 0; id < g.vertex_count(); ++id) {
    EXPECT_EQ(g.serial(*g.from_serial(id)), id);
  }
  EXPECT_FALSE(g.from_serial(-1));
  EXPECT_FALSE(g.from_serial(12));
}

TEST(Graph, NegativeIndicesNormalize) {
  const DpGraph g(make_params(7, 3));
  EXPECT_EQ(g.at(Layer::U, -3), (Vertex{Layer::U, 4}));
  EXPECT_EQ(g.at(Layer::V, 17), (Vertex{Layer::V, 3}));
}

// Property sweep: regularity, symmetry, edge count and forbidden layer pairs,
// with adjacency cross-checked against the enumerated edge families.
TEST(Graph, StructuralInvariantsMatchDefinition) {
  for (Index n = 3; n <= 40; ++n) {
    for (Index t = 1; 2 * t < n; ++t) {
      const DpGraph g(make_params(n, t));
      const auto reference = ref::definition_edges(n, t);
      ASSERT_EQ(static_cast<Index>(reference.size()), 6 * n);

      Index degree_sum = 0;
      for (Index a = 0; a < g.vertex_count(); ++a) {
        const Vertex va = *g.from_serial(a);
        const auto nb = as_set(g.neighbors(va));
        ASSERT_EQ(nb.size(), 3u) << "n=" << n << " t=" << t;
        ASSERT_FALSE(nb.count(va));
        degree_sum += static_cast<Index>(nb.size());
        for (Index b = 0; b < g.vertex_count(); ++b) {
          const Vertex vb = *g.from_serial(b);
          const bool adj = g.adjacent(va, vb);
          ASSERT_EQ(adj, g.adjacent(vb, va));
          ASSERT_EQ(adj, reference.count({std::min(a, b), std::max(a, b)}) == 1)
              << "n=" << n << " t=" << t << " " << label(va) << " " << label(vb);
          if (adj) {
            const std::pair<Layer, Layer> pair = std::minmax(va.layer, vb.layer);
            ASSERT_FALSE(pair.first == pair.second &&
                         (pair.first == Layer::U || pair.first == Layer::V));
            ASSERT_FALSE(pair == std::make_pair(Layer::X, Layer::Y));
            ASSERT_FALSE(pair == std::make_pair(Layer::X, Layer::V));
            ASSERT_FALSE(pair == std::make_pair(Layer::U, Layer::Y));
          }
        }
      }
      EXPECT_EQ(degree_sum, 12 * n);
      const auto edges = g.edges();
      EXPECT_TRUE(std::equal(edges.begin(), edges.end(), reference.begin(), reference.end()));
    }
  }
}

}  // namespace
}  // namespace dpham

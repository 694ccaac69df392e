#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "prpd/error.hpp"
#include "prpd/graph.hpp"
#include "test_support.hpp"

namespace prpd {
namespace {

using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

TEST(BuildGraph, CollapsesDuplicateEdges) {
  const EdgeList edges{{0, 1}, {1, 2}, {1, 0}};
  const Graph g = build_graph(3, edges);
  EXPECT_EQ(g.num_vertices(), 3u);
  ASSERT_EQ(g.num_edges(), 2u);
  EXPECT_EQ(g.edges()[0], (Edge{0, 1}));
  EXPECT_EQ(g.edges()[1], (Edge{1, 2}));
  EXPECT_EQ(g.degree(1), 2u);
}

TEST(BuildGraph, SingleIsolatedVertex) {
  const Graph g = build_graph(1, EdgeList{});
  EXPECT_EQ(g.num_vertices(), 1u);
  EXPECT_EQ(g.num_edges(), 0u);
  EXPECT_TRUE(g.neighbors(0).empty());
}

TEST(BuildGraph, RejectsOutOfRangeEndpoint) {
  const EdgeList edges{{0, 2}};
  try {
    build_graph(2, edges);
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("(0, 2)"), std::string::npos) << e.what();
    EXPECT_NE(std::string(e.what()).find("endpoint 2 out of range"), std::string::npos) << e.what();
  }
}

TEST(BuildGraph, RejectsSelfLoop) {
  const EdgeList edges{{1, 1}};
  EXPECT_THROW(build_graph(2, edges), InputError);
}

TEST(BuildGraph, AdjacencyMatchesEdgesAndIsSorted) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = testing::random_graph(rng, 1, 20, 0.3);
    std::size_t degree_sum = 0;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      const auto nbrs = g.neighbors(v);
      EXPECT_TRUE(std::is_sorted(nbrs.begin(), nbrs.end()));
      for (VertexId w : nbrs) {
        EXPECT_TRUE(std::binary_search(g.edges().begin(), g.edges().end(), Edge{std::min(v, w), std::max(v, w)}));
      }
      degree_sum += nbrs.size();
    }
    EXPECT_EQ(degree_sum, 2 * g.num_edges());
  }
}

TEST(BuildGraph, RoundTripIsOrderIndependent) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = testing::random_graph(rng, 2, 15, 0.4);
    EdgeList shuffled;
    for (const Edge& e : g.edges()) {
      shuffled.emplace_back(e.v, e.u);
      if (rng() % 2) shuffled.emplace_back(e.u, e.v);
    }
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const Graph h = build_graph(g.num_vertices(), shuffled);
    EXPECT_TRUE(std::equal(g.edges().begin(), g.edges().end(), h.edges().begin(), h.edges().end()));
  }
}

TEST(VertexOrder, SortsByValue) {
  EXPECT_EQ(vertex_order(ScalarField({0.5, 0.2, 0.3})), (std::vector<VertexId>{1, 2, 0}));
}

TEST(VertexOrder, BreaksTiesById) {
  EXPECT_EQ(vertex_order(ScalarField({0.4, 0.4, 0.1})), (std::vector<VertexId>{2, 0, 1}));
}

TEST(VertexOrder, EmptyField) {
  const Graph g = build_graph(0, EdgeList{});
  EXPECT_TRUE(vertex_order(g, ScalarField{}).empty());
}

TEST(VertexOrder, RejectsLengthMismatch) {
  const Graph g = build_graph(3, EdgeList{{0, 1}});
  EXPECT_THROW(vertex_order(g, ScalarField({0.1, 0.2})), InputError);
}

TEST(VertexOrder, IsBijection) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const auto field = testing::tied_field(rng, 1 + rng() % 30, 4);
    auto order = vertex_order(field);
    for (std::size_t i = 1; i < order.size(); ++i) EXPECT_TRUE(field.precedes(order[i - 1], order[i]));
    std::sort(order.begin(), order.end());
    for (std::size_t i = 0; i < order.size(); ++i) EXPECT_EQ(order[i], i);
  }
}

TEST(ConnectedComponents, Path) {
  const Graph g = build_graph(3, EdgeList{{0, 1}, {1, 2}});
  EXPECT_EQ(connected_components(g), (std::vector<std::uint32_t>{0, 0, 0}));
}

TEST(ConnectedComponents, IsolatedVertex) {
  const Graph g = build_graph(3, EdgeList{{0, 1}});
  EXPECT_EQ(connected_components(g), (std::vector<std::uint32_t>{0, 0, 1}));
}

TEST(ConnectedComponents, Empty) {
  EXPECT_TRUE(connected_components(build_graph(0, EdgeList{})).empty());
}

TEST(ConnectedComponents, LabelsFollowSmallestVertex) {
  const Graph g = build_graph(5, EdgeList{{3, 4}, {1, 2}, {0, 4}});
  EXPECT_EQ(connected_components(g), (std::vector<std::uint32_t>{0, 1, 1, 0, 0}));
}

TEST(ConnectedComponents, CountMatchesUnionCount) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = testing::random_graph(rng, 1, 25, 0.08);
    // Plain quick-union, independent of the library.
    std::vector<VertexId> parent(g.num_vertices());
    std::iota(parent.begin(), parent.end(), VertexId{0});
    auto root = [&](VertexId v) {
      while (parent[v] != v) v = parent[v];
      return v;
    };
    std::size_t unions = 0;
    for (const Edge& e : g.edges()) {
      const auto a = root(e.u);
      const auto b = root(e.v);
      if (a != b) {
        parent[a] = b;
        ++unions;
      }
    }
    EXPECT_EQ(count_components(g), g.num_vertices() - unions);
    const auto labels = connected_components(g);
    for (const Edge& e : g.edges()) EXPECT_EQ(labels[e.u], labels[e.v]);
  }
}

}  // namespace
}  // namespace prpd

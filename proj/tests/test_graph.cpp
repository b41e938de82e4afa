#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "error.hpp"
#include "generate.hpp"
#include "graph.hpp"
#include "support/oracles.hpp"

using namespace stc;

namespace {

Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph clique(int n) {
  Graph g(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) g.add_edge(a, b);
  return g;
}

VertexSet set_of(int n, std::initializer_list<int> xs) {
  VertexSet s(n);
  for (int x : xs) s.insert(x);
  return s;
}

// Components of the tree minus e, recomputed by plain flood fill.
std::vector<int> side_labels(const Graph& g, const SpanningTree& t, int cut) {
  std::vector<int> label(g.vertex_count(), -1);
  int next = 0;
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (label[s] >= 0) continue;
    std::vector<int> stack{s};
    label[s] = next;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int e : t.edges()) {
        if (e == cut) continue;
        const Edge& x = g.edge(e);
        if (x.u != v && x.v != v) continue;
        int w = x.other(v);
        if (label[w] < 0) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

}  // namespace

TEST(Graph, RejectsSelfLoopsAndBadWeights) {
  Graph g(3);
  EXPECT_THROW(g.add_edge(1, 1), Error);
  EXPECT_THROW(g.add_edge(0, 3), Error);
  EXPECT_THROW(g.add_edge(0, 1, {0, 1}), Error);
  EXPECT_THROW(g.add_edge(0, 1, {3, 2}), Error);
  EXPECT_EQ(g.add_edge(0, 1, {2, 5}), 0);
  EXPECT_EQ(g.add_edge(0, 1), 1);  // parallel edges are fine
}

TEST(Graph, CutEdgesExamples) {
  Graph tri = cycle(3);
  EXPECT_EQ(cut_edges(tri, set_of(3, {0})), (std::vector<int>{0, 2}));
  Graph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  EXPECT_EQ(cut_edges(path, set_of(3, {0, 1})), (std::vector<int>{1}));
  EXPECT_EQ(cut_edges(cycle(4), set_of(4, {0, 1})).size(), 2u);
}

TEST(Graph, CutEdgesRejectsTrivialShores) {
  Graph tri = cycle(3);
  try {
    cut_edges(tri, VertexSet(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidShore);
  }
  EXPECT_THROW(cut_edges(tri, VertexSet::full(3)), Error);
}

TEST(Graph, CutSizeMatchesEdgeScanOnEveryShoreOfC4) {
  Graph g = cycle(4);
  for (uint32_t mask = 1; mask < 15; ++mask) {
    VertexSet s(4);
    for (int v = 0; v < 4; ++v)
      if (mask >> v & 1) s.insert(v);
    int expect = 0;
    for (const Edge& e : g.edges()) expect += ((mask >> e.u & 1) != (mask >> e.v & 1));
    EXPECT_EQ(static_cast<int>(cut_edges(g, s).size()), expect);
    EXPECT_EQ(weighted_cut_size(g, s), expect);
    EXPECT_EQ(cut_edges(g, s), cut_edges(g, s.complement()));
  }
}

TEST(Graph, WeightedCutSizeCountsLightWeight) {
  Graph tri = cycle(3);
  EXPECT_EQ(weighted_cut_size(tri, set_of(3, {0})), 2);
  Graph two(2);
  two.add_edge(0, 1, {2, 5});
  EXPECT_EQ(weighted_cut_size(two, set_of(2, {0})), 2);
}

TEST(Graph, WeightedDegree) {
  Graph g(3);
  g.add_edge(0, 1, {2, 4});
  g.add_edge(0, 1);
  EXPECT_EQ(weighted_degree(g, 2), 0);
  EXPECT_EQ(weighted_degree(g, 0), 3);
  EXPECT_THROW(weighted_degree(g, 3), Error);
}

TEST(Graph, TreeShoresOfStarAndPath) {
  Graph star(4);
  for (int i = 1; i < 4; ++i) star.add_edge(0, i);
  SpanningTree t(star, {0, 1, 2});
  for (int e = 0; e < 3; ++e) {
    auto [a, b] = tree_shores(star, t, e);
    VertexSet leaf = a.contains(0) ? b : a;
    EXPECT_EQ(leaf.members(), (std::vector<int>{e + 1}));
  }
  Graph path(4);
  for (int i = 0; i < 3; ++i) path.add_edge(i, i + 1);
  SpanningTree p(path, {0, 1, 2});
  auto [a, b] = tree_shores(path, p, 1);
  EXPECT_EQ(a.members(), (std::vector<int>{0, 1}));
  EXPECT_EQ(b.members(), (std::vector<int>{2, 3}));
}

TEST(Graph, TreeShoresRejectNonTreeEdge) {
  Graph g = cycle(4);
  SpanningTree t(g, {0, 1, 2});
  EXPECT_THROW(tree_shores(g, t, 3), Error);
  EXPECT_THROW(edge_congestion(g, t, 3), Error);
}

TEST(Graph, SpanningTreeValidation) {
  Graph g = cycle(4);
  EXPECT_THROW(SpanningTree(g, {0, 1}), Error);
  EXPECT_THROW(SpanningTree(g, {0, 1, 1}), Error);
  EXPECT_THROW(SpanningTree(g, {0, 1, 7}), Error);
  Graph two(2);
  two.add_edge(0, 1);
  two.add_edge(0, 1);
  EXPECT_THROW(SpanningTree(two, {0, 1}), Error);
  EXPECT_NO_THROW(SpanningTree(two, {1}));
}

TEST(Graph, EdgeCongestionExamples) {
  Graph two(2);
  two.add_edge(0, 1, {1, 7});
  EXPECT_EQ(edge_congestion(two, SpanningTree(two, {0}), 0), 7);
  for (int n = 3; n <= 8; ++n) {
    Graph k = clique(n);
    std::vector<int> star(n - 1);
    std::iota(star.begin(), star.end(), 0);  // edges (0,1)..(0,n-1) come first
    SpanningTree t(k, star);
    EXPECT_EQ(edge_congestion(k, t, 0), n - 1);
    EXPECT_EQ(tree_congestion(k, t), n - 1);
  }
  Graph path(5);
  for (int i = 0; i < 4; ++i) path.add_edge(i, i + 1);
  EXPECT_EQ(tree_congestion(path, SpanningTree(path, {0, 1, 2, 3})), 1);
}

// Shores partition V, each side is connected in T, congestion >= w2, and the
// fast all-edges path agrees with the per-edge definition.
TEST(Graph, TreePropertiesOnRandomMultigraphs) {
  Rng rng(7);
  for (int round = 0; round < 60; ++round) {
    int n = rng.range(2, 9);
    Graph g = generate_k_connected(n, rng.range(1, 3), rng.next());
    for (int e = 0; e < g.edge_count(); ++e) {
      Weight a = rng.range(1, 3);
      g.set_weight(e, {a, a + rng.range(0, 4)});
    }
    std::vector<SpanningTree> trees;
    enumerate_spanning_trees(g, [&](const SpanningTree& t) {
      if (rng.below(4) == 0) trees.push_back(t);
      return trees.size() < 5;
    });
    for (const auto& t : trees) {
      auto all = all_edge_congestions(g, t);
      for (size_t i = 0; i < t.edges().size(); ++i) {
        int e = t.edges()[i];
        auto [a, b] = tree_shores(g, t, e);
        EXPECT_EQ(a.count() + b.count(), n);
        EXPECT_FALSE(a.intersects(b));
        auto label = side_labels(g, t, e);
        for (int v = 0; v < n; ++v) EXPECT_EQ(a.contains(v), label[v] == label[g.edge(e).u]);
        Weight c = edge_congestion(g, t, e);
        EXPECT_GE(c, g.edge(e).w.heavy);
        Weight expect = g.edge(e).w.heavy;
        for (int f : cut_edges(g, a))
          if (f != e) expect += g.edge(f).w.light;
        EXPECT_EQ(c, expect);
        EXPECT_EQ(all[i], c);
      }
    }
  }
}

TEST(Graph, CongestionInvariantUnderRelabelling) {
  Rng rng(11);
  for (int round = 0; round < 30; ++round) {
    int n = rng.range(3, 8);
    Graph g = generate_k_connected(n, 2, rng.next());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
    Graph h = permute_vertices(g, perm);
    enumerate_spanning_trees(g, [&](const SpanningTree& t) {
      EXPECT_EQ(tree_congestion(g, t), tree_congestion(h, SpanningTree(h, t.edges())));
      return rng.below(3) != 0;
    });
  }
}

TEST(Graph, InducedCutsOfKConnectedGraphsHaveWeightAtLeastK) {
  Rng rng(5);
  for (int round = 0; round < 40; ++round) {
    Weight k = rng.range(1, 4);
    Graph g = generate_k_connected(rng.range(3, 7), k, rng.next());
    enumerate_spanning_trees(g, [&](const SpanningTree& t) {
      for (int e : t.edges()) EXPECT_GE(weighted_cut_size(g, tree_shores(g, t, e).first), k);
      EXPECT_GE(tree_congestion(g, t), k);
      return rng.below(5) != 0;
    });
  }
}

TEST(Graph, EdgeConnectivityExamples) {
  EXPECT_EQ(edge_connectivity(cycle(5)), 2);
  EXPECT_EQ(edge_connectivity(clique(4)), 3);
  Graph split(4);
  split.add_edge(0, 1);
  split.add_edge(2, 3);
  EXPECT_EQ(edge_connectivity(split), 0);
  EXPECT_THROW(edge_connectivity(Graph(1)), Error);
}

TEST(Graph, EdgeConnectivityMatchesShoreEnumeration) {
  Rng rng(3);
  for (int round = 0; round < 150; ++round) {
    int n = rng.range(2, 12);
    Graph g(n);
    int m = rng.range(n - 1, 3 * n);
    for (int i = 0; i < m; ++i) {
      int u = rng.range(0, n - 1), v = rng.range(0, n - 2);
      if (v >= u) ++v;
      Weight w = rng.range(1, 3);
      g.add_edge(u, v, {w, w});
    }
    Weight k = 0;
    stc::testing::brute_force_min_cuts(g, &k);
    EXPECT_EQ(edge_connectivity(g), k) << "round " << round;
  }
}

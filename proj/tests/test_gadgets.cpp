#include <gtest/gtest.h>

#include "error.hpp"
#include "exact.hpp"
#include "gadgets.hpp"

using namespace stc;

namespace {

int degree(const Graph& g, int v) {
  int d = 0;
  for (const Edge& e : g.edges()) d += (e.u == v) + (e.v == v);
  return d;
}

}  // namespace

TEST(Flower, CanonicalTreeCongestionIsLPlusOne) {
  for (int l = 3; l <= 10; ++l)
    for (Weight k = 6; k <= 12; ++k) {
      Flower f = build_flower(l, k);
      EXPECT_EQ(f.graph.vertex_count(), 3 * l);
      EXPECT_EQ(f.graph.edge_count(), 4 * l);
      EXPECT_EQ(tree_congestion(f.graph, canonical_flower_tree(f)), l + 1) << "l=" << l << " K=" << k;
    }
}

TEST(Flower, FourPetalsGiveCongestionFive) {
  Flower f = build_flower(4, 8);
  SpanningTree t = canonical_flower_tree(f);
  EXPECT_EQ(tree_congestion(f.graph, t), 5);
  EXPECT_EQ(f.graph.label(f.roles.core[0]), "c1");
  EXPECT_EQ(f.graph.label(f.roles.terminal[3]), "t4");
}

TEST(Flower, DegreesAndSpokeWeights) {
  Flower f = build_flower(5, 9);
  for (int c : f.roles.core) EXPECT_EQ(degree(f.graph, c), 3);
  for (int d : f.roles.dummy) EXPECT_EQ(degree(f.graph, d), 3);
  for (int t : f.roles.terminal) EXPECT_EQ(degree(f.graph, t), 2);
  EXPECT_EQ(f.graph.edge(f.roles.edges[3]).w, (DoubleWeight{1, 1}));
  for (int i = 1; i < 5; ++i) EXPECT_EQ(f.graph.edge(f.roles.edges[4 * i + 3]).w, (DoubleWeight{1, 8}));
}

TEST(Flower, RejectsSmallParameters) {
  EXPECT_THROW(build_flower(2, 8), Error);
  EXPECT_THROW(build_flower(4, 2), Error);
}

TEST(Flower, CoreIntegrity) {
  Graph host;
  FlowerEmbedding f = add_flower(host, 4, 8, "F.");
  int h = host.add_vertex("h");
  std::vector<int> links;
  for (int t : f.terminal) links.push_back(host.add_edge(h, t));

  std::vector<int> edges = canonical_flower_edges(f);
  edges.push_back(links[0]);
  SpanningTree canonical(host, edges);
  EXPECT_TRUE(check_core_integrity(host, f, canonical, links[0]));
  EXPECT_THROW(check_core_integrity(host, f, canonical, f.edges[0]), Error);

  // Terminals hang off h and each petal c_i d_i t_i is a separate branch.
  std::vector<int> split = links;
  for (int i = 0; i < 4; ++i) {
    split.push_back(f.edges[4 * i + 1]);
    split.push_back(f.edges[4 * i + 3]);
  }
  SpanningTree broken(host, split);
  EXPECT_FALSE(check_core_integrity(host, f, broken, links[0]));
}

TEST(Bottleneck, SizesAndDegrees) {
  for (int w = 3; w <= 8; ++w) {
    Bottleneck b = build_bottleneck(w);
    EXPECT_EQ(b.graph.vertex_count(), 2 * w * w - 2);
    EXPECT_TRUE(is_connected(b.graph));
    for (int v = 0; v < b.graph.vertex_count(); ++v) {
      EXPECT_LE(degree(b.graph, v), 3);
      EXPECT_GE(degree(b.graph, v), 2);
    }
    EXPECT_EQ(degree(b.graph, b.s), 2);
    EXPECT_EQ(degree(b.graph, b.t), 2);
  }
  Bottleneck b3 = build_bottleneck(3);
  EXPECT_EQ(b3.graph.vertex_count(), 16);
  EXPECT_EQ(b3.graph.edge_count(), 19);
  EXPECT_THROW(build_bottleneck(2), Error);
}

TEST(Bottleneck, CanonicalTreeCongestionIsW) {
  for (int w = 3; w <= 8; ++w) {
    Bottleneck b = build_bottleneck(w);
    EXPECT_EQ(tree_congestion(b.graph, canonical_bottleneck_tree(b)), w) << "w=" << w;
  }
}

TEST(Bottleneck, ThreeWideIsOptimalAndBlocksPaths) {
  Bottleneck b = build_bottleneck(3);
  EXPECT_EQ(stc_exact(b.graph).value, 3);
  EXPECT_TRUE(bottleneck_path_property(b.graph, b.s, b.t, 3));
  EXPECT_FALSE(bottleneck_path_property(b.graph, b.s, b.t, 4));
  EXPECT_THROW(bottleneck_path_property(b.graph, b.s, b.s, 3), Error);
}

TEST(WeightGadget, Shape) {
  WeightGadget g = build_weight_gadget(2, 4);
  EXPECT_EQ(g.copies.size(), 2u);
  EXPECT_EQ(g.graph.vertex_count(), 2 + 2 * 16);
  EXPECT_EQ(degree(g.graph, g.s_port), 2);
  EXPECT_EQ(degree(g.graph, g.t_port), 2);
  for (int v = 2; v < g.graph.vertex_count(); ++v) EXPECT_LE(degree(g.graph, v), 3);
  EXPECT_TRUE(g.graph.all_unweighted());
  EXPECT_THROW(build_weight_gadget(1, 2), Error);
  EXPECT_THROW(build_weight_gadget(0, 3), Error);
}

TEST(Expand, Preconditions) {
  Graph g(2);
  g.add_edge(0, 1, {1, 2});
  try {
    expand_double_weights(g, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPrecondition);
  }
  Graph wide(2);
  wide.add_edge(0, 1, {1, 5});
  EXPECT_THROW(expand_double_weights(wide, 5), Error);
  EXPECT_NO_THROW(expand_double_weights(wide, 6));
  EXPECT_THROW(expand_double_weights(wide, 2), Error);
}

TEST(Expand, KeepsHostVerticesAndMultiplicities) {
  Graph g(3);
  g.set_label(0, "a");
  g.add_edge(0, 1, {3, 3});
  g.add_edge(1, 2, {1, 3});
  g.add_edge(0, 2);
  Graph par = expand_double_weights(g, 4);
  EXPECT_EQ(par.label(0), "a");
  EXPECT_EQ(par.vertex_count(), 3 + 16);
  EXPECT_EQ(par.edge_count(), 3 + 1 + 19 + 2);
  EXPECT_TRUE(par.all_unweighted());
  Graph paths = expand_double_weights(g, 4, MultiEdgeMode::kPaths);
  EXPECT_EQ(paths.vertex_count(), 3 + 3 + 16);
  EXPECT_EQ(paths.edge_count(), 6 + 1 + 19 + 2);
}

// An (a:b) edge and its gadget agree on whether stc <= K.
TEST(Expand, PreservesTheDecisionOnATriangle) {
  for (Weight k : {4, 5}) {
    Graph g(3);
    g.add_edge(0, 1, {1, 3});
    g.add_edge(1, 2, {2, 2});
    g.add_edge(0, 2, {2, 2});
    bool host_yes = stc_exact(g).value <= k;
    Graph x = expand_double_weights(g, k);
    EXPECT_EQ(stc_decide(x, k).outcome == DecideOutcome::kYes, host_yes) << "K=" << k;
  }
}

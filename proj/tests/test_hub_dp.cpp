#include <gtest/gtest.h>

#include "error.hpp"
#include "exact.hpp"
#include "generate.hpp"
#include "hub_dp.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace stc;

namespace {

Graph clique(int n) {
  Graph g(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) g.add_edge(a, b);
  return g;
}

std::vector<Graph> mixed_corpus(uint64_t seed, int count) {
  Rng rng(seed);
  std::vector<Graph> out;
  for (int i = 0; i < count; ++i) {
    int n = rng.range(3, 8);
    if (i % 2 && n >= 4)
      out.push_back(stc::testing::ring_multigraph(n, 2 * rng.range(1, 2), rng.next()));
    else
      out.push_back(generate_k_connected(n, rng.range(2, 4), rng.next()));
  }
  return out;
}

}  // namespace

TEST(HubDp, HubSetsMatchOracle) {
  int checked = 0, cycle_entries = 0;
  for (const Graph& g : mixed_corpus(101, 160)) {
    Decision d = decide_stc_equals_k(g);
    if (!d.run) continue;
    stc::testing::HubOracle oracle(g, d.k);
    for (size_t e = 0; e < d.run->tree.entries.size(); ++e) {
      const CutEntry& entry = d.run->tree.entries[e];
      HubSet want;
      for (int w = 0; w < g.vertex_count(); ++w)
        if (oracle.is_hub(entry.shore, w)) want.push_back(w);
      EXPECT_EQ(d.run->hubs[e], want) << "entry " << e;
      ++checked;
      cycle_entries += entry.kind == CutKind::kCycle;
    }
  }
  EXPECT_GT(checked, 300);
  EXPECT_GT(cycle_entries, 20);
}

TEST(HubDp, HubWitnessesAreSafeTrees) {
  for (const Graph& g : mixed_corpus(202, 100)) {
    Decision d = decide_stc_equals_k(g);
    if (!d.run) continue;
    for (size_t e = 0; e < d.run->tree.entries.size(); ++e)
      for (int w : d.run->hubs[e]) {
        auto edges = hub_witness(g, *d.run, static_cast<int>(e), w);
        VertexSet span = d.run->tree.entries[e].shore;
        span.insert(w);
        EXPECT_EQ(static_cast<int>(edges.size()), span.count() - 1);
        EXPECT_TRUE(is_safe_tree(g, d.k, edges, w));
      }
  }
}

TEST(HubDp, DecisionAgreesWithExactOptimum) {
  int yes = 0, no = 0;
  for (const Graph& g : mixed_corpus(303, 200)) {
    Decision d = decide_stc_equals_k(g);
    EXPECT_EQ(d.k, edge_connectivity(g));
    Weight opt = stc_exact(g).value;
    EXPECT_EQ(d.yes(), opt == d.k) << verdict_name(d.verdict);
    if (d.yes()) {
      ++yes;
      SpanningTree t = reconstruct_witness_tree(g, d);
      EXPECT_EQ(tree_congestion(g, t), d.k);
    } else {
      ++no;
    }
  }
  EXPECT_GT(yes, 20);
  EXPECT_GT(no, 20);
}

TEST(HubDp, DecisionAgreesOnSmallSimpleGraphs) {
  for (int n = 2; n <= 5; ++n)
    for (const Graph& g : stc::testing::all_connected_simple(n)) {
      Decision d = decide_stc_equals_k(g);
      EXPECT_EQ(d.yes(), stc_exact(g).value == d.k);
    }
}

TEST(HubDp, Verdicts) {
  EXPECT_EQ(decide_stc_equals_k(clique(4)).verdict, Verdict::kYes);

  Graph merged(3);
  for (int i = 0; i < 3; ++i) merged.add_edge(0, 1);
  merged.add_edge(0, 2);
  merged.add_edge(1, 2);
  EXPECT_EQ(decide_stc_equals_k(merged).verdict, Verdict::kPreimageViolation);

  // Two K4s joined by a matching of size 2. Each K4 collapses to one cactus
  // node. A graph passing the preimage check always has a degree-K vertex,
  // since every cactus leaf is a singleton shore.
  Graph twin(8);
  for (int base : {0, 4})
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) twin.add_edge(base + a, base + b);
  twin.add_edge(0, 4);
  twin.add_edge(1, 5);
  Decision d = decide_stc_equals_k(twin);
  EXPECT_EQ(d.k, 2);
  EXPECT_EQ(d.verdict, Verdict::kPreimageViolation);
  EXPECT_GT(stc_exact(twin).value, 2);

  Graph k33(6);
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 6; ++b) k33.add_edge(a, b);
  Decision bip = decide_stc_equals_k(k33);
  EXPECT_EQ(bip.k, 3);
  EXPECT_EQ(bip.verdict, Verdict::kRootNotHub);
  EXPECT_GT(stc_exact(k33).value, 3);

  EXPECT_STREQ(verdict_name(Verdict::kRootNotHub), "root-not-hub");
  EXPECT_STREQ(verdict_name(Verdict::kNoRoot), "no-root");
}

TEST(HubDp, RequiresCanonicalWeights) {
  Graph g(2);
  g.add_edge(0, 1, {1, 2});
  EXPECT_THROW(decide_stc_equals_k(g), Error);
  Graph split(3);
  split.add_edge(0, 1);
  EXPECT_THROW(decide_stc_equals_k(split), Error);
}

TEST(HubDp, SafeTreeCheck) {
  Graph c4(4);
  for (int i = 0; i < 4; ++i) c4.add_edge(i, (i + 1) % 4);
  // Path 0-1-2-3 rooted at 0: every side away from the root is cut by 2 edges.
  EXPECT_TRUE(is_safe_tree(c4, 2, {0, 1, 2}, 0));
  // Rooted at 1, the side {2,3} is fine but so is {0}; still safe.
  EXPECT_TRUE(is_safe_tree(c4, 2, {0, 1, 2}, 1));
  // Against K = 1 nothing is safe.
  EXPECT_FALSE(is_safe_tree(c4, 1, {0, 1, 2}, 0));
}

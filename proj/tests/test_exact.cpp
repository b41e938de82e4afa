#include <gtest/gtest.h>

#include <set>

#include "error.hpp"
#include "exact.hpp"
#include "generate.hpp"
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

Graph random_weighted(Rng& rng, int n) {
  Graph g = generate_k_connected(n, rng.range(1, 3), rng.next());
  for (int e = 0; e < g.edge_count(); ++e) {
    Weight a = rng.range(1, 2);
    g.set_weight(e, {a, a + rng.range(0, 3)});
  }
  return g;
}

}  // namespace

TEST(Enumerate, CountsMatchMatrixTreeTheoremOnSimpleGraphs) {
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : stc::testing::all_connected_simple(n)) {
      int64_t count = 0;
      EXPECT_TRUE(enumerate_spanning_trees(g, [&](const SpanningTree&) {
        ++count;
        return true;
      }));
      EXPECT_EQ(count, stc::testing::matrix_tree_count(g));
    }
}

TEST(Enumerate, CountsMatchMatrixTreeTheoremOnMultigraphs) {
  Rng rng(21);
  for (int round = 0; round < 80; ++round) {
    Graph g = generate_k_connected(rng.range(2, 7), rng.range(1, 4), rng.next());
    std::set<std::vector<int>> seen;
    enumerate_spanning_trees(g, [&](const SpanningTree& t) {
      EXPECT_TRUE(seen.insert(t.edges()).second) << "tree listed twice";
      return true;
    });
    EXPECT_EQ(static_cast<int64_t>(seen.size()), stc::testing::matrix_tree_count(g));
  }
}

TEST(Enumerate, DisconnectedGraphVisitsNothing) {
  Graph g(3);
  g.add_edge(0, 1);
  bool visited = false;
  EXPECT_FALSE(enumerate_spanning_trees(g, [&](const SpanningTree&) { return visited = true; }));
  EXPECT_FALSE(visited);
}

TEST(Enumerate, EarlyStop) {
  int count = 0;
  enumerate_spanning_trees(clique(5), [&](const SpanningTree&) { return ++count < 7; });
  EXPECT_EQ(count, 7);
}

TEST(Exact, SmallKnownValues) {
  Graph c5(5);
  for (int i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
  EXPECT_EQ(stc_exact(c5).value, 2);
  for (int n = 2; n <= 6; ++n) EXPECT_EQ(stc_exact(clique(n)).value, n - 1) << "K" << n;
  Graph path(4);
  for (int i = 0; i < 3; ++i) path.add_edge(i, i + 1);
  EXPECT_EQ(stc_exact(path).value, 1);
  Graph two(2);
  two.add_edge(0, 1, {1, 7});
  EXPECT_EQ(stc_exact(two).value, 7);
}

TEST(Exact, AgreesWithEnumerationOnWeightedMultigraphs) {
  Rng rng(33);
  for (int round = 0; round < 120; ++round) {
    Graph g = random_weighted(rng, rng.range(2, 7));
    auto r = stc_exact(g);
    EXPECT_EQ(r.value, stc::testing::brute_force_stc(g)) << "round " << round;
    EXPECT_EQ(tree_congestion(g, r.witness), r.value);
  }
}

TEST(Exact, DecideBracketsTheOptimum) {
  Rng rng(8);
  for (int round = 0; round < 60; ++round) {
    Graph g = random_weighted(rng, rng.range(3, 7));
    Weight opt = stc_exact(g).value;
    auto yes = stc_decide(g, opt);
    ASSERT_EQ(yes.outcome, DecideOutcome::kYes);
    ASSERT_TRUE(yes.witness);
    EXPECT_LE(tree_congestion(g, *yes.witness), opt);
    EXPECT_EQ(stc_decide(g, opt - 1).outcome, DecideOutcome::kNo);
  }
}

TEST(Exact, ParallelSearchGivesTheSameAnswer) {
  Rng rng(44);
  for (int round = 0; round < 25; ++round) {
    Graph g = random_weighted(rng, rng.range(4, 8));
    SearchOptions one, four;
    four.jobs = 4;
    auto a = stc_exact(g, one);
    auto b = stc_exact(g, four);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.witness, b.witness);
  }
}

TEST(Exact, BudgetExhaustionIsReported) {
  SearchOptions tiny;
  tiny.max_nodes = 3;
  Graph g = clique(7);
  EXPECT_EQ(stc_decide(g, 2, tiny).outcome, DecideOutcome::kBudgetExceeded);
  try {
    stc_exact(g, tiny);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBudgetExceeded);
  }
}

TEST(Exact, DisconnectedGraphIsAnError) {
  Graph g(3);
  g.add_edge(0, 1);
  EXPECT_THROW(stc_exact(g), Error);
}

#include <gtest/gtest.h>

#include <cstring>
#include <string>
#include <vector>

#include "stc/stc.h"

namespace {

// Takes ownership of a library string.
std::string take(char* s) {
  std::string out = s ? s : "";
  stc_string_free(s);
  return out;
}

stc_graph* parse(const char* text) {
  stc_graph* g = nullptr;
  EXPECT_EQ(stc_graph_parse(text, &g), STC_OK) << stc_last_error();
  return g;
}

const char* kK4 = "stcgraph 4 6\n0 1 1\n0 2 1\n0 3 1\n1 2 1\n1 3 1\n2 3 1\n";
const char* kC5 = "stcgraph 5 5\n0 1 1\n1 2 1\n2 3 1\n3 4 1\n4 0 1\n";

}  // namespace

TEST(CApi, BuildAndInspectGraph) {
  stc_graph* g = nullptr;
  ASSERT_EQ(stc_graph_new(3, &g), STC_OK);
  int e = -1;
  EXPECT_EQ(stc_graph_add_edge(g, 0, 1, 1, 5, &e), STC_OK);
  EXPECT_EQ(e, 0);
  EXPECT_EQ(stc_graph_add_edge(g, 1, 2, 2, 2, &e), STC_OK);
  EXPECT_EQ(stc_graph_vertex_count(g), 3);
  EXPECT_EQ(stc_graph_edge_count(g), 2);
  int u, v;
  int64_t w1, w2;
  ASSERT_EQ(stc_graph_edge(g, 0, &u, &v, &w1, &w2), STC_OK);
  EXPECT_EQ(u, 0);
  EXPECT_EQ(v, 1);
  EXPECT_EQ(w1, 1);
  EXPECT_EQ(w2, 5);
  EXPECT_EQ(take([&] {
              char* s = nullptr;
              stc_graph_serialize(g, 1, &s);
              return s;
            }()),
            "stcgraph 3 2\n0 1 1 5\n1 2 2\n");
  EXPECT_EQ(stc_graph_add_edge(g, 1, 1, 1, 1, &e), STC_ERR_INVALID_ARGUMENT);
  EXPECT_NE(std::strlen(stc_last_error()), 0u);
  EXPECT_EQ(stc_graph_edge(g, 7, &u, &v, &w1, &w2), STC_ERR_INVALID_ARGUMENT);
  stc_graph_free(g);
}

TEST(CApi, ParseErrorsCarryPosition) {
  stc_graph* g = nullptr;
  EXPECT_EQ(stc_graph_parse("stcgraph 2 1\n0 1 3 2\n", &g), STC_ERR_PARSE);
  EXPECT_EQ(g, nullptr);
  EXPECT_NE(std::string(stc_last_error()).find("line 2:7"), std::string::npos) << stc_last_error();
  EXPECT_EQ(stc_graph_parse(nullptr, &g), STC_ERR_INVALID_ARGUMENT);
}

TEST(CApi, ExactAndDecide) {
  stc_graph* c5 = parse(kC5);
  int64_t value = 0;
  stc_tree* witness = nullptr;
  ASSERT_EQ(stc_exact(c5, 0, 1, &value, &witness), STC_OK);
  EXPECT_EQ(value, 2);
  int64_t cong = 0;
  EXPECT_EQ(stc_tree_congestion(c5, witness, &cong), STC_OK);
  EXPECT_EQ(cong, 2);
  EXPECT_EQ(stc_tree_edge_count(witness), 4u);
  stc_tree_free(witness);

  int found = -1;
  EXPECT_EQ(stc_exact_decide(c5, 1, 0, 1, &found, nullptr), STC_OK);
  EXPECT_EQ(found, 0);

  stc_graph* k4 = parse(kK4);
  stc_verdict verdict;
  int64_t k = 0;
  stc_tree* tree = nullptr;
  ASSERT_EQ(stc_decide(k4, &verdict, &k, &tree), STC_OK);
  EXPECT_EQ(verdict, STC_VERDICT_YES);
  EXPECT_EQ(k, 3);
  ASSERT_NE(tree, nullptr);
  EXPECT_EQ(stc_tree_congestion(k4, tree, &cong), STC_OK);
  EXPECT_EQ(cong, 3);
  stc_tree_free(tree);
  EXPECT_STREQ(stc_verdict_name(STC_VERDICT_ROOT_NOT_HUB), "root-not-hub");

  EXPECT_EQ(stc_exact(k4, 2, 1, &value, nullptr), STC_ERR_BUDGET_EXCEEDED);
  stc_graph_free(c5);
  stc_graph_free(k4);
}

TEST(CApi, TreesAreValidated) {
  stc_graph* c5 = parse(kC5);
  int cyc[] = {0, 1, 2, 3};
  int bad[] = {0, 1, 2};
  stc_tree* t = nullptr;
  EXPECT_EQ(stc_tree_new(c5, bad, 3, &t), STC_ERR_NOT_A_TREE);
  ASSERT_EQ(stc_tree_new(c5, cyc, 4, &t), STC_OK);
  int out[8];
  EXPECT_EQ(stc_tree_edges(t, out, 8), 4u);
  EXPECT_EQ(out[3], 3);
  int64_t c = 0;
  EXPECT_EQ(stc_tree_edge_congestion(c5, t, 0, &c), STC_OK);
  EXPECT_EQ(c, 2);
  EXPECT_EQ(stc_tree_edge_congestion(c5, t, 4, &c), STC_ERR_INVALID_ARGUMENT);

  char* text = nullptr;
  ASSERT_EQ(stc_tree_serialize(c5, t, &text), STC_OK);
  std::string s = take(text);
  stc_tree* back = nullptr;
  ASSERT_EQ(stc_tree_parse(s.c_str(), c5, &back), STC_OK);
  EXPECT_EQ(stc_tree_edge_count(back), 4u);
  stc_tree_free(back);
  stc_tree_free(t);
  stc_graph_free(c5);
}

TEST(CApi, DisconnectedGraph) {
  stc_graph* g = parse("stcgraph 3 1\n0 1 1\n");
  int64_t v = 0;
  EXPECT_EQ(stc_exact(g, 0, 1, &v, nullptr), STC_ERR_DISCONNECTED);
  stc_graph_free(g);
}

TEST(CApi, Gadgets) {
  stc_graph* f = nullptr;
  stc_tree* ft = nullptr;
  ASSERT_EQ(stc_gadget_flower(4, 8, &f, &ft), STC_OK);
  int64_t c = 0;
  EXPECT_EQ(stc_tree_congestion(f, ft, &c), STC_OK);
  EXPECT_EQ(c, 5);
  stc_tree_free(ft);
  stc_graph_free(f);

  stc_graph* b = nullptr;
  stc_tree* bt = nullptr;
  int s = -1, t = -1;
  ASSERT_EQ(stc_gadget_bottleneck(3, &b, &bt, &s, &t), STC_OK);
  EXPECT_EQ(stc_graph_vertex_count(b), 16);
  EXPECT_NE(s, t);
  stc_tree_free(bt);
  stc_graph_free(b);

  stc_graph* w = nullptr;
  EXPECT_EQ(stc_gadget_weight(1, 2, &w, &s, &t), STC_ERR_INVALID_ARGUMENT);
  ASSERT_EQ(stc_gadget_weight(1, 3, &w, &s, &t), STC_OK);
  EXPECT_EQ(stc_graph_vertex_count(w), 18);
  stc_graph_free(w);

  stc_graph* host = parse("stcgraph 2 1\n0 1 1 2\n");
  stc_graph* x = nullptr;
  EXPECT_EQ(stc_expand(host, 4, 0, &x), STC_ERR_PRECONDITION);
  stc_graph_free(host);
}

TEST(CApi, ReductionRoundTrip) {
  stc_sat* sat = nullptr;
  ASSERT_EQ(stc_sat_generate(12, 3, &sat), STC_OK);
  for (stc_reduction_kind kind : {STC_REDUCTION_DEGREE3, STC_REDUCTION_DEGREE4}) {
    stc_reduction* r = nullptr;
    ASSERT_EQ(stc_reduce(sat, kind, &r), STC_OK) << stc_last_error();
    EXPECT_GT(stc_reduction_k(r), 0);
    const stc_graph* g = stc_reduction_graph(r);

    char* labels = nullptr;
    ASSERT_EQ(stc_reduction_labels(r, &labels), STC_OK);
    std::string label_text = take(labels);
    stc_reduction* loaded = nullptr;
    ASSERT_EQ(stc_reduction_load(g, label_text.c_str(), &loaded), STC_OK) << stc_last_error();
    EXPECT_EQ(stc_reduction_k(loaded), stc_reduction_k(r));

    std::string all_true = "assignment 12\n";
    for (int i = 1; i <= 12; ++i) all_true += std::to_string(i) + " 1\n";
    stc_tree* t = nullptr;
    EXPECT_EQ(stc_reduction_assignment_to_tree(loaded, all_true.c_str(), &t), STC_ERR_REFUSED);
    EXPECT_NE(std::string(stc_last_error()).find("2n"), std::string::npos);
    stc_reduction_free(loaded);
    stc_reduction_free(r);
  }
  stc_sat_free(sat);

  stc_sat* bad = nullptr;
  EXPECT_EQ(stc_sat_parse("m2p1n 6\n3p 1 2 3\n", &bad), STC_ERR_PRECONDITION);
}

TEST(CApi, SatisfiableRoundTripWithAudit) {
  // Search seeds for a satisfiable instance through the text interface.
  for (uint64_t seed = 1; seed < 40; ++seed) {
    stc_sat* sat = nullptr;
    ASSERT_EQ(stc_sat_generate(12, seed, &sat), STC_OK);
    stc_reduction* r = nullptr;
    ASSERT_EQ(stc_reduce(sat, STC_REDUCTION_DEGREE4, &r), STC_OK);
    bool done = false;
    for (uint32_t mask = 0; mask < (1u << 12) && !done; ++mask) {
      std::string a = "assignment 12\n";
      for (int i = 0; i < 12; ++i) a += std::to_string(i + 1) + (mask >> i & 1 ? " 1\n" : " 0\n");
      stc_tree* t = nullptr;
      stc_status st = stc_reduction_assignment_to_tree(r, a.c_str(), &t);
      if (st == STC_ERR_REFUSED) continue;
      ASSERT_EQ(st, STC_OK) << stc_last_error();
      int64_t c = 0;
      EXPECT_EQ(stc_tree_congestion(stc_reduction_graph(r), t, &c), STC_OK);
      EXPECT_LE(c, stc_reduction_k(r));
      char* back = nullptr;
      ASSERT_EQ(stc_reduction_tree_to_assignment(r, t, &back), STC_OK);
      EXPECT_EQ(take(back).rfind("assignment 12\n", 0), 0u);
      int all_pass = 0;
      char* report = nullptr;
      ASSERT_EQ(stc_reduction_audit(r, t, &all_pass, &report), STC_OK);
      EXPECT_EQ(all_pass, 1);
      EXPECT_EQ(take(report).find("FAIL"), std::string::npos);
      stc_tree_free(t);
      done = true;
    }
    stc_reduction_free(r);
    stc_sat_free(sat);
    if (done) return;
  }
  FAIL() << "no satisfiable instance";
}

TEST(CApi, GenerateAndCactus) {
  stc_graph* g = nullptr;
  ASSERT_EQ(stc_graph_generate(6, 2, 5, &g), STC_OK);
  int64_t k = 0;
  EXPECT_EQ(stc_graph_edge_connectivity(g, &k), STC_OK);
  EXPECT_EQ(k, 2);
  char* text = nullptr;
  ASSERT_EQ(stc_cactus(g, &text), STC_OK);
  EXPECT_EQ(take(text).rfind("cactus nodes", 0), 0u);
  stc_graph_free(g);
  EXPECT_EQ(stc_graph_generate(0, 2, 5, &g), STC_ERR_INVALID_ARGUMENT);
}

TEST(CApi, NullHandlesAreRejected) {
  int64_t v = 0;
  EXPECT_EQ(stc_exact(nullptr, 0, 1, &v, nullptr), STC_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(stc_graph_new(-1, nullptr), STC_ERR_INVALID_ARGUMENT);
  stc_graph_free(nullptr);
  stc_tree_free(nullptr);
  stc_string_free(nullptr);
}

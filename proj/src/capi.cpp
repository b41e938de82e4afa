#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "cactus.hpp"
#include "error.hpp"
#include "exact.hpp"
#include "formats.hpp"
#include "gadgets.hpp"
#include "generate.hpp"
#include "hub_dp.hpp"
#include "reduction.hpp"
#include "stc/stc.h"

struct stc_graph {
  stc::Graph g;
};
struct stc_tree {
  stc::SpanningTree t;
};
struct stc_sat {
  stc::SatInstance s;
};
struct stc_reduction {
  stc::ReductionArtifact art;
  stc_graph graph;
};

namespace {

thread_local std::string last_error;

stc_status status_of(stc::ErrorCode c) { return static_cast<stc_status>(static_cast<int>(c)); }

template <class F>
stc_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return STC_OK;
  } catch (const stc::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return STC_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return STC_ERR_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (!p) stc::fail(stc::ErrorCode::kInvalidArgument, std::string(what) + " is NULL");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Trees carry no graph identity; recheck against the graph at every use.
stc::SpanningTree checked(const stc_graph* g, const stc_tree* t) {
  need(g, "graph");
  need(t, "tree");
  return stc::SpanningTree(g->g, t->t.edges());
}

stc::SearchOptions search_options(uint64_t max_nodes, int jobs) {
  stc::SearchOptions o;
  if (max_nodes) o.max_nodes = max_nodes;
  if (jobs < 1) stc::fail(stc::ErrorCode::kInvalidArgument, "jobs must be at least 1");
  o.jobs = jobs;
  return o;
}

void put_tree(stc_tree** out, stc::SpanningTree t) {
  if (out) *out = new stc_tree{std::move(t)};
}

}  // namespace

extern "C" {

const char* stc_last_error(void) { return last_error.c_str(); }
void stc_string_free(char* s) { std::free(s); }

stc_status stc_graph_new(int vertex_count, stc_graph** out) {
  return guarded([&] {
    need(out, "out");
    if (vertex_count < 0) stc::fail(stc::ErrorCode::kInvalidArgument, "negative vertex count");
    *out = new stc_graph{stc::Graph(vertex_count)};
  });
}

void stc_graph_free(stc_graph* g) { delete g; }

stc_status stc_graph_add_edge(stc_graph* g, int u, int v, int64_t w1, int64_t w2, int* edge_out) {
  return guarded([&] {
    need(g, "graph");
    int e = g->g.add_edge(u, v, {w1, w2});
    if (edge_out) *edge_out = e;
  });
}

int stc_graph_vertex_count(const stc_graph* g) { return g ? g->g.vertex_count() : 0; }
int stc_graph_edge_count(const stc_graph* g) { return g ? g->g.edge_count() : 0; }

stc_status stc_graph_edge(const stc_graph* g, int e, int* u, int* v, int64_t* w1, int64_t* w2) {
  return guarded([&] {
    need(g, "graph");
    if (e < 0 || e >= g->g.edge_count()) stc::fail(stc::ErrorCode::kInvalidArgument, "edge id out of range");
    const stc::Edge& x = g->g.edge(e);
    if (u) *u = x.u;
    if (v) *v = x.v;
    if (w1) *w1 = x.w.light;
    if (w2) *w2 = x.w.heavy;
  });
}

stc_status stc_graph_parse(const char* text, stc_graph** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    *out = new stc_graph{stc::parse_graph(text)};
  });
}

stc_status stc_graph_serialize(const stc_graph* g, int with_labels, char** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = dup(stc::serialize_graph(g->g, with_labels != 0));
  });
}

stc_status stc_graph_edge_connectivity(const stc_graph* g, int64_t* out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = stc::edge_connectivity(g->g);
  });
}

stc_status stc_graph_generate(int n, int64_t k, uint64_t seed, stc_graph** out) {
  return guarded([&] {
    need(out, "out");
    *out = new stc_graph{stc::generate_k_connected(n, k, seed)};
  });
}

stc_status stc_tree_new(const stc_graph* g, const int* edges, size_t count, stc_tree** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    if (count) need(edges, "edges");
    *out = new stc_tree{stc::SpanningTree(g->g, std::vector<int>(edges, edges + count))};
  });
}

void stc_tree_free(stc_tree* t) { delete t; }

size_t stc_tree_edge_count(const stc_tree* t) { return t ? t->t.edges().size() : 0; }

size_t stc_tree_edges(const stc_tree* t, int* edges, size_t cap) {
  if (!t || !edges) return 0;
  size_t n = std::min(cap, t->t.edges().size());
  std::copy_n(t->t.edges().begin(), n, edges);
  return n;
}

stc_status stc_tree_parse(const char* text, const stc_graph* g, stc_tree** out) {
  return guarded([&] {
    need(text, "text");
    need(g, "graph");
    need(out, "out");
    *out = new stc_tree{stc::parse_tree(text, g->g)};
  });
}

stc_status stc_tree_serialize(const stc_graph* g, const stc_tree* t, char** out) {
  return guarded([&] {
    need(out, "out");
    *out = dup(stc::serialize_tree(g->g, checked(g, t)));
  });
}

stc_status stc_tree_congestion(const stc_graph* g, const stc_tree* t, int64_t* out) {
  return guarded([&] {
    need(out, "out");
    *out = stc::tree_congestion(g->g, checked(g, t));
  });
}

stc_status stc_tree_edge_congestion(const stc_graph* g, const stc_tree* t, int e, int64_t* out) {
  return guarded([&] {
    need(out, "out");
    *out = stc::edge_congestion(g->g, checked(g, t), e);
  });
}

stc_status stc_exact(const stc_graph* g, uint64_t max_nodes, int jobs, int64_t* value, stc_tree** witness) {
  return guarded([&] {
    need(g, "graph");
    need(value, "value");
    auto r = stc::stc_exact(g->g, search_options(max_nodes, jobs));
    *value = r.value;
    put_tree(witness, std::move(r.witness));
  });
}

stc_status stc_exact_decide(const stc_graph* g, int64_t k, uint64_t max_nodes, int jobs, int* found,
                            stc_tree** witness) {
  return guarded([&] {
    need(g, "graph");
    need(found, "found");
    auto r = stc::stc_decide(g->g, k, search_options(max_nodes, jobs));
    if (r.outcome == stc::DecideOutcome::kBudgetExceeded)
      stc::fail(stc::ErrorCode::kBudgetExceeded, "search budget exceeded after " + std::to_string(r.nodes) + " nodes");
    *found = r.outcome == stc::DecideOutcome::kYes;
    if (witness) *witness = nullptr;
    if (r.witness) put_tree(witness, std::move(*r.witness));
  });
}

stc_status stc_decide(const stc_graph* g, stc_verdict* verdict, int64_t* k, stc_tree** witness) {
  return guarded([&] {
    need(g, "graph");
    need(verdict, "verdict");
    auto d = stc::decide_stc_equals_k(g->g);
    *verdict = static_cast<stc_verdict>(static_cast<int>(d.verdict));
    if (k) *k = d.k;
    if (witness) *witness = nullptr;
    if (d.yes()) put_tree(witness, stc::reconstruct_witness_tree(g->g, d));
  });
}

const char* stc_verdict_name(stc_verdict v) {
  if (v < STC_VERDICT_YES || v > STC_VERDICT_ROOT_NOT_HUB) return "unknown";
  return stc::verdict_name(static_cast<stc::Verdict>(static_cast<int>(v)));
}

stc_status stc_cactus(const stc_graph* g, char** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    auto cuts = stc::enumerate_min_cuts(g->g);
    *out = dup(stc::describe_cactus(stc::build_cactus(g->g, cuts), cuts.k));
  });
}

stc_status stc_gadget_flower(int l, int64_t k, stc_graph** out, stc_tree** tree) {
  return guarded([&] {
    need(out, "out");
    auto f = stc::build_flower(l, k);
    auto t = stc::canonical_flower_tree(f);
    *out = new stc_graph{std::move(f.graph)};
    put_tree(tree, std::move(t));
  });
}

stc_status stc_gadget_bottleneck(int w, stc_graph** out, stc_tree** tree, int* s, int* t) {
  return guarded([&] {
    need(out, "out");
    auto b = stc::build_bottleneck(w);
    auto canon = stc::canonical_bottleneck_tree(b);
    if (s) *s = b.s;
    if (t) *t = b.t;
    *out = new stc_graph{std::move(b.graph)};
    put_tree(tree, std::move(canon));
  });
}

stc_status stc_gadget_weight(int a, int b, stc_graph** out, int* s, int* t) {
  return guarded([&] {
    need(out, "out");
    auto w = stc::build_weight_gadget(a, b);
    if (s) *s = w.s_port;
    if (t) *t = w.t_port;
    *out = new stc_graph{std::move(w.graph)};
  });
}

stc_status stc_expand(const stc_graph* g, int64_t k, int paths, stc_graph** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    auto mode = paths ? stc::MultiEdgeMode::kPaths : stc::MultiEdgeMode::kParallel;
    *out = new stc_graph{stc::expand_double_weights(g->g, k, mode)};
  });
}

stc_status stc_sat_parse(const char* text, stc_sat** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    *out = new stc_sat{stc::parse_sat(text)};
  });
}

stc_status stc_sat_generate(int n, uint64_t seed, stc_sat** out) {
  return guarded([&] {
    need(out, "out");
    *out = new stc_sat{stc::random_sat(n, seed)};
  });
}

stc_status stc_sat_serialize(const stc_sat* s, char** out) {
  return guarded([&] {
    need(s, "formula");
    need(out, "out");
    *out = dup(stc::serialize_sat(s->s));
  });
}

void stc_sat_free(stc_sat* s) { delete s; }

stc_status stc_reduce(const stc_sat* s, stc_reduction_kind kind, stc_reduction** out) {
  return guarded([&] {
    need(s, "formula");
    need(out, "out");
    if (kind != STC_REDUCTION_DEGREE3 && kind != STC_REDUCTION_DEGREE4)
      stc::fail(stc::ErrorCode::kInvalidArgument, "unknown reduction kind");
    auto art = stc::reduce(kind == STC_REDUCTION_DEGREE3 ? stc::ReductionKind::kDegree3 : stc::ReductionKind::kDegree4,
                           s->s);
    stc_graph graph{art.graph};
    *out = new stc_reduction{std::move(art), std::move(graph)};
  });
}

stc_status stc_reduction_load(const stc_graph* g, const char* labels, stc_reduction** out) {
  return guarded([&] {
    need(g, "graph");
    need(labels, "labels");
    need(out, "out");
    auto art = stc::parse_labels(labels, g->g);
    stc_graph graph{art.graph};
    *out = new stc_reduction{std::move(art), std::move(graph)};
  });
}

void stc_reduction_free(stc_reduction* r) { delete r; }

int64_t stc_reduction_k(const stc_reduction* r) { return r ? r->art.k : 0; }

const stc_graph* stc_reduction_graph(const stc_reduction* r) { return r ? &r->graph : nullptr; }

stc_status stc_reduction_labels(const stc_reduction* r, char** out) {
  return guarded([&] {
    need(r, "reduction");
    need(out, "out");
    *out = dup(stc::serialize_labels(r->art));
  });
}

stc_status stc_reduction_assignment_to_tree(const stc_reduction* r, const char* assignment, stc_tree** out) {
  return guarded([&] {
    need(r, "reduction");
    need(assignment, "assignment");
    need(out, "out");
    auto a = stc::parse_assignment(assignment);
    if (static_cast<int>(a.size()) != r->art.sat.n)
      stc::fail(stc::ErrorCode::kInvalidArgument, "assignment has " + std::to_string(a.size()) +
                                                      " variables, formula has " + std::to_string(r->art.sat.n));
    *out = new stc_tree{stc::assignment_to_tree(r->art, a)};
  });
}

stc_status stc_reduction_tree_to_assignment(const stc_reduction* r, const stc_tree* t, char** out) {
  return guarded([&] {
    need(r, "reduction");
    need(out, "out");
    *out = dup(stc::serialize_assignment(stc::tree_to_assignment(r->art, checked(&r->graph, t))));
  });
}

stc_status stc_reduction_audit(const stc_reduction* r, const stc_tree* t, int* all_pass, char** report) {
  return guarded([&] {
    need(r, "reduction");
    need(all_pass, "all_pass");
    auto rep = stc::audit_structural_lemmas(r->art, checked(&r->graph, t));
    *all_pass = rep.all_pass();
    if (!report) return;
    std::string text;
    if (rep.skipped) text = "skipped " + rep.reason + "\n";
    for (const auto& c : rep.checks)
      text += std::string(c.passed ? "pass " : "FAIL ") + c.name + (c.detail.empty() ? "" : ": " + c.detail) + "\n";
    *report = dup(text);
  });
}

}  // extern "C"

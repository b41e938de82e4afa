// Command-line front end over the C API.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "stc/stc.h"

namespace {

enum Exit { kSuccess = 0, kNo = 1, kUsage = 2, kFailure = 3 };

struct Failure {
  int code;
  std::string message;
};

void check(stc_status s) {
  if (s == STC_OK) return;
  bool input = s != STC_ERR_BUDGET_EXCEEDED && s != STC_ERR_REFUSED && s != STC_ERR_INTERNAL;
  throw Failure{input ? kUsage : kFailure, stc_last_error()};
}

struct GraphDeleter {
  void operator()(stc_graph* g) const { stc_graph_free(g); }
};
struct TreeDeleter {
  void operator()(stc_tree* t) const { stc_tree_free(t); }
};
struct SatDeleter {
  void operator()(stc_sat* s) const { stc_sat_free(s); }
};
struct ReductionDeleter {
  void operator()(stc_reduction* r) const { stc_reduction_free(r); }
};
using GraphPtr = std::unique_ptr<stc_graph, GraphDeleter>;
using TreePtr = std::unique_ptr<stc_tree, TreeDeleter>;
using SatPtr = std::unique_ptr<stc_sat, SatDeleter>;
using ReductionPtr = std::unique_ptr<stc_reduction, ReductionDeleter>;

std::string take(char* s) {
  std::string out(s);
  stc_string_free(s);
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kUsage, "cannot read " + path};
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Prefixes parse errors with the file name.
template <class F>
auto from_file(const std::string& path, F&& f) {
  std::string text = slurp(path);
  try {
    return f(text);
  } catch (Failure& e) {
    e.message = path + ": " + e.message;
    throw;
  }
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw Failure{kFailure, "cannot write " + path};
}

GraphPtr load_graph(const std::string& path) {
  return from_file(path, [](const std::string& text) {
    stc_graph* g = nullptr;
    check(stc_graph_parse(text.c_str(), &g));
    return GraphPtr(g);
  });
}

TreePtr load_tree(const std::string& path, const stc_graph* g) {
  return from_file(path, [g](const std::string& text) {
    stc_tree* t = nullptr;
    check(stc_tree_parse(text.c_str(), g, &t));
    return TreePtr(t);
  });
}

ReductionPtr load_reduction(const std::string& graph_path, const std::string& labels_path, GraphPtr& g) {
  g = load_graph(graph_path);
  return from_file(labels_path, [&](const std::string& text) {
    stc_reduction* r = nullptr;
    check(stc_reduction_load(g.get(), text.c_str(), &r));
    return ReductionPtr(r);
  });
}

std::string graph_text(const stc_graph* g, bool labels = true) {
  char* s = nullptr;
  check(stc_graph_serialize(g, labels, &s));
  return take(s);
}

std::string tree_text(const stc_graph* g, const stc_tree* t) {
  char* s = nullptr;
  check(stc_tree_serialize(g, t, &s));
  return take(s);
}

std::string edge_list(const stc_tree* t) {
  std::vector<int> edges(stc_tree_edge_count(t));
  stc_tree_edges(t, edges.data(), edges.size());
  std::string out;
  for (int e : edges) out += " " + std::to_string(e);
  return out;
}

uint64_t budget(uint64_t flag) {
  if (flag) return flag;
  if (const char* env = std::getenv("STC_MAX_TREES")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (*env == '\0' || *end != '\0' || v == 0) throw Failure{kUsage, "STC_MAX_TREES must be a positive integer"};
    return v;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spanning-tree congestion toolkit"};
  app.require_subcommand(1);

  int jobs = 1;
  uint64_t max_nodes = 0;
  std::string out_path;
  std::string graph_path, tree_path, labels_path, sat_path, assignment_path, witness_path, labels_out;
  int64_t k = 0;
  bool paths = false;
  int n = 0, l = 0, w = 0, a = 0, b = 0;
  uint64_t seed = 0;
  int result = kSuccess;

  auto* exact = app.add_subcommand("exact", "Exact spanning-tree congestion by branch and bound");
  exact->add_option("graph", graph_path)->required();
  exact->add_option("--witness", witness_path, "Write the optimal tree here");
  exact->add_option("--jobs", jobs)->check(CLI::Range(1, 256));
  exact->add_option("--max-nodes", max_nodes, "Search budget (overrides STC_MAX_TREES)");
  exact->callback([&] {
    auto g = load_graph(graph_path);
    int64_t value = 0;
    stc_tree* t = nullptr;
    check(stc_exact(g.get(), budget(max_nodes), jobs, &value, &t));
    TreePtr tree(t);
    std::cout << "stc " << value << "\n" << "witness" << edge_list(tree.get()) << "\n";
    if (!witness_path.empty()) emit(witness_path, tree_text(g.get(), tree.get()));
  });

  auto* decide = app.add_subcommand("decide", "Decide whether stc equals the edge connectivity");
  decide->add_option("graph", graph_path)->required();
  decide->add_option("--witness", witness_path, "Write a congestion-K tree here on YES");
  decide->callback([&] {
    auto g = load_graph(graph_path);
    stc_verdict v{};
    int64_t kk = 0;
    stc_tree* t = nullptr;
    check(stc_decide(g.get(), &v, &kk, witness_path.empty() ? nullptr : &t));
    TreePtr tree(t);
    if (v == STC_VERDICT_YES) {
      std::cout << "YES\nk " << kk << "\n";
      if (tree) emit(witness_path, tree_text(g.get(), tree.get()));
    } else {
      std::cout << "NO\nk " << kk << "\nreason " << stc_verdict_name(v) << "\n";
      result = kNo;
    }
  });

  auto* cactus = app.add_subcommand("cactus", "Print the min-cut cactus");
  cactus->add_option("graph", graph_path)->required();
  cactus->callback([&] {
    auto g = load_graph(graph_path);
    char* s = nullptr;
    check(stc_cactus(g.get(), &s));
    std::cout << take(s);
  });

  auto reduce_cmd = [&](const char* name, stc_reduction_kind kind, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("sat", sat_path)->required();
    sub->add_option("-o,--out", out_path, "Graph file (default stdout)");
    sub->add_option("--labels", labels_out, "Role sidecar file")->required();
    sub->callback([&, kind] {
      SatPtr sat = from_file(sat_path, [](const std::string& text) {
        stc_sat* s = nullptr;
        check(stc_sat_parse(text.c_str(), &s));
        return SatPtr(s);
      });
      stc_reduction* r = nullptr;
      check(stc_reduce(sat.get(), kind, &r));
      ReductionPtr red(r);
      char* s = nullptr;
      check(stc_reduction_labels(red.get(), &s));
      emit(labels_out, take(s));
      emit(out_path, graph_text(stc_reduction_graph(red.get()), false));
    });
  };
  reduce_cmd("reduce3", STC_REDUCTION_DEGREE3, "Degree-3 reduction from (M2P1N)-SAT");
  reduce_cmd("reduce4", STC_REDUCTION_DEGREE4, "Degree-4 reduction from (M2P1N)-SAT");

  auto* expand = app.add_subcommand("expand", "Replace weighted edges by double-weight gadgets");
  expand->add_option("graph", graph_path)->required();
  expand->add_option("--k", k)->required();
  expand->add_flag("--paths", paths, "Subdivide parallel edges into 2-paths");
  expand->add_option("-o,--out", out_path);
  expand->callback([&] {
    auto g = load_graph(graph_path);
    stc_graph* x = nullptr;
    check(stc_expand(g.get(), k, paths, &x));
    emit(out_path, graph_text(GraphPtr(x).get()));
  });

  auto* gadget = app.add_subcommand("gadget", "Emit a gadget graph");
  gadget->require_subcommand(1);
  auto* flower = gadget->add_subcommand("flower", "Flower F(l,K)");
  flower->add_option("--l", l)->required();
  flower->add_option("--k", k)->required();
  flower->add_option("--tree", tree_path, "Write the canonical tree here");
  flower->add_option("-o,--out", out_path);
  flower->callback([&] {
    stc_graph* g = nullptr;
    stc_tree* t = nullptr;
    check(stc_gadget_flower(l, k, &g, &t));
    GraphPtr graph(g);
    TreePtr tree(t);
    emit(out_path, graph_text(graph.get()));
    if (!tree_path.empty()) emit(tree_path, tree_text(graph.get(), tree.get()));
  });
  auto* bottleneck = gadget->add_subcommand("bottleneck", "Bottleneck B(w)");
  bottleneck->add_option("--w", w)->required();
  bottleneck->add_option("--tree", tree_path, "Write the canonical tree here");
  bottleneck->add_option("-o,--out", out_path);
  bottleneck->callback([&] {
    stc_graph* g = nullptr;
    stc_tree* t = nullptr;
    int s = 0, tt = 0;
    check(stc_gadget_bottleneck(w, &g, &t, &s, &tt));
    GraphPtr graph(g);
    TreePtr tree(t);
    emit(out_path, "# gates " + std::to_string(s) + " " + std::to_string(tt) + "\n" + graph_text(graph.get()));
    if (!tree_path.empty()) emit(tree_path, tree_text(graph.get(), tree.get()));
  });
  auto* dw = gadget->add_subcommand("dw", "Double-weight gadget W(a,b)");
  dw->add_option("--a", a)->required();
  dw->add_option("--b", b)->required();
  dw->add_option("-o,--out", out_path);
  dw->callback([&] {
    stc_graph* g = nullptr;
    int s = 0, t = 0;
    check(stc_gadget_weight(a, b, &g, &s, &t));
    emit(out_path, "# ports " + std::to_string(s) + " " + std::to_string(t) + "\n" + graph_text(GraphPtr(g).get()));
  });

  auto* verify = app.add_subcommand("verify-tree", "Congestion of a spanning tree");
  verify->add_option("graph", graph_path)->required();
  verify->add_option("tree", tree_path)->required();
  auto* kopt = verify->add_option("--k", k, "Exit 1 when the congestion exceeds K");
  verify->callback([&] {
    auto g = load_graph(graph_path);
    auto t = load_tree(tree_path, g.get());
    int64_t c = 0;
    check(stc_tree_congestion(g.get(), t.get(), &c));
    std::cout << "congestion " << c << "\n";
    if (*kopt) {
      std::cout << (c <= k ? "within " : "exceeds ") << k << "\n";
      if (c > k) result = kNo;
    }
  });

  auto* to_assignment = app.add_subcommand("to-assignment", "Read a satisfying assignment off a reduction tree");
  to_assignment->add_option("graph", graph_path)->required();
  to_assignment->add_option("labels", labels_path)->required();
  to_assignment->add_option("tree", tree_path)->required();
  to_assignment->add_option("-o,--out", out_path);
  to_assignment->callback([&] {
    GraphPtr g;
    auto red = load_reduction(graph_path, labels_path, g);
    auto t = load_tree(tree_path, g.get());
    char* s = nullptr;
    check(stc_reduction_tree_to_assignment(red.get(), t.get(), &s));
    emit(out_path, take(s));
  });

  auto* from_assignment = app.add_subcommand("from-assignment", "Build a congestion-K tree from an assignment");
  from_assignment->add_option("graph", graph_path)->required();
  from_assignment->add_option("labels", labels_path)->required();
  from_assignment->add_option("assignment", assignment_path)->required();
  from_assignment->add_option("-o,--out", out_path);
  from_assignment->callback([&] {
    GraphPtr g;
    auto red = load_reduction(graph_path, labels_path, g);
    TreePtr tree = from_file(assignment_path, [&](const std::string& text) {
      stc_tree* t = nullptr;
      check(stc_reduction_assignment_to_tree(red.get(), text.c_str(), &t));
      return TreePtr(t);
    });
    emit(out_path, tree_text(g.get(), tree.get()));
  });

  auto* audit = app.add_subcommand("audit", "Check the structural lemmas on a reduction tree");
  audit->add_option("graph", graph_path)->required();
  audit->add_option("labels", labels_path)->required();
  audit->add_option("tree", tree_path)->required();
  audit->callback([&] {
    GraphPtr g;
    auto red = load_reduction(graph_path, labels_path, g);
    auto t = load_tree(tree_path, g.get());
    int pass = 0;
    char* s = nullptr;
    check(stc_reduction_audit(red.get(), t.get(), &pass, &s));
    std::cout << take(s);
    if (!pass) result = kNo;
  });

  auto* gen = app.add_subcommand("gen", "Random multigraph with edge connectivity K");
  gen->add_option("--n", n)->required();
  gen->add_option("--k", k)->required();
  gen->add_option("--seed", seed)->required();
  gen->add_option("-o,--out", out_path);
  gen->callback([&] {
    stc_graph* g = nullptr;
    check(stc_graph_generate(n, k, seed, &g));
    emit(out_path, graph_text(GraphPtr(g).get()));
  });

  auto* gen_sat = app.add_subcommand("gen-sat", "Random (M2P1N)-SAT formula");
  gen_sat->add_option("--n", n)->required();
  gen_sat->add_option("--seed", seed)->required();
  gen_sat->add_option("-o,--out", out_path);
  gen_sat->callback([&] {
    stc_sat* s = nullptr;
    check(stc_sat_generate(n, seed, &s));
    SatPtr sat(s);
    char* text = nullptr;
    check(stc_sat_serialize(sat.get(), &text));
    emit(out_path, take(text));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  }
  return result;
}

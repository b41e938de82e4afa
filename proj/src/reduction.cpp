#include "reduction.hpp"

#include <algorithm>
#include <numeric>

#include "error.hpp"

namespace stc {

namespace {

std::string var_name(int x) { return "x" + std::to_string(x + 1); }
std::string clause_name(int i) { return "C" + std::to_string(i + 1); }

// Adjacency of a spanning tree, for path walks.
class TreeWalk {
 public:
  TreeWalk(const Graph& g, const SpanningTree& t) : g_(g), adj_(g.vertex_count()) {
    for (int e : t.edges()) {
      adj_[g.edge(e).u].push_back(e);
      adj_[g.edge(e).v].push_back(e);
    }
  }

  const std::vector<int>& edges_at(int v) const { return adj_[v]; }

  // Tree edges on the path from u to v.
  std::vector<int> path(int u, int v) const {
    std::vector<int> via(g_.vertex_count(), -2);
    std::vector<int> queue{u};
    via[u] = -1;
    for (size_t i = 0; i < queue.size() && via[v] == -2; ++i)
      for (int e : adj_[queue[i]]) {
        int w = g_.edge(e).other(queue[i]);
        if (via[w] != -2) continue;
        via[w] = e;
        queue.push_back(w);
      }
    std::vector<int> out;
    for (int x = v; x != u; x = g_.edge(via[x]).other(x)) out.push_back(via[x]);
    std::reverse(out.begin(), out.end());
    return out;
  }

 private:
  const Graph& g_;
  std::vector<std::vector<int>> adj_;
};

int position_in(const Clause& c, int x) {
  auto it = std::find(c.vars.begin(), c.vars.end(), x);
  if (it == c.vars.end())
    fail(ErrorCode::kInvalidArgument, "variable " + std::to_string(x + 1) + " is not in clause " + describe_clause(c));
  return static_cast<int>(it - c.vars.begin());
}

// Variable chosen to satisfy clause i: the lowest index among satisfiers.
int chosen_variable(const SatInstance& inst, int i, const Assignment& a) {
  const Clause& c = inst.clauses[i];
  int best = -1;
  for (int x : c.vars)
    if ((a[x] != 0) == c.positive() && (best < 0 || x < best)) best = x;
  return best;
}

void require_satisfying(const SatInstance& inst, const Assignment& a) {
  if (auto bad = unsatisfied_clause(inst, a))
    fail(ErrorCode::kRefused, "assignment does not satisfy clause " + std::to_string(*bad + 1) + " (" +
                                  describe_clause(inst.clauses[*bad]) + ")");
}

int add_role_edge(ReductionArtifact& art, int u, int v, DoubleWeight w, EdgeRole role) {
  int e = art.graph.add_edge(u, v, w);
  art.edge_roles.push_back(role);
  return e;
}

void mark_internal(ReductionArtifact& art) {
  art.edge_roles.resize(art.graph.edge_count(), EdgeRole::kInternal);
}

ReductionArtifact build_degree3(const SatInstance& inst, Weight k) {
  require_valid(inst);
  if (k < 6) fail(ErrorCode::kInvalidArgument, "degree-3 reduction needs K >= 6");
  ReductionArtifact art;
  art.kind = ReductionKind::kDegree3;
  art.sat = inst;
  art.k = k;
  Graph& g = art.graph;
  int n = inst.n;
  int m1 = inst.count(ClauseType::k2N), m2 = inst.count(ClauseType::k2P);

  art.root = add_flower(g, 2 * m1 + m2 + n, k, "R.");
  mark_internal(art);
  const FlowerEmbedding& root = *art.root;
  // Root terminals: variables, then 2P clauses, then two per 2N clause.
  int next_2p = n, next_2n = n + m2;

  art.clauses.resize(inst.m());
  for (int i = 0; i < inst.m(); ++i) {
    ClauseRoles& cr = art.clauses[i];
    if (inst.clauses[i].type == ClauseType::k2N) {
      cr.flower = add_flower(g, 4, k, clause_name(i) + ".");
      mark_internal(art);
      cr.center = cr.flower->core[0];
      cr.root_terminals = {root.terminal[next_2n], root.terminal[next_2n + 1]};
      next_2n += 2;
    } else {
      cr.center = g.add_vertex(clause_name(i));
      if (inst.clauses[i].type == ClauseType::k2P) cr.root_terminals = {root.terminal[next_2p++]};
    }
  }

  art.variables.resize(n);
  for (int x = 0; x < n; ++x) {
    VariableRoles& vr = art.variables[x];
    vr.v2n = g.add_vertex(var_name(x) + ".2N");
    vr.v2p = g.add_vertex(var_name(x) + ".2P");
    vr.vr = g.add_vertex(var_name(x) + ".R");
    vr.v3p = g.add_vertex(var_name(x) + ".3P");
    int cyc[5] = {vr.v2n, vr.v2p, vr.vr, vr.v3p, vr.v2n};
    for (int j = 0; j < 4; ++j) vr.gadget_edges.push_back(add_role_edge(art, cyc[j], cyc[j + 1], {}, EdgeRole::kInternal));
    vr.root_terminal = root.terminal[x];
  }

  for (int x = 0; x < n; ++x) {
    VariableRoles& vr = art.variables[x];
    vr.root_edge = add_role_edge(art, vr.vr, vr.root_terminal, {1, k - 5}, EdgeRole::kRootVariable);
  }
  for (int i = 0; i < inst.m(); ++i) {
    const Clause& c = inst.clauses[i];
    ClauseRoles& cr = art.clauses[i];
    for (size_t j = 0; j < c.vars.size(); ++j) {
      const VariableRoles& vr = art.variables[c.vars[j]];
      int near = cr.flower ? cr.flower->terminal[2 + j] : cr.center;
      int far = c.type == ClauseType::k2N ? vr.v2n : c.type == ClauseType::k2P ? vr.v2p : vr.v3p;
      cr.var_edges.push_back(add_role_edge(art, near, far, {}, EdgeRole::kClauseVariable));
    }
  }
  for (int i = 0; i < inst.m(); ++i) {
    ClauseRoles& cr = art.clauses[i];
    for (size_t j = 0; j < cr.root_terminals.size(); ++j) {
      int near = cr.flower ? cr.flower->terminal[j] : cr.center;
      cr.root_edges.push_back(add_role_edge(art, near, cr.root_terminals[j], {1, k - 1}, EdgeRole::kRootClause));
    }
  }
  return art;
}

bool degree3_traverses(const ReductionArtifact& art, const SpanningTree& t, const TreeWalk& walk, int clause,
                       int x) {
  const ClauseRoles& cr = art.clauses[clause];
  int j = position_in(art.sat.clauses[clause], x);
  int e = cr.var_edges[j];
  if (!t.contains(e)) return false;
  const Graph& g = art.graph;
  const VariableRoles& vr = art.variables[x];
  int far = g.edge(e).u;
  int near = g.edge(e).v;
  if (far != vr.v2n && far != vr.v2p && far != vr.v3p) std::swap(far, near);
  for (int f : walk.path(cr.center, near))
    if (art.external(f)) return false;
  // Walk the gadget through tree edges and look for a second external edge.
  std::vector<int> seen{far};
  for (size_t i = 0; i < seen.size(); ++i)
    for (int f : walk.edges_at(seen[i])) {
      if (f == e) continue;
      if (art.external(f)) return true;
      int w = g.edge(f).other(seen[i]);
      if (std::find(seen.begin(), seen.end(), w) == seen.end()) seen.push_back(w);
    }
  return false;
}

void require_congestion(const ReductionArtifact& art, const SpanningTree& t) {
  Weight c = tree_congestion(art.graph, t);
  if (c > art.k)
    fail(ErrorCode::kRefused, "tree congestion " + std::to_string(c) + " exceeds K = " + std::to_string(art.k));
}

}  // namespace

const char* reduction_kind_name(ReductionKind k) { return k == ReductionKind::kDegree3 ? "degree3" : "degree4"; }

bool ReductionArtifact::external(int e) const { return edge_roles.at(e) != EdgeRole::kInternal; }

ReductionArtifact reduce_degree3_with_k(const SatInstance& inst, Weight k) { return build_degree3(inst, k); }

ReductionArtifact reduce_degree3(const SatInstance& inst) {
  int edges = build_degree3(inst, 6).graph.edge_count();
  return build_degree3(inst, 2 * static_cast<Weight>(edges));
}

ReductionArtifact reduce_degree4(const SatInstance& inst) {
  require_valid(inst);
  ReductionArtifact art;
  art.kind = ReductionKind::kDegree4;
  art.sat = inst;
  Weight k = art.k = 3 * static_cast<Weight>(inst.m()) + 5;
  Graph& g = art.graph;
  art.variables.resize(inst.n);
  art.clauses.resize(inst.m());
  for (int x = 0; x < inst.n; ++x) art.variables[x].vertex = g.add_vertex(var_name(x));
  for (int i = 0; i < inst.m(); ++i) art.clauses[i].center = g.add_vertex(clause_name(i));

  // Root triangles for variables, then for 2P and 2N clauses.
  struct Unit {
    int *r1, *r2, *t;
    std::string name;
  };
  std::vector<Unit> units;
  for (int x = 0; x < inst.n; ++x) {
    auto& v = art.variables[x];
    units.push_back({&v.r1, &v.r2, &v.t, var_name(x)});
  }
  for (int i = 0; i < inst.m(); ++i)
    if (inst.clauses[i].type != ClauseType::k3P) {
      auto& c = art.clauses[i];
      units.push_back({&c.r1, &c.r2, &c.t, clause_name(i)});
    }
  std::vector<int> sides;
  for (auto& u : units) {
    *u.r1 = g.add_vertex(u.name + ".r1");
    *u.r2 = g.add_vertex(u.name + ".r2");
    *u.t = g.add_vertex(u.name + ".t");
    sides.push_back(add_role_edge(art, *u.r1, *u.r2, {}, EdgeRole::kRootCycle));
    add_role_edge(art, *u.r1, *u.t, {}, EdgeRole::kRootTerminal);
    add_role_edge(art, *u.r2, *u.t, {}, EdgeRole::kRootTerminal);
  }
  for (size_t i = 0; i < units.size(); ++i) {
    art.root_cycle.push_back(sides[i]);
    const Unit& next = units[(i + 1) % units.size()];
    art.root_cycle.push_back(add_role_edge(art, *units[i].r2, *next.r1, {2, 2}, EdgeRole::kRootCycle));
  }

  for (auto& v : art.variables) v.root_edge = add_role_edge(art, v.vertex, v.t, {1, k - 5}, EdgeRole::kRootVariable);
  for (int i = 0; i < inst.m(); ++i) {
    const Clause& c = inst.clauses[i];
    auto& cr = art.clauses[i];
    if (c.type == ClauseType::k2P)
      cr.root_edges.push_back(add_role_edge(art, cr.center, cr.t, {1, k - 1}, EdgeRole::kRootClause));
    else if (c.type == ClauseType::k2N)
      cr.root_edges.push_back(add_role_edge(art, cr.center, cr.t, {2, k - 1}, EdgeRole::kRootClause));
  }
  for (int i = 0; i < inst.m(); ++i) {
    const Clause& c = inst.clauses[i];
    DoubleWeight w = c.positive() ? DoubleWeight{1, k - 2} : DoubleWeight{1, k - 3};
    for (int x : c.vars)
      art.clauses[i].var_edges.push_back(
          add_role_edge(art, art.clauses[i].center, art.variables[x].vertex, w, EdgeRole::kClauseVariable));
  }
  return art;
}

ReductionArtifact reduce(ReductionKind kind, const SatInstance& inst) {
  return kind == ReductionKind::kDegree3 ? reduce_degree3(inst) : reduce_degree4(inst);
}

SpanningTree assignment_to_tree(const ReductionArtifact& art, const Assignment& a) {
  const SatInstance& inst = art.sat;
  require_satisfying(inst, a);
  std::vector<int> edges;
  if (art.kind == ReductionKind::kDegree3) {
    auto take = canonical_flower_edges(*art.root);
    edges.insert(edges.end(), take.begin(), take.end());
    for (const auto& cr : art.clauses)
      if (cr.flower) {
        take = canonical_flower_edges(*cr.flower);
        edges.insert(edges.end(), take.begin(), take.end());
      }
    // Three of the four cycle edges; 3P-2N is left out.
    for (const auto& v : art.variables) edges.insert(edges.end(), v.gadget_edges.begin(), v.gadget_edges.begin() + 3);
  } else {
    // The root cycle minus its closing link, plus one terminal edge per triangle.
    edges.insert(edges.end(), art.root_cycle.begin(), art.root_cycle.end() - 1);
    auto add_terminal = [&](int r1, int t) {
      for (int e : art.graph.incident(t))
        if (art.graph.edge(e).other(t) == r1) {
          edges.push_back(e);
          return;
        }
    };
    for (const auto& v : art.variables) add_terminal(v.r1, v.t);
    for (const auto& c : art.clauses)
      if (c.t >= 0) add_terminal(c.r1, c.t);
  }
  for (const auto& v : art.variables) edges.push_back(v.root_edge);
  for (int i = 0; i < inst.m(); ++i) {
    int x = chosen_variable(inst, i, a);
    edges.push_back(art.clauses[i].var_edges[position_in(inst.clauses[i], x)]);
  }
  return SpanningTree(art.graph, std::move(edges));
}

bool traverses(const ReductionArtifact& art, const SpanningTree& t, int clause, int x) {
  if (clause < 0 || clause >= art.sat.m()) fail(ErrorCode::kInvalidArgument, "clause index out of range");
  if (art.kind == ReductionKind::kDegree4)
    return t.contains(art.clauses[clause].var_edges[position_in(art.sat.clauses[clause], x)]);
  TreeWalk walk(art.graph, t);
  return degree3_traverses(art, t, walk, clause, x);
}

Assignment tree_to_assignment(const ReductionArtifact& art, const SpanningTree& t) {
  require_congestion(art, t);
  const SatInstance& inst = art.sat;
  TreeWalk walk(art.graph, t);
  Assignment a(inst.n, 1);
  for (int x = 0; x < inst.n; ++x) {
    int alpha = inst.clause_of(x, ClauseType::k2N);
    bool from_negative = art.kind == ReductionKind::kDegree3
                             ? degree3_traverses(art, t, walk, alpha, x)
                             : t.contains(art.clauses[alpha].var_edges[position_in(inst.clauses[alpha], x)]);
    if (from_negative) a[x] = 0;
  }
  if (auto bad = unsatisfied_clause(inst, a))
    fail(ErrorCode::kInternal, "recovered assignment misses clause " + std::to_string(*bad + 1) + " (" +
                                   describe_clause(inst.clauses[*bad]) + ")");
  return a;
}

bool AuditReport::all_pass() const {
  return !skipped && std::all_of(checks.begin(), checks.end(), [](const AuditCheck& c) { return c.passed; });
}

AuditReport audit_structural_lemmas(const ReductionArtifact& art, const SpanningTree& t) {
  AuditReport report;
  Weight c = tree_congestion(art.graph, t);
  if (c > art.k) {
    report.skipped = true;
    report.reason = "tree congestion " + std::to_string(c) + " exceeds K = " + std::to_string(art.k);
    return report;
  }
  const Graph& g = art.graph;
  const SatInstance& inst = art.sat;

  AuditCheck no_root_clause{"no root-clause edge in the tree", true, {}};
  for (int e : t.edges())
    if (art.edge_roles[e] == EdgeRole::kRootClause) {
      no_root_clause.passed = false;
      no_root_clause.detail = "edge " + std::to_string(e) + " (" + g.label(g.edge(e).u) + " - " +
                              g.label(g.edge(e).v) + ")";
      break;
    }
  report.checks.push_back(no_root_clause);

  if (art.kind == ReductionKind::kDegree3) {
    TreeWalk walk(g, t);
    std::vector<const FlowerEmbedding*> flowers{&*art.root};
    for (const auto& cr : art.clauses)
      if (cr.flower) flowers.push_back(&*cr.flower);
    std::vector<int> owner(g.edge_count(), -1);
    for (size_t f = 0; f < flowers.size(); ++f)
      for (int e : flowers[f]->edges) owner[e] = static_cast<int>(f);
    AuditCheck cores{"flower cores stay on one shore of every outside tree edge", true, {}};
    for (int e : t.edges()) {
      auto [shore, rest] = tree_shores(g, t, e);
      for (size_t f = 0; f < flowers.size() && cores.passed; ++f) {
        if (owner[e] == static_cast<int>(f)) continue;
        const auto& core = flowers[f]->core;
        bool side = shore.contains(core[0]);
        for (int v : core)
          if (shore.contains(v) != side) {
            cores.passed = false;
            cores.detail = "edge " + std::to_string(e) + " splits the core of " + g.label(core[0]);
            break;
          }
      }
      if (!cores.passed) break;
    }
    report.checks.push_back(cores);

    AuditCheck exclusive{"no variable traversed from both its negative and a positive clause", true, {}};
    AuditCheck covered{"every clause traverses one of its variables", true, {}};
    std::vector<std::vector<char>> trav(inst.m());
    for (int i = 0; i < inst.m(); ++i) {
      for (int x : inst.clauses[i].vars) trav[i].push_back(degree3_traverses(art, t, walk, i, x));
      if (covered.passed && std::none_of(trav[i].begin(), trav[i].end(), [](char b) { return b; })) {
        covered.passed = false;
        covered.detail = "clause " + std::to_string(i + 1) + " (" + describe_clause(inst.clauses[i]) + ")";
      }
    }
    for (int x = 0; x < inst.n && exclusive.passed; ++x) {
      auto from = [&](ClauseType type) {
        int i = inst.clause_of(x, type);
        return trav[i][position_in(inst.clauses[i], x)] != 0;
      };
      if (from(ClauseType::k2N) && (from(ClauseType::k2P) || from(ClauseType::k3P))) {
        exclusive.passed = false;
        exclusive.detail = "variable " + std::to_string(x + 1);
      }
    }
    report.checks.push_back(exclusive);
    report.checks.push_back(covered);
    return report;
  }

  // Degree 4: root vertices must be joined through root-cycle and
  // root-terminal tree edges alone.
  std::vector<int> comp(g.vertex_count());
  std::iota(comp.begin(), comp.end(), 0);
  auto find = [&](int v) {
    while (comp[v] != v) v = comp[v] = comp[comp[v]];
    return v;
  };
  for (int e : t.edges())
    if (art.edge_roles[e] == EdgeRole::kRootCycle || art.edge_roles[e] == EdgeRole::kRootTerminal)
      comp[find(g.edge(e).u)] = find(g.edge(e).v);
  std::vector<int> roots;
  for (const auto& v : art.variables) roots.insert(roots.end(), {v.r1, v.r2});
  for (const auto& cr : art.clauses)
    if (cr.r1 >= 0) roots.insert(roots.end(), {cr.r1, cr.r2});
  AuditCheck chain{"tree paths between root vertices use only root-cycle and root-terminal edges", true, {}};
  for (int r : roots)
    if (find(r) != find(roots[0])) {
      chain.passed = false;
      chain.detail = g.label(roots[0]) + " and " + g.label(r);
      break;
    }
  report.checks.push_back(chain);

  AuditCheck exclusive{"no variable tied to both its negative and a positive clause", true, {}};
  AuditCheck covered{"every clause has a tree edge to one of its variables", true, {}};
  auto in_tree = [&](int i, int x) { return t.contains(art.clauses[i].var_edges[position_in(inst.clauses[i], x)]); };
  for (int i = 0; i < inst.m() && covered.passed; ++i)
    if (std::none_of(inst.clauses[i].vars.begin(), inst.clauses[i].vars.end(), [&](int x) { return in_tree(i, x); })) {
      covered.passed = false;
      covered.detail = "clause " + std::to_string(i + 1) + " (" + describe_clause(inst.clauses[i]) + ")";
    }
  for (int x = 0; x < inst.n && exclusive.passed; ++x)
    if (in_tree(inst.clause_of(x, ClauseType::k2N), x) &&
        (in_tree(inst.clause_of(x, ClauseType::k2P), x) || in_tree(inst.clause_of(x, ClauseType::k3P), x))) {
      exclusive.passed = false;
      exclusive.detail = "variable " + std::to_string(x + 1);
    }
  report.checks.push_back(exclusive);
  report.checks.push_back(covered);
  return report;
}

}  // namespace stc

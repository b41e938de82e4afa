#include "hub_dp.hpp"

#include <algorithm>
#include <functional>

#include "error.hpp"

namespace stc {

namespace {

bool has(const HubSet& s, int v) { return std::binary_search(s.begin(), s.end(), v); }

HubSet to_hubs(const VertexSet& s) { return s.members(); }

VertexSet as_set(int n, const HubSet& h) { return VertexSet::of(n, h); }

// Neighbours of the members of s, as a set.
VertexSet neighborhood(const Graph& g, const VertexSet& s) {
  VertexSet out(g.vertex_count());
  for (int v : s.members())
    for (int u : g.neighbors(v)) out.insert(u);
  return out;
}

int lowest_edge(const Graph& g, int a, int b) {
  int best = -1;
  for (int e : g.incident(a))
    if (g.edge(e).other(a) == b && (best < 0 || e < best)) best = e;
  if (best < 0) fail(ErrorCode::kInternal, "expected an edge between two spine vertices");
  return best;
}

}  // namespace

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kYes: return "yes";
    case Verdict::kPreimageViolation: return "preimage";
    case Verdict::kNoRoot: return "no-root";
    case Verdict::kRootNotHub: return "root-not-hub";
  }
  return "?";
}

bool is_safe_tree(const Graph& g, Weight k, const std::vector<int>& tree_edges, int root) {
  int n = g.vertex_count();
  if (root < 0 || root >= n) fail(ErrorCode::kInvalidArgument, "root out of range");
  VertexSet span(n);
  span.insert(root);
  std::vector<char> keep(g.edge_count(), 0);
  for (int e : tree_edges) {
    if (e < 0 || e >= g.edge_count()) fail(ErrorCode::kNotATree, "edge index out of range");
    if (keep[e]) fail(ErrorCode::kNotATree, "repeated edge");
    keep[e] = 1;
    span.insert(g.edge(e).u);
    span.insert(g.edge(e).v);
  }
  if (static_cast<int>(tree_edges.size()) != span.count() - 1 || !(reachable(g, root, keep) == span))
    fail(ErrorCode::kNotATree, "edges do not form a tree containing the root");
  for (int e : tree_edges) {
    keep[e] = 0;
    VertexSet near = reachable(g, root, keep);
    int far_end = near.contains(g.edge(e).u) ? g.edge(e).v : g.edge(e).u;
    VertexSet far = reachable(g, far_end, keep);
    keep[e] = 1;
    if (weighted_cut_size(g, far) != k) return false;
  }
  return true;
}

HubSet hubs_leaf(const Graph& g, const CutEntry& entry) {
  if (entry.kind != CutKind::kNode || entry.type != NodeType::kExternal)
    fail(ErrorCode::kInvalidArgument, "leaf rule needs an external node");
  HubSet out = g.neighbors(entry.vertex);
  out.insert(std::lower_bound(out.begin(), out.end(), entry.vertex), entry.vertex);
  return out;
}

HubSet hubs_type1(const Graph& g, const CutEntry& entry, const std::vector<const HubSet*>& children) {
  if (entry.kind != CutKind::kNode || entry.type != NodeType::kType1)
    fail(ErrorCode::kInvalidArgument, "Type-1 rule needs an internal node with a vertex");
  int v = entry.vertex;
  for (const HubSet* h : children)
    if (!has(*h, v)) return {};
  // A hub must touch the cut; v alone with no outside neighbour is not one.
  VertexSet out(g.vertex_count());
  for (int u : g.neighbors(v))
    if (!entry.shore.contains(u)) out.insert(u);
  if (out.empty()) return {};
  out.insert(v);
  return to_hubs(out);
}

HubSet hubs_type0(const Graph& g, const CutEntry& entry, const std::vector<const HubSet*>& children) {
  if (entry.kind != CutKind::kNode || entry.type != NodeType::kType0)
    fail(ErrorCode::kInvalidArgument, "Type-0 rule needs an internal node without a vertex");
  int n = g.vertex_count();
  VertexSet hbar = cut_boundary(g, entry.shore);
  for (const HubSet* h : children) hbar &= as_set(n, *h);
  VertexSet out = hbar | (neighborhood(g, hbar & entry.shore) - entry.shore);
  return to_hubs(out);
}

HubSet hubs_cycle(const Graph& g, const CutEntry& entry, const std::vector<const HubSet*>& children,
                  const std::vector<const VertexSet*>& child_shores, SpineTable* table) {
  if (entry.kind != CutKind::kCycle) fail(ErrorCode::kInvalidArgument, "cycle rule needs a cycle cut");
  int n = g.vertex_count();
  int l = static_cast<int>(children.size()) + 1;
  if (l < 3) fail(ErrorCode::kInvalidArgument, "cycle of length below 3");
  const VertexSet& wc = entry.shore;
  VertexSet boundary = cut_boundary(g, wc);
  std::vector<VertexSet> z(l + 1, VertexSet(n)), h(l + 1, VertexSet(n));
  z[0] = boundary - wc;
  z[l] = z[0];
  for (int i = 1; i < l; ++i) {
    z[i] = *child_shores[i - 1];
    h[i] = as_set(n, *children[i - 1]);
  }

  SpineTable t;
  t.l = l;
  t.u_minus.assign(l + 1, {});
  t.u_plus.assign(l + 1, {});
  t.s_minus.assign(l + 1, {});
  t.s_plus.assign(l + 1, {});

  // Back spines: S-(w) is the smallest start of a spine prefix ending at w.
  for (int i = 2; i <= l; ++i) {
    VertexSet u = i < l ? (z[i] & h[i] & h[i - 1]) : (h[l - 1] - wc);
    t.u_minus[i] = u.members();
    for (int w : t.u_minus[i]) {
      int s = i;
      for (int v : g.neighbors(w)) {
        auto it = t.s_minus[i - 1].find(v);
        if (it != t.s_minus[i - 1].end()) s = std::min(s, it->second);
      }
      t.s_minus[i][w] = s;
    }
  }
  // Front spines: S+(w) is the largest end of a spine suffix starting at w.
  for (int i = l - 2; i >= 0; --i) {
    VertexSet u = i >= 1 ? (z[i] & h[i] & h[i + 1]) : (h[1] - wc);
    t.u_plus[i] = u.members();
    for (int w : t.u_plus[i]) {
      int s = i;
      for (int v : g.neighbors(w)) {
        auto it = t.s_plus[i + 1].find(v);
        if (it != t.s_plus[i + 1].end()) s = std::max(s, it->second);
      }
      t.s_plus[i][w] = s;
    }
  }

  VertexSet h0(n), hm(n), hp(n);
  for (int w : t.u_plus[0]) {
    auto it = t.s_minus[l].find(w);
    if (it != t.s_minus[l].end() && t.s_plus[0][w] + 3 >= it->second) h0.insert(w);
  }
  for (int w : t.u_minus[l - 1])
    if (boundary.contains(w) && t.s_minus[l - 1][w] == 2) hm.insert(w);
  for (int w : t.u_plus[1])
    if (boundary.contains(w) && t.s_plus[1][w] == l - 2) hp.insert(w);
  t.h0 = h0.members();
  t.h_minus = hm.members();
  t.h_plus = hp.members();
  VertexSet out = h0 | hm | (neighborhood(g, hm) - wc) | hp | (neighborhood(g, hp) - wc);
  if (table) *table = std::move(t);
  return to_hubs(out);
}

HubRun run_hub_dp(const Graph& g, const RootedCutTree& tree) {
  HubRun run;
  run.tree = tree;
  size_t count = tree.entries.size();
  run.hubs.resize(count);
  run.spines.resize(count);
  for (size_t i = 0; i < count; ++i) {
    const CutEntry& e = tree.entries[i];
    std::vector<const HubSet*> kids;
    std::vector<const VertexSet*> shores;
    for (int c : e.children) {
      if (c >= static_cast<int>(i)) fail(ErrorCode::kInternal, "child listed after its parent");
      kids.push_back(&run.hubs[c]);
      shores.push_back(&tree.entries[c].shore);
    }
    switch (e.type) {
      case NodeType::kExternal: run.hubs[i] = hubs_leaf(g, e); break;
      case NodeType::kType1: run.hubs[i] = hubs_type1(g, e, kids); break;
      case NodeType::kType0: run.hubs[i] = hubs_type0(g, e, kids); break;
      case NodeType::kCycle: {
        SpineTable t;
        run.hubs[i] = hubs_cycle(g, e, kids, shores, &t);
        run.spines[i] = std::move(t);
        break;
      }
    }
  }
  return run;
}

Decision decide_stc_equals_k(const Graph& g) {
  if (g.vertex_count() < 2) fail(ErrorCode::kInvalidArgument, "need at least two vertices");
  if (!is_connected(g)) fail(ErrorCode::kDisconnected, "graph is disconnected");
  if (!g.canonical_weights()) fail(ErrorCode::kInvalidArgument, "decision needs w1 == w2 on every edge");
  Decision d;
  MinCutFamily fam = enumerate_min_cuts(g);
  d.k = fam.k;
  d.cactus = build_cactus(g, fam);
  if (!check_preimage_condition(*d.cactus)) {
    d.verdict = Verdict::kPreimageViolation;
    return d;
  }
  auto tree = root_cut_tree(g, *d.cactus, d.k);
  if (!tree) {
    d.verdict = Verdict::kNoRoot;
    return d;
  }
  d.run = run_hub_dp(g, *tree);
  d.verdict = has(d.run->hubs.back(), tree->root_vertex) ? Verdict::kYes : Verdict::kRootNotHub;
  return d;
}

namespace {

class WitnessBuilder {
 public:
  WitnessBuilder(const Graph& g, const HubRun& run) : g_(g), run_(run) {}

  std::vector<int> build(int entry, int w) {
    auto key = std::pair(entry, w);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    if (!has(run_.hubs.at(entry), w))
      fail(ErrorCode::kInternal, "vertex " + std::to_string(w) + " is not a hub of entry " + std::to_string(entry));
    std::vector<int> out = compute(entry, w);
    memo_[key] = out;
    return out;
  }

 private:
  const CutEntry& at(int entry) const { return run_.tree.entries[entry]; }

  void append(std::vector<int>& out, const std::vector<int>& more) { out.insert(out.end(), more.begin(), more.end()); }

  // Lowest-id vertex of candidates adjacent to w.
  int attach_point(const VertexSet& candidates, int w) {
    for (int x : g_.neighbors(w))
      if (candidates.contains(x)) return x;
    fail(ErrorCode::kInternal, "no attachment point for hub " + std::to_string(w));
  }

  std::vector<int> via(int entry, int x, int w) {
    std::vector<int> out = build(entry, x);
    out.push_back(lowest_edge(g_, x, w));
    return out;
  }

  std::vector<int> compute(int entry, int w) {
    const CutEntry& e = at(entry);
    int n = g_.vertex_count();
    switch (e.type) {
      case NodeType::kExternal:
        if (w == e.vertex) return {};
        return {lowest_edge(g_, e.vertex, w)};
      case NodeType::kType1: {
        if (w != e.vertex) return via(entry, e.vertex, w);
        std::vector<int> out;
        for (int c : e.children) append(out, build(c, w));
        return out;
      }
      case NodeType::kType0: {
        VertexSet hbar = cut_boundary(g_, e.shore);
        for (int c : e.children) hbar &= as_set(n, run_.hubs[c]);
        if (!hbar.contains(w)) return via(entry, attach_point(hbar & e.shore, w), w);
        std::vector<int> out;
        for (int c : e.children) append(out, build(c, w));
        return out;
      }
      case NodeType::kCycle: return cycle(entry, w);
    }
    return {};
  }

  // Back spine from w at position p down to its S- start; result[i] = w_i.
  std::map<int, int> back_path(const SpineTable& t, int p, int w) {
    std::map<int, int> path{{p, w}};
    int s = t.s_minus[p].at(w);
    for (int i = p; i > s; --i) {
      int cur = path[i], next = -1;
      for (int v : g_.neighbors(cur)) {
        auto it = t.s_minus[i - 1].find(v);
        if (it != t.s_minus[i - 1].end() && it->second == s) {
          next = v;
          break;
        }
      }
      if (next < 0) fail(ErrorCode::kInternal, "broken back spine");
      path[i - 1] = next;
    }
    return path;
  }

  // Front spine from w at position p up to position end.
  std::map<int, int> front_path(const SpineTable& t, int p, int w, int end) {
    std::map<int, int> path{{p, w}};
    int s = t.s_plus[p].at(w);
    for (int i = p; i < end; ++i) {
      int cur = path[i], next = -1;
      for (int v : g_.neighbors(cur)) {
        auto it = t.s_plus[i + 1].find(v);
        if (it != t.s_plus[i + 1].end() && it->second == s) {
          next = v;
          break;
        }
      }
      if (next < 0) fail(ErrorCode::kInternal, "broken front spine");
      path[i + 1] = next;
    }
    return path;
  }

  std::vector<int> cycle(int entry, int w) {
    const CutEntry& e = at(entry);
    const SpineTable& t = *run_.spines[entry];
    int l = t.l;
    auto child = [&](int i) { return e.children[i - 1]; };
    auto in = [](const HubSet& s, int v) { return has(s, v); };
    // Back spine w_2..w_p, p in {l-1, l}.
    auto back_tree = [&](int p, int top) {
      auto path = back_path(t, p, top);
      std::vector<int> out = build(child(1), path[2]);
      for (int i = 2; i < l; ++i) append(out, build(child(i), path[i]));
      for (int i = 2; i < p; ++i) out.push_back(lowest_edge(g_, path[i], path[i + 1]));
      return out;
    };
    if (in(t.h0, w)) {
      int sm = t.s_minus[l].at(w);
      if (sm == 2) return back_tree(l, w);
      int gap = sm - 1;
      auto front = front_path(t, 0, w, gap - 2);
      auto back = back_path(t, l, w);
      std::vector<int> out;
      for (int i = 1; i <= gap - 2; ++i) append(out, build(child(i), front[i]));
      append(out, build(child(gap - 1), front[gap - 2]));
      for (int i = gap + 1; i < l; ++i) append(out, build(child(i), back[i]));
      append(out, build(child(gap), back[gap + 1]));
      for (int i = 0; i < gap - 2; ++i) out.push_back(lowest_edge(g_, front[i], front[i + 1]));
      for (int i = gap + 1; i < l; ++i) out.push_back(lowest_edge(g_, back[i], back[i + 1]));
      return out;
    }
    if (in(t.h_minus, w)) return back_tree(l - 1, w);
    if (in(t.h_plus, w)) {
      auto path = front_path(t, 1, w, l - 2);
      std::vector<int> out = build(child(l - 1), path[l - 2]);
      for (int i = 1; i <= l - 2; ++i) append(out, build(child(i), path[i]));
      for (int i = 1; i < l - 2; ++i) out.push_back(lowest_edge(g_, path[i], path[i + 1]));
      return out;
    }
    int n = g_.vertex_count();
    VertexSet inner = as_set(n, t.h_minus) | as_set(n, t.h_plus);
    return via(entry, attach_point(inner, w), w);
  }

  const Graph& g_;
  const HubRun& run_;
  std::map<std::pair<int, int>, std::vector<int>> memo_;
};

}  // namespace

std::vector<int> hub_witness(const Graph& g, const HubRun& run, int entry, int w) {
  return WitnessBuilder(g, run).build(entry, w);
}

SpanningTree reconstruct_witness_tree(const Graph& g, const Decision& d) {
  if (!d.yes() || !d.run) fail(ErrorCode::kPrecondition, "no witness after a NO decision");
  const HubRun& run = *d.run;
  int top = static_cast<int>(run.tree.entries.size()) - 1;
  return SpanningTree(g, hub_witness(g, run, top, run.tree.root_vertex));
}

}  // namespace stc

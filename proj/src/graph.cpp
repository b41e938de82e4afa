#include "graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>

#include "error.hpp"

namespace stc {

Graph::Graph(int vertex_count) {
  if (vertex_count < 0) fail(ErrorCode::kInvalidArgument, "negative vertex count");
  adj_.resize(vertex_count);
  labels_.resize(vertex_count);
}

int Graph::add_vertex(std::string label) {
  adj_.emplace_back();
  labels_.push_back(std::move(label));
  return vertex_count() - 1;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= vertex_count())
    fail(ErrorCode::kInvalidArgument, "vertex " + std::to_string(v) + " out of range");
}

int Graph::add_edge(int u, int v, DoubleWeight w) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) fail(ErrorCode::kInvalidArgument, "self-loop at vertex " + std::to_string(u));
  if (w.light < 1 || w.heavy < w.light)
    fail(ErrorCode::kInvalidArgument, "weight must satisfy 1 <= w1 <= w2");
  edges_.push_back({u, v, w});
  int id = edge_count() - 1;
  adj_[u].push_back(id);
  adj_[v].push_back(id);
  return id;
}

void Graph::set_weight(int e, DoubleWeight w) {
  if (w.light < 1 || w.heavy < w.light)
    fail(ErrorCode::kInvalidArgument, "weight must satisfy 1 <= w1 <= w2");
  edges_.at(e).w = w;
}

void Graph::set_label(int v, std::string label) {
  check_vertex(v);
  labels_[v] = std::move(label);
}

bool Graph::has_labels() const {
  return std::any_of(labels_.begin(), labels_.end(), [](const std::string& s) { return !s.empty(); });
}

bool Graph::all_unweighted() const {
  return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.w.unweighted(); });
}

bool Graph::canonical_weights() const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.w.light == e.w.heavy; });
}

std::vector<int> Graph::neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  for (int e : adj_[v]) out.push_back(edges_[e].other(v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SpanningTree::SpanningTree(const Graph& g, std::vector<int> edges) : edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  int n = g.vertex_count();
  if (n == 0) fail(ErrorCode::kNotATree, "graph has no vertices");
  if (static_cast<int>(edges_.size()) != n - 1)
    fail(ErrorCode::kNotATree, "tree needs " + std::to_string(n - 1) + " edges, got " +
                                   std::to_string(edges_.size()));
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (size_t i = 0; i < edges_.size(); ++i) {
    int e = edges_[i];
    if (e < 0 || e >= g.edge_count())
      fail(ErrorCode::kNotATree, "edge index " + std::to_string(e) + " out of range");
    if (i > 0 && edges_[i - 1] == e) fail(ErrorCode::kNotATree, "duplicate edge " + std::to_string(e));
    int a = find(g.edge(e).u), b = find(g.edge(e).v);
    if (a == b) fail(ErrorCode::kNotATree, "edge " + std::to_string(e) + " closes a cycle");
    parent[a] = b;
  }
}

bool SpanningTree::contains(int e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

static void check_shore(const Graph& g, const VertexSet& shore) {
  if (shore.universe() != g.vertex_count())
    fail(ErrorCode::kInvalidShore, "shore universe does not match the graph");
  int c = shore.count();
  if (c == 0 || c == g.vertex_count()) fail(ErrorCode::kInvalidShore, "shore must be a nonempty proper subset");
}

std::vector<int> cut_edges(const Graph& g, const VertexSet& shore) {
  check_shore(g, shore);
  std::vector<int> out;
  for (int e = 0; e < g.edge_count(); ++e)
    if (shore.contains(g.edge(e).u) != shore.contains(g.edge(e).v)) out.push_back(e);
  return out;
}

Weight weighted_cut_size(const Graph& g, const VertexSet& shore) {
  Weight s = 0;
  for (int e : cut_edges(g, shore)) s += g.edge(e).w.light;
  return s;
}

Weight weighted_degree(const Graph& g, int v) {
  if (v < 0 || v >= g.vertex_count()) fail(ErrorCode::kInvalidArgument, "vertex out of range");
  Weight s = 0;
  for (int e : g.incident(v)) s += g.edge(e).w.light;
  return s;
}

VertexSet cut_boundary(const Graph& g, const VertexSet& shore) {
  VertexSet out(g.vertex_count());
  for (int e : cut_edges(g, shore)) {
    out.insert(g.edge(e).u);
    out.insert(g.edge(e).v);
  }
  return out;
}

VertexSet reachable(const Graph& g, int start, const std::vector<char>& keep) {
  VertexSet seen(g.vertex_count());
  std::vector<int> stack{start};
  seen.insert(start);
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int e : g.incident(x)) {
      if (!keep[e]) continue;
      int y = g.edge(e).other(x);
      if (!seen.contains(y)) {
        seen.insert(y);
        stack.push_back(y);
      }
    }
  }
  return seen;
}

std::pair<VertexSet, VertexSet> tree_shores(const Graph& g, const SpanningTree& t, int e) {
  if (!t.contains(e)) fail(ErrorCode::kInvalidArgument, "edge " + std::to_string(e) + " is not a tree edge");
  std::vector<char> keep(g.edge_count(), 0);
  for (int f : t.edges()) keep[f] = 1;
  keep[e] = 0;
  VertexSet a = reachable(g, g.edge(e).u, keep);
  return {a, a.complement()};
}

Weight edge_congestion(const Graph& g, const SpanningTree& t, int e) {
  auto [a, b] = tree_shores(g, t, e);
  Weight s = g.edge(e).w.heavy;
  for (int f : cut_edges(g, a))
    if (f != e) s += g.edge(f).w.light;
  return s;
}

std::vector<Weight> all_edge_congestions(const Graph& g, const SpanningTree& t) {
  // Root at 0; every non-tree edge adds its light weight along its tree path,
  // accumulated by subtree sums with an LCA correction.
  int n = g.vertex_count();
  std::vector<char> in_tree(g.edge_count(), 0);
  for (int e : t.edges()) in_tree[e] = 1;
  std::vector<int> parent(n, -1), parent_edge(n, -1), depth(n, 0), order;
  order.reserve(n);
  std::vector<char> seen(n, 0);
  order.push_back(0);
  seen[0] = 1;
  for (size_t i = 0; i < order.size(); ++i) {
    int x = order[i];
    for (int e : g.incident(x)) {
      if (!in_tree[e]) continue;
      int y = g.edge(e).other(x);
      if (seen[y]) continue;
      seen[y] = 1;
      parent[y] = x;
      parent_edge[y] = e;
      depth[y] = depth[x] + 1;
      order.push_back(y);
    }
  }
  if (static_cast<int>(order.size()) != n) fail(ErrorCode::kNotATree, "tree does not span the graph");
  std::vector<Weight> acc(n, 0);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (in_tree[e]) continue;
    int a = g.edge(e).u, b = g.edge(e).v;
    Weight w = g.edge(e).w.light;
    acc[a] += w;
    acc[b] += w;
    while (a != b) {
      if (depth[a] < depth[b]) std::swap(a, b);
      a = parent[a];
    }
    acc[a] -= 2 * w;
  }
  for (int i = n - 1; i > 0; --i) acc[parent[order[i]]] += acc[order[i]];
  std::vector<Weight> by_edge(g.edge_count(), 0);
  for (int v = 1; v < n; ++v) by_edge[parent_edge[order[v]]] = acc[order[v]];
  std::vector<Weight> out;
  out.reserve(t.edges().size());
  for (int e : t.edges()) out.push_back(by_edge[e] + g.edge(e).w.heavy);
  return out;
}

Weight tree_congestion(const Graph& g, const SpanningTree& t) {
  if (g.vertex_count() <= 1) return 0;
  auto all = all_edge_congestions(g, t);
  return *std::max_element(all.begin(), all.end());
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  std::vector<char> keep(g.edge_count(), 1);
  return reachable(g, 0, keep).count() == g.vertex_count();
}

namespace {

// Augmenting-path max flow on the undirected graph plus a super source and sink.
class FlowNetwork {
 public:
  explicit FlowNetwork(int n) : head_(n, -1) {}

  void add_undirected(int a, int b, Weight cap) {
    add_arc(a, b, cap);
    add_arc(b, a, cap);
  }
  void add_directed(int a, int b, Weight cap) {
    add_arc(a, b, cap);
    add_arc(b, a, 0);
  }

  Weight max_flow(int s, int t, Weight limit) {
    Weight flow = 0;
    int n = static_cast<int>(head_.size());
    std::vector<int> via(n);
    while (flow <= limit) {
      std::fill(via.begin(), via.end(), -1);
      std::queue<int> q;
      q.push(s);
      via[s] = -2;
      while (!q.empty() && via[t] == -1) {
        int x = q.front();
        q.pop();
        for (int a = head_[x]; a != -1; a = next_[a]) {
          if (cap_[a] > 0 && via[to_[a]] == -1) {
            via[to_[a]] = a;
            q.push(to_[a]);
          }
        }
      }
      if (via[t] == -1) break;
      Weight push = std::numeric_limits<Weight>::max();
      for (int x = t; x != s; x = to_[via[x] ^ 1]) push = std::min(push, cap_[via[x]]);
      for (int x = t; x != s; x = to_[via[x] ^ 1]) {
        cap_[via[x]] -= push;
        cap_[via[x] ^ 1] += push;
      }
      flow += push;
    }
    return flow;
  }

 private:
  void add_arc(int a, int b, Weight cap) {
    to_.push_back(b);
    cap_.push_back(cap);
    next_.push_back(head_[a]);
    head_[a] = static_cast<int>(to_.size()) - 1;
  }

  std::vector<int> head_, to_, next_;
  std::vector<Weight> cap_;
};

constexpr Weight kUnbounded = std::numeric_limits<Weight>::max() / 4;

}  // namespace

Weight min_separating_cut(const Graph& g, const VertexSet& sources, const VertexSet& sinks,
                          Weight stop_above) {
  int n = g.vertex_count();
  FlowNetwork net(n + 2);
  for (const Edge& e : g.edges()) net.add_undirected(e.u, e.v, e.w.light);
  for (int v = 0; v < n; ++v) {
    if (sources.contains(v)) net.add_directed(n, v, kUnbounded);
    if (sinks.contains(v)) net.add_directed(v, n + 1, kUnbounded);
  }
  return net.max_flow(n, n + 1, stop_above);
}

Weight edge_connectivity(const Graph& g) {
  int n = g.vertex_count();
  if (n < 2) fail(ErrorCode::kInvalidArgument, "edge connectivity needs at least two vertices");
  if (!is_connected(g)) return 0;
  Weight best = kUnbounded;
  VertexSet src(n);
  src.insert(0);
  for (int t = 1; t < n; ++t) {
    VertexSet snk(n);
    snk.insert(t);
    best = std::min(best, min_separating_cut(g, src, snk, best));
  }
  return best;
}

Graph permute_vertices(const Graph& g, const std::vector<int>& perm) {
  Graph out(g.vertex_count());
  for (const Edge& e : g.edges()) out.add_edge(perm.at(e.u), perm.at(e.v), e.w);
  for (int v = 0; v < g.vertex_count(); ++v) out.set_label(perm[v], g.label(v));
  return out;
}

}  // namespace stc

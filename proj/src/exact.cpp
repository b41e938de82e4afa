#include "exact.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

#include "error.hpp"

namespace stc {

namespace {

// Union-find with undo; no path compression so unions can be rolled back.
class RollbackDsu {
 public:
  explicit RollbackDsu(int n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    history_.push_back(b);
  }
  void undo() {
    int b = history_.back();
    history_.pop_back();
    int a = parent_[b];
    size_[a] -= size_[b];
    parent_[b] = b;
  }

 private:
  std::vector<int> parent_, size_;
  std::vector<int> history_;
};

void require_connected(const Graph& g) {
  if (g.vertex_count() == 0) fail(ErrorCode::kInvalidArgument, "graph has no vertices");
  if (!is_connected(g)) fail(ErrorCode::kDisconnected, "graph is disconnected");
}

class Enumerator {
 public:
  Enumerator(const Graph& g, const std::function<bool(const SpanningTree&)>& visit)
      : g_(g), visit_(visit), dsu_(g.vertex_count()), keep_(g.edge_count(), 1) {}

  void run() { recurse(0); }

 private:
  bool recurse(int e) {
    if (static_cast<int>(chosen_.size()) == g_.vertex_count() - 1)
      return visit_(SpanningTree(g_, chosen_));
    if (e == g_.edge_count()) return true;
    const Edge& ed = g_.edge(e);
    if (dsu_.find(ed.u) != dsu_.find(ed.v)) {
      dsu_.unite(ed.u, ed.v);
      chosen_.push_back(e);
      bool go = recurse(e + 1);
      chosen_.pop_back();
      dsu_.undo();
      if (!go) return false;
    }
    keep_[e] = 0;
    bool go = true;
    if (still_connected()) go = recurse(e + 1);
    keep_[e] = 1;
    return go;
  }

  bool still_connected() const { return reachable(g_, 0, keep_).count() == g_.vertex_count(); }

  const Graph& g_;
  const std::function<bool(const SpanningTree&)>& visit_;
  RollbackDsu dsu_;
  std::vector<char> keep_;
  std::vector<int> chosen_;
};

// Decides one search subtree. Edges are processed in an order derived from a
// BFS vertex order. A vertex is closed once all its edges are decided; when
// one side of a forest edge consists of closed vertices only, that side is a
// final tree shore and its congestion is already known.
class BranchAndBound {
 public:
  BranchAndBound(const Graph& g, Weight k, const std::vector<std::vector<int>>& order, uint64_t cap,
                 std::atomic<uint64_t>& nodes, std::atomic<bool>& stop)
      : g_(g),
        k_(k),
        order_(order),
        cap_(cap),
        nodes_(nodes),
        stop_(stop),
        n_(g.vertex_count()),
        dsu_(n_),
        state_(g.edge_count(), 0),
        open_edges_(n_, 0),
        forest_(n_),
        mark_(n_, 0),
        tin_(n_),
        tout_(n_),
        open_below_(n_),
        parent_edge_(n_) {
    for (const Edge& e : g.edges()) {
      ++open_edges_[e.u];
      ++open_edges_[e.v];
    }
  }

  // Searches below a fixed prefix of decisions (1 include, 2 exclude).
  bool run(const std::vector<char>& prefix) {
    prefix_ = prefix;
    return recurse(0);
  }
  bool exhausted() const { return exhausted_; }
  const std::vector<int>& witness() const { return witness_; }

 private:
  bool recurse(size_t i) {
    if (stop_.load(std::memory_order_relaxed)) return false;
    if (nodes_.fetch_add(1, std::memory_order_relaxed) >= cap_) {
      exhausted_ = true;
      stop_.store(true);
      return false;
    }
    if (i == order_.size()) return leaf();
    const Edge& ed = g_.edge(order_[i].front());
    bool joinable = dsu_.find(ed.u) != dsu_.find(ed.v);
    char forced = i < prefix_.size() ? prefix_[i] : 0;
    if (joinable && ed.w.heavy <= k_ && forced != 2) {
      if (apply(i, true)) return true;
    }
    if (forced == 1) return false;
    return apply(i, false);
  }

  // Decides bundle i: its first edge goes in or the whole bundle goes out.
  bool apply(size_t i, bool take) {
    const std::vector<int>& bundle = order_[i];
    const Edge& ed = g_.edge(bundle.front());
    int span = static_cast<int>(bundle.size());
    for (int e : bundle) state_[e] = 2;
    if (take) {
      state_[bundle.front()] = 1;
      dsu_.unite(ed.u, ed.v);
      forest_[ed.u].push_back(bundle.front());
      forest_[ed.v].push_back(bundle.front());
    }
    open_edges_[ed.u] -= span;
    open_edges_[ed.v] -= span;
    bool ok = !take || merged_ok(ed.u);
    if (ok && open_edges_[ed.u] == 0) ok = closed_ok(ed.u);
    if (ok && open_edges_[ed.v] == 0) ok = closed_ok(ed.v);
    bool found = ok && recurse(i + 1);
    open_edges_[ed.u] += span;
    open_edges_[ed.v] += span;
    if (take) {
      forest_[ed.u].pop_back();
      forest_[ed.v].pop_back();
      dsu_.undo();
    }
    for (int e : bundle) state_[e] = 0;
    return found;
  }

  // x just closed. Dead if its component is finished but not spanning;
  // otherwise check every newly sealed side containing x.
  bool closed_ok(int x) {
    comp_.clear();
    int open_root = -1;
    ++stamp_;
    std::vector<int>& stack = scratch_;
    stack.assign(1, x);
    mark_[x] = stamp_;
    while (!stack.empty()) {
      int y = stack.back();
      stack.pop_back();
      comp_.push_back(y);
      if (open_edges_[y] > 0 && open_root < 0) open_root = y;
      for (int e : forest_[y]) {
        int z = g_.edge(e).other(y);
        if (mark_[z] != stamp_) {
          mark_[z] = stamp_;
          stack.push_back(z);
        }
      }
    }
    if (open_root < 0) return static_cast<int>(comp_.size()) == n_;
    // Root the component at an open vertex, then walk up from x.
    int clock = 0;
    dfs(open_root, -1, clock);
    for (int y = x; y != open_root;) {
      if (open_below_[y] > 0) break;
      int pe = parent_edge_[y];
      Weight c = g_.edge(pe).w.heavy;
      for (int v : comp_) {
        if (tin_[v] < tin_[y] || tin_[v] >= tout_[y]) continue;
        for (int f : g_.incident(v)) {
          if (f == pe) continue;
          int z = g_.edge(f).other(v);
          bool inside = mark_[z] == stamp_ && tin_[z] >= tin_[y] && tin_[z] < tout_[y];
          if (!inside) c += g_.edge(f).w.light;
        }
      }
      if (c > k_) return false;
      y = g_.edge(pe).other(y);
    }
    return true;
  }

  // The two sides of a forest edge inside one component stay apart in every
  // completion, so each edge joining them crosses the final cut. Checks that
  // lower bound for every forest edge of the component of x.
  bool merged_ok(int x) {
    ++stamp_;
    comp_.clear();
    comp_.push_back(x);
    mark_[x] = stamp_;
    parent_edge_[x] = -1;
    depth_[x] = 0;
    for (size_t i = 0; i < comp_.size(); ++i) {
      int y = comp_[i];
      cross_[y] = 0;
      for (int e : forest_[y]) {
        int z = g_.edge(e).other(y);
        if (mark_[z] == stamp_) continue;
        mark_[z] = stamp_;
        parent_edge_[z] = e;
        depth_[z] = depth_[y] + 1;
        comp_.push_back(z);
      }
    }
    if (comp_.size() < 2) return true;
    for (int v : comp_)
      for (int f : g_.incident(v)) {
        int z = g_.edge(f).other(v);
        if (z < v || mark_[z] != stamp_ || state_[f] == 1) continue;
        Weight w = g_.edge(f).w.light;
        int a = v, b = z;
        while (a != b) {
          if (depth_[a] < depth_[b]) std::swap(a, b);
          a = g_.edge(parent_edge_[a]).other(a);
        }
        cross_[v] += w;
        cross_[z] += w;
        cross_[a] -= 2 * w;
      }
    // Children follow parents in comp_, so a reverse sweep sums subtrees.
    for (size_t i = comp_.size(); i-- > 1;) {
      int y = comp_[i];
      int pe = parent_edge_[y];
      if (g_.edge(pe).w.heavy + cross_[y] > k_) return false;
      cross_[g_.edge(pe).other(y)] += cross_[y];
    }
    return true;
  }

  void dfs(int root, int via, int& clock) {
    // Iterative DFS filling tin/tout, parent edges and open counts.
    struct Frame {
      int v, via;
      size_t next;
    };
    std::vector<Frame> st{{root, via, 0}};
    tin_[root] = clock++;
    parent_edge_[root] = via;
    open_below_[root] = open_edges_[root] > 0 ? 1 : 0;
    while (!st.empty()) {
      Frame& f = st.back();
      if (f.next < forest_[f.v].size()) {
        int e = forest_[f.v][f.next++];
        if (e == f.via) continue;
        int z = g_.edge(e).other(f.v);
        tin_[z] = clock++;
        parent_edge_[z] = e;
        open_below_[z] = open_edges_[z] > 0 ? 1 : 0;
        st.push_back({z, e, 0});
      } else {
        int v = f.v;
        tout_[v] = clock;
        st.pop_back();
        if (!st.empty()) open_below_[st.back().v] += open_below_[v];
      }
    }
  }

  bool leaf() {
    std::vector<int> edges;
    for (int e = 0; e < g_.edge_count(); ++e)
      if (state_[e] == 1) edges.push_back(e);
    if (static_cast<int>(edges.size()) != n_ - 1) return false;
    SpanningTree t(g_, edges);
    if (n_ > 1 && tree_congestion(g_, t) > k_) return false;
    witness_ = std::move(edges);
    return true;
  }

  const Graph& g_;
  Weight k_;
  const std::vector<std::vector<int>>& order_;
  uint64_t cap_;
  std::atomic<uint64_t>& nodes_;
  std::atomic<bool>& stop_;
  int n_;
  RollbackDsu dsu_;
  std::vector<char> state_;
  std::vector<int> open_edges_;
  std::vector<std::vector<int>> forest_;
  std::vector<int> mark_;
  int stamp_ = 0;
  std::vector<int> comp_, scratch_;
  std::vector<int> tin_, tout_, open_below_, parent_edge_;
  std::vector<int> depth_ = std::vector<int>(n_);
  std::vector<Weight> cross_ = std::vector<Weight>(n_);
  std::vector<char> prefix_;
  std::vector<int> witness_;
  bool exhausted_ = false;
};

// Edges grouped into bundles of parallel edges with equal weights, ordered by
// the later endpoint in a BFS order from vertex 0.
std::vector<std::vector<int>> search_order(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> pos(n, -1), bfs{0};
  pos[0] = 0;
  for (size_t i = 0; i < bfs.size(); ++i) {
    for (int y : g.neighbors(bfs[i])) {
      if (pos[y] < 0) {
        pos[y] = static_cast<int>(bfs.size());
        bfs.push_back(y);
      }
    }
  }
  std::map<std::tuple<int, int, Weight, Weight>, std::vector<int>> bundles;
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    int a = pos[ed.u], b = pos[ed.v];
    bundles[{std::max(a, b), std::min(a, b), ed.w.light, ed.w.heavy}].push_back(e);
  }
  std::vector<std::vector<int>> order;
  for (auto& [key, edges] : bundles) order.push_back(std::move(edges));
  return order;
}

// All decision prefixes of the given depth, in search order.
std::vector<std::vector<char>> prefixes(size_t depth) {
  std::vector<std::vector<char>> out{{}};
  for (size_t d = 0; d < depth; ++d) {
    std::vector<std::vector<char>> next;
    for (const auto& p : out) {
      for (char c : {char{1}, char{2}}) {
        next.push_back(p);
        next.back().push_back(c);
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

bool enumerate_spanning_trees(const Graph& g, const std::function<bool(const SpanningTree&)>& visit) {
  if (g.vertex_count() == 0 || !is_connected(g)) return false;
  Enumerator(g, visit).run();
  return true;
}

DecideResult stc_decide(const Graph& g, Weight k, const SearchOptions& opts) {
  require_connected(g);
  std::vector<std::vector<int>> order = search_order(g);
  std::atomic<uint64_t> nodes{0};
  DecideResult result;
  int jobs = std::max(1, opts.jobs);
  if (jobs == 1) {
    std::atomic<bool> stop{false};
    BranchAndBound bb(g, k, order, opts.max_nodes, nodes, stop);
    bool yes = bb.run({});
    result.nodes = nodes.load();
    if (yes) {
      result.outcome = DecideOutcome::kYes;
      result.witness = SpanningTree(g, bb.witness());
    } else {
      result.outcome = bb.exhausted() ? DecideOutcome::kBudgetExceeded : DecideOutcome::kNo;
    }
    return result;
  }
  // Split on the first few decisions; the earliest prefix with a tree wins,
  // which is the tree the sequential search would return.
  size_t depth = std::min<size_t>(order.size(), 6);
  auto work = prefixes(depth);
  std::vector<char> answer(work.size(), 0);
  std::vector<std::vector<int>> trees(work.size());
  std::atomic<size_t> next{0};
  std::atomic<bool> stop{false};
  std::atomic<bool> exhausted{false};
  std::atomic<size_t> best{work.size()};
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= work.size() || i > best.load()) return;
      std::atomic<bool> local_stop{false};
      BranchAndBound bb(g, k, order, opts.max_nodes, nodes, local_stop);
      if (bb.run(work[i])) {
        answer[i] = 1;
        trees[i] = bb.witness();
        size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
      if (bb.exhausted()) {
        exhausted = true;
        return;
      }
      if (stop.load()) return;
    }
  };
  std::vector<std::thread> pool;
  for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  result.nodes = nodes.load();
  if (exhausted.load()) {
    result.outcome = DecideOutcome::kBudgetExceeded;
    return result;
  }
  for (size_t i = 0; i < work.size(); ++i) {
    if (answer[i]) {
      result.outcome = DecideOutcome::kYes;
      result.witness = SpanningTree(g, trees[i]);
      return result;
    }
  }
  result.outcome = DecideOutcome::kNo;
  return result;
}

StcResult stc_exact(const Graph& g, const SearchOptions& opts) {
  require_connected(g);
  if (g.vertex_count() == 1) return {0, SpanningTree(g, {}), 0};
  // Every induced cut weighs at least lambda. Tighten an upper bound from a
  // BFS tree until the bound below it is refuted, then report the first tree
  // the search meets at the optimum.
  Weight lower = edge_connectivity(g);
  uint64_t used = 0;
  auto decide = [&](Weight k) {
    SearchOptions sub = opts;
    sub.max_nodes = opts.max_nodes - used;
    DecideResult d = stc_decide(g, k, sub);
    used += d.nodes;
    if (d.outcome == DecideOutcome::kBudgetExceeded || used >= opts.max_nodes)
      fail(ErrorCode::kBudgetExceeded, "search budget of " + std::to_string(opts.max_nodes) +
                                           " nodes exceeded at bound " + std::to_string(k));
    return d;
  };
  std::vector<int> bfs_edges;
  {
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    for (size_t i = 0; i < queue.size(); ++i)
      for (int e : g.incident(queue[i])) {
        int y = g.edge(e).other(queue[i]);
        if (!seen[y]) {
          seen[y] = 1;
          bfs_edges.push_back(e);
          queue.push_back(y);
        }
      }
  }
  Weight upper = tree_congestion(g, SpanningTree(g, bfs_edges));
  while (upper > lower) {
    DecideResult d = decide(upper - 1);
    if (d.outcome != DecideOutcome::kYes) break;
    upper = tree_congestion(g, *d.witness);
  }
  DecideResult last = decide(upper);
  return {upper, *last.witness, used};
}

bool bottleneck_path_property(const Graph& g, int s, int t, Weight w) {
  if (s == t) fail(ErrorCode::kInvalidArgument, "gates must differ");
  if (s < 0 || t < 0 || s >= g.vertex_count() || t >= g.vertex_count())
    fail(ErrorCode::kInvalidArgument, "gate out of range");
  require_connected(g);
  bool holds = true;
  enumerate_spanning_trees(g, [&](const SpanningTree& tree) {
    std::vector<char> keep(g.edge_count(), 0);
    for (int e : tree.edges()) keep[e] = 1;
    // Walk the s-t path via parent pointers from s.
    std::vector<int> via(g.vertex_count(), -1);
    std::vector<int> stack{s};
    std::vector<char> seen(g.vertex_count(), 0);
    seen[s] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int e : g.incident(x)) {
        int y = g.edge(e).other(x);
        if (keep[e] && !seen[y]) {
          seen[y] = 1;
          via[y] = e;
          stack.push_back(y);
        }
      }
    }
    auto cong = all_edge_congestions(g, tree);
    Weight best = 0;
    for (int x = t; x != s;) {
      int e = via[x];
      auto it = std::lower_bound(tree.edges().begin(), tree.edges().end(), e);
      best = std::max(best, cong[it - tree.edges().begin()]);
      x = g.edge(e).other(x);
    }
    if (best < w) holds = false;
    return holds;
  });
  return holds;
}

}  // namespace stc

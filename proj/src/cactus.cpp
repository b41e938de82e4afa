#include "cactus.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "error.hpp"

namespace stc {

namespace {

class CutEnumerator {
 public:
  CutEnumerator(const Graph& g, Weight k) : g_(g), k_(k), in_(g.vertex_count()), out_(g.vertex_count()) {
    out_.insert(0);
  }

  std::vector<VertexSet> run() {
    recurse(1);
    return found_;
  }

 private:
  void recurse(int v) {
    if (!in_.empty() && min_separating_cut(g_, in_, out_, k_) > k_) return;
    if (v == g_.vertex_count()) {
      if (!in_.empty() && weighted_cut_size(g_, in_) == k_) found_.push_back(in_);
      return;
    }
    in_.insert(v);
    recurse(v + 1);
    in_.erase(v);
    out_.insert(v);
    recurse(v + 1);
    out_.erase(v);
  }

  const Graph& g_;
  Weight k_;
  VertexSet in_, out_;
  std::vector<VertexSet> found_;
};

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

[[noreturn]] void inconsistent(const std::string& why) {
  fail(ErrorCode::kInternal, "cut family does not fit a cactus: " + why);
}

}  // namespace

bool shores_cross(const VertexSet& a, const VertexSet& b) {
  if (!a.intersects(b)) return false;
  if (a.subset_of(b) || b.subset_of(a)) return false;
  return !(a | b).complement().empty();
}

MinCutFamily enumerate_min_cuts(const Graph& g) {
  if (g.vertex_count() < 2) fail(ErrorCode::kInvalidArgument, "need at least two vertices");
  if (!is_connected(g)) fail(ErrorCode::kDisconnected, "graph is disconnected");
  MinCutFamily fam;
  fam.k = edge_connectivity(g);
  fam.shores = CutEnumerator(g, fam.k).run();
  std::sort(fam.shores.begin(), fam.shores.end());
  return fam;
}

std::vector<std::vector<int>> Cactus::preimages() const {
  std::vector<std::vector<int>> out(node_count);
  for (size_t v = 0; v < phi.size(); ++v) out[phi[v]].push_back(static_cast<int>(v));
  return out;
}

std::vector<std::vector<int>> Cactus::cycles_at() const {
  std::vector<std::vector<int>> out(node_count);
  for (size_t c = 0; c < cycles.size(); ++c)
    for (int x : cycles[c]) out[x].push_back(static_cast<int>(c));
  return out;
}

// Laminar members form a rooted tree under inclusion (root = the node
// holding vertex 0). Each crossing class of cuts becomes one cycle whose
// members are the Venn regions of the class, hung off the node of the
// complement of the region holding vertex 0.
Cactus build_cactus(const Graph& g, const MinCutFamily& cuts) {
  int n = g.vertex_count();
  const auto& shores = cuts.shores;
  int f = static_cast<int>(shores.size());
  std::map<VertexSet, int> index;
  for (int i = 0; i < f; ++i) {
    if (shores[i].universe() != n || shores[i].contains(0) || shores[i].empty())
      inconsistent("shore not oriented away from vertex 0");
    index[shores[i]] = i;
  }
  auto canonical = [&](const VertexSet& s) { return s.contains(0) ? s.complement() : s; };

  Dsu cross(f);
  std::vector<char> crossing(f, 0);
  for (int i = 0; i < f; ++i)
    for (int j = i + 1; j < f; ++j)
      if (shores_cross(shores[i], shores[j])) {
        cross.unite(i, j);
        crossing[i] = crossing[j] = 1;
      }

  // Tree node 0 is the root; laminar shore i gets node 1 + rank.
  std::vector<int> laminar;
  for (int i = 0; i < f; ++i)
    if (!crossing[i]) laminar.push_back(i);
  std::vector<int> node_of(f, -1);
  for (size_t r = 0; r < laminar.size(); ++r) node_of[laminar[r]] = static_cast<int>(r) + 1;
  int tree_nodes = static_cast<int>(laminar.size()) + 1;
  std::vector<int> tree_parent(tree_nodes, -1);
  for (int i : laminar) {
    int best = -1;
    for (int j : laminar)
      if (j != i && shores[i].subset_of(shores[j]) &&
          (best < 0 || shores[j].count() < shores[best].count()))
        best = j;
    tree_parent[node_of[i]] = best < 0 ? 0 : node_of[best];
  }
  std::vector<int> vertex_node(n, 0);
  for (int v = 0; v < n; ++v) {
    int best = -1;
    for (int j : laminar)
      if (shores[j].contains(v) && (best < 0 || shores[j].count() < shores[best].count())) best = j;
    vertex_node[v] = best < 0 ? 0 : node_of[best];
  }

  // Crossing classes.
  std::map<int, std::vector<int>> classes;
  for (int i = 0; i < f; ++i)
    if (crossing[i]) classes[cross.find(i)].push_back(i);

  struct Ring {
    int center;
    std::vector<int> members;  // tree nodes in cyclic order, starting after the region of vertex 0
  };
  std::vector<Ring> rings;
  std::vector<int> member_of(tree_nodes, -1);
  for (auto& [rep, members] : classes) {
    // Venn regions by membership signature.
    std::map<std::vector<char>, VertexSet> regions;
    for (int v = 0; v < n; ++v) {
      std::vector<char> sig;
      for (int i : members) sig.push_back(shores[i].contains(v));
      auto it = regions.try_emplace(sig, VertexSet(n)).first;
      it->second.insert(v);
    }
    std::vector<VertexSet> parts;
    for (auto& [sig, set] : regions) parts.push_back(set);
    std::sort(parts.begin(), parts.end());  // the region of vertex 0 sorts first
    int p = static_cast<int>(parts.size());
    if (p < 4) inconsistent("crossing class with fewer than four regions");
    std::vector<std::vector<int>> adj(p);
    for (int a = 0; a < p; ++a)
      for (int b = a + 1; b < p; ++b)
        if (index.count(canonical(parts[a] | parts[b]))) {
          adj[a].push_back(b);
          adj[b].push_back(a);
        }
    std::vector<int> order{0};
    for (int a = 0; a < p; ++a)
      if (adj[a].size() != 2) inconsistent("regions do not form a cycle");
    int prev = -1, cur = 0;
    while (true) {
      int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      if (next == 0) break;
      order.push_back(next);
      prev = cur;
      cur = next;
    }
    if (static_cast<int>(order.size()) != p) inconsistent("regions form several cycles");
    Ring ring;
    auto center_it = index.find(canonical(parts[0].complement()));
    if (center_it == index.end() || crossing[center_it->second]) inconsistent("missing center cut");
    ring.center = node_of[center_it->second];
    for (int a = 1; a < p; ++a) {
      auto it = index.find(parts[order[a]]);
      if (it == index.end() || crossing[it->second]) inconsistent("missing region cut");
      int node = node_of[it->second];
      if (tree_parent[node] != ring.center) inconsistent("region not a child of its center");
      if (member_of[node] >= 0) inconsistent("region in two cycles");
      member_of[node] = static_cast<int>(rings.size());
      ring.members.push_back(node);
    }
    rings.push_back(std::move(ring));
  }

  // A center that is not itself on another cycle is merged into its parent.
  std::vector<char> merged(tree_nodes, 0);
  std::vector<int> anchor(rings.size());
  for (size_t r = 0; r < rings.size(); ++r) {
    int c = rings[r].center;
    if (member_of[c] >= 0 || c == 0) {
      anchor[r] = c;
    } else {
      merged[c] = 1;
      anchor[r] = tree_parent[c];
    }
  }
  for (size_t r = 0; r < rings.size(); ++r)
    for (size_t s = 0; s < rings.size(); ++s)
      if (merged[rings[s].center] && anchor[r] == rings[s].center) inconsistent("nested merged centers");

  Cactus out;
  std::vector<int> rename(tree_nodes, -1);
  for (int x = 0; x < tree_nodes; ++x)
    if (!merged[x]) rename[x] = out.node_count++;
  for (size_t r = 0; r < rings.size(); ++r) {
    std::vector<int> cyc{rename[anchor[r]]};
    for (int m : rings[r].members) cyc.push_back(rename[m]);
    out.cycles.push_back(std::move(cyc));
  }
  for (int x = 1; x < tree_nodes; ++x) {
    if (merged[x] || member_of[x] >= 0) continue;
    int y = tree_parent[x];
    if (merged[y]) inconsistent("child of a merged center outside its cycle");
    out.cycles.push_back({rename[y], rename[x]});
  }
  std::sort(out.cycles.begin(), out.cycles.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return std::pair(a.size() == 2, a) < std::pair(b.size() == 2, b);
            });
  out.phi.resize(n);
  for (int v = 0; v < n; ++v) {
    if (merged[vertex_node[v]]) inconsistent("vertex mapped to a merged center");
    out.phi[v] = rename[vertex_node[v]];
  }
  return out;
}

std::vector<VertexSet> cactus_cut_shores(const Cactus& c, int vertex_count) {
  struct Link {
    int a, b;
  };
  std::vector<Link> links;
  std::vector<std::vector<int>> cycle_links;
  for (const auto& cyc : c.cycles) {
    std::vector<int> ids;
    int l = static_cast<int>(cyc.size());
    for (int i = 0; i < l; ++i) {
      ids.push_back(static_cast<int>(links.size()));
      links.push_back({cyc[i], cyc[(i + 1) % l]});
    }
    cycle_links.push_back(std::move(ids));
  }
  std::vector<std::vector<int>> at(c.node_count);
  for (size_t i = 0; i < links.size(); ++i) {
    at[links[i].a].push_back(static_cast<int>(i));
    at[links[i].b].push_back(static_cast<int>(i));
  }
  auto pre = c.preimages();
  std::set<VertexSet> out;
  for (size_t ci = 0; ci < c.cycles.size(); ++ci) {
    const auto& ids = cycle_links[ci];
    for (size_t i = 0; i < ids.size(); ++i)
      for (size_t j = i + 1; j < ids.size(); ++j) {
        int start = links[ids[i]].b;
        std::vector<char> seen(c.node_count, 0);
        std::vector<int> stack{start};
        seen[start] = 1;
        VertexSet shore(vertex_count);
        while (!stack.empty()) {
          int x = stack.back();
          stack.pop_back();
          for (int v : pre[x]) shore.insert(v);
          for (int l : at[x]) {
            if (l == ids[i] || l == ids[j]) continue;
            int y = links[l].a == x ? links[l].b : links[l].a;
            if (!seen[y]) {
              seen[y] = 1;
              stack.push_back(y);
            }
          }
        }
        if (shore.contains(0)) shore = shore.complement();
        out.insert(shore);
      }
  }
  return {out.begin(), out.end()};
}

bool check_preimage_condition(const Cactus& c) {
  for (const auto& p : c.preimages())
    if (p.size() > 1) return false;
  return true;
}

std::optional<RootedCutTree> root_cut_tree(const Graph& g, const Cactus& c, Weight k) {
  if (!check_preimage_condition(c)) fail(ErrorCode::kPrecondition, "a cactus node has several preimages");
  int n = g.vertex_count();
  int r = -1;
  for (int v = 0; v < n && r < 0; ++v)
    if (weighted_degree(g, v) == k) r = v;
  if (r < 0) return std::nullopt;

  RootedCutTree out;
  out.k = k;
  out.root_vertex = r;
  out.root_node = c.phi[r];
  auto pre = c.preimages();
  auto at = c.cycles_at();

  // Orient every cycle from the node nearest the root.
  std::vector<std::vector<int>> headed(c.node_count);  // node -> cycles it heads
  std::vector<std::vector<int>> rotated(c.cycles.size());
  std::vector<char> seen_cycle(c.cycles.size(), 0), seen_node(c.node_count, 0);
  std::vector<int> queue{out.root_node};
  seen_node[out.root_node] = 1;
  for (size_t q = 0; q < queue.size(); ++q) {
    int x = queue[q];
    for (int ci : at[x]) {
      if (seen_cycle[ci]) continue;
      seen_cycle[ci] = 1;
      headed[x].push_back(ci);
      const auto& cyc = c.cycles[ci];
      auto pos = std::find(cyc.begin(), cyc.end(), x) - cyc.begin();
      int l = static_cast<int>(cyc.size());
      for (int i = 0; i < l; ++i) rotated[ci].push_back(cyc[(pos + i) % l]);
      for (int i = 1; i < l; ++i) {
        int y = rotated[ci][i];
        if (seen_node[y]) fail(ErrorCode::kInternal, "cactus is not a cactus");
        seen_node[y] = 1;
        queue.push_back(y);
      }
    }
  }

  std::vector<int> node_entry(c.node_count, -1), cycle_entry(c.cycles.size(), -1);
  std::function<VertexSet(int)> emit_node;
  std::function<VertexSet(int)> emit_cycle = [&](int ci) {
    VertexSet shore(n);
    std::vector<int> kids;
    for (size_t i = 1; i < rotated[ci].size(); ++i) {
      int y = rotated[ci][i];
      shore |= emit_node(y);
      kids.push_back(node_entry[y]);
    }
    if (rotated[ci].size() > 2) {
      CutEntry e;
      e.kind = CutKind::kCycle;
      e.type = NodeType::kCycle;
      e.cycle = ci;
      e.head = rotated[ci][0];
      e.shore = shore;
      e.children = kids;
      cycle_entry[ci] = static_cast<int>(out.entries.size());
      for (int kid : kids) out.entries[kid].parent = cycle_entry[ci];
      out.entries.push_back(std::move(e));
    }
    return shore;
  };
  emit_node = [&](int b) {
    VertexSet shore(n);
    for (int v : pre[b]) shore.insert(v);
    std::vector<int> kids;
    for (int ci : headed[b]) {
      shore |= emit_cycle(ci);
      kids.push_back(rotated[ci].size() > 2 ? cycle_entry[ci] : node_entry[rotated[ci][1]]);
    }
    CutEntry e;
    e.kind = CutKind::kNode;
    e.node = b;
    e.shore = shore;
    e.children = kids;
    if (at[b].size() == 1) {
      if (pre[b].empty()) fail(ErrorCode::kInternal, "external cactus node without a vertex");
      e.type = NodeType::kExternal;
    } else {
      e.type = pre[b].empty() ? NodeType::kType0 : NodeType::kType1;
    }
    if (!pre[b].empty()) e.vertex = pre[b][0];
    node_entry[b] = static_cast<int>(out.entries.size());
    for (int kid : kids) out.entries[kid].parent = node_entry[b];
    out.entries.push_back(std::move(e));
    return shore;
  };
  if (at[out.root_node].size() != 1)
    fail(ErrorCode::kInternal, "root vertex of degree K is not on an external node");
  emit_cycle(at[out.root_node][0]);
  return out;
}

}  // namespace stc

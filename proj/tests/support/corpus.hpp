#pragma once

#include <utility>
#include <vector>

#include "generate.hpp"
#include "graph.hpp"

namespace stc::testing {

// Every labelled connected simple graph on n vertices.
inline std::vector<Graph> all_connected_simple(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  std::vector<Graph> out;
  for (uint64_t mask = 0; mask < (uint64_t{1} << pairs.size()); ++mask) {
    Graph g(n);
    for (size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) g.add_edge(pairs[i].first, pairs[i].second);
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

// Ring of vertex groups, consecutive groups joined by k/2 random edges, then
// random edges inside groups until the connectivity reaches k. Rings of four
// or more groups give non-trivial cactus cycles.
inline Graph ring_multigraph(int n, Weight k, uint64_t seed) {
  Rng rng(seed);
  int groups = rng.range(4, n);
  std::vector<std::vector<int>> part(groups);
  for (int v = 0; v < n; ++v) part[v < groups ? v : rng.range(0, groups - 1)].push_back(v);
  Graph g(n);
  for (int i = 0; i < groups; ++i) {
    const auto& a = part[i];
    const auto& b = part[(i + 1) % groups];
    for (Weight j = 0; j < k / 2; ++j)
      g.add_edge(a[rng.below(a.size())], b[rng.below(b.size())]);
  }
  std::vector<int> big;
  for (int i = 0; i < groups; ++i)
    if (part[i].size() > 1) big.push_back(i);
  while (edge_connectivity(g) < k) {
    if (big.empty()) {
      // Singleton groups only: connectivity is already k/2 * 2 = k.
      break;
    }
    const auto& p = part[big[rng.below(big.size())]];
    int u = p[rng.below(p.size())], v = p[rng.below(p.size())];
    if (u != v) g.add_edge(u, v);
  }
  return g;
}

}  // namespace stc::testing

#include "generate.hpp"

#include "error.hpp"

namespace stc {

uint64_t Rng::below(uint64_t bound) {
  if (bound == 0) fail(ErrorCode::kInvalidArgument, "empty range");
  uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  for (;;) {
    uint64_t x = eng_();
    if (x < limit) return x % bound;
  }
}

Graph generate_k_connected(int n, Weight k, uint64_t seed) {
  if (n < 2 || k < 1) fail(ErrorCode::kInvalidArgument, "need n >= 2 and K >= 1");
  Rng rng(seed);
  Graph g(n);
  // Each edge raises the connectivity by at most one; a complete multigraph
  // with k copies of every pair certainly reaches k, so this bound is loose.
  int64_t cap = static_cast<int64_t>(k) * n * (n - 1) * 4 + 64;
  while (g.edge_count() < cap) {
    int u = rng.range(0, n - 1);
    int v = rng.range(0, n - 2);
    if (v >= u) ++v;
    g.add_edge(u, v);
    if (2 * g.edge_count() >= k * n && edge_connectivity(g) >= k) return g;
  }
  fail(ErrorCode::kPrecondition, "no graph with connectivity " + std::to_string(k) + " after " +
                                     std::to_string(cap) + " edges");
}

}  // namespace stc

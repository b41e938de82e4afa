#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "graph.hpp"

namespace stc {

struct SearchOptions {
  // Cap on branch nodes across the whole call.
  uint64_t max_nodes = 100'000'000;
  int jobs = 1;
};

enum class DecideOutcome { kYes, kNo, kBudgetExceeded };

struct DecideResult {
  DecideOutcome outcome = DecideOutcome::kNo;
  std::optional<SpanningTree> witness;
  uint64_t nodes = 0;
};

struct StcResult {
  Weight value = 0;
  SpanningTree witness;
  uint64_t nodes = 0;
};

// Calls visit on every spanning tree once, by contraction/deletion in edge
// index order; visit returns false to stop early. Returns false when g is
// disconnected (nothing is visited).
bool enumerate_spanning_trees(const Graph& g, const std::function<bool(const SpanningTree&)>& visit);

// Is there a spanning tree of congestion <= k? Branch and bound over edges in
// BFS order, include before exclude; the witness is the first tree found.
DecideResult stc_decide(const Graph& g, Weight k, const SearchOptions& opts = {});

// Throws kBudgetExceeded when the search cap is hit.
StcResult stc_exact(const Graph& g, const SearchOptions& opts = {});

// True iff every spanning tree's s-t path carries an edge of congestion >= w.
bool bottleneck_path_property(const Graph& g, int s, int t, Weight w);

}  // namespace stc

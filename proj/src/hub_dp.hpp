#pragma once

#include <map>
#include <optional>
#include <vector>

#include "cactus.hpp"
#include "graph.hpp"

namespace stc {

using HubSet = std::vector<int>;  // ascending vertex ids

// Candidate sets and spine values of one cycle cut, positions 0..l.
struct SpineTable {
  int l = 0;
  std::vector<std::vector<int>> u_minus, u_plus;
  std::vector<std::map<int, int>> s_minus, s_plus;
  HubSet h0, h_minus, h_plus;
};

struct HubRun {
  RootedCutTree tree;
  std::vector<HubSet> hubs;                       // per entry
  std::vector<std::optional<SpineTable>> spines;  // per cycle entry
};

enum class Verdict { kYes, kPreimageViolation, kNoRoot, kRootNotHub };

const char* verdict_name(Verdict v);

struct Decision {
  Verdict verdict = Verdict::kRootNotHub;
  Weight k = 0;
  std::optional<Cactus> cactus;
  std::optional<HubRun> run;
  bool yes() const { return verdict == Verdict::kYes; }
};

// Safe rooted tree: every edge's side away from root has cut weight k.
bool is_safe_tree(const Graph& g, Weight k, const std::vector<int>& tree_edges, int root);

HubSet hubs_leaf(const Graph& g, const CutEntry& entry);
HubSet hubs_type1(const Graph& g, const CutEntry& entry, const std::vector<const HubSet*>& children);
HubSet hubs_type0(const Graph& g, const CutEntry& entry, const std::vector<const HubSet*>& children);
// children[i] and child_shores[i] describe Z_{i+1}.
HubSet hubs_cycle(const Graph& g, const CutEntry& entry, const std::vector<const HubSet*>& children,
                  const std::vector<const VertexSet*>& child_shores, SpineTable* table = nullptr);

HubRun run_hub_dp(const Graph& g, const RootedCutTree& tree);

// Requires a connected graph with w1 == w2 everywhere; K is its edge connectivity.
Decision decide_stc_equals_k(const Graph& g);

// Edges of a safe tree on shore(entry) + {w} rooted at w; w must be a hub.
std::vector<int> hub_witness(const Graph& g, const HubRun& run, int entry, int w);

// Spanning tree of congestion K after a YES decision.
SpanningTree reconstruct_witness_tree(const Graph& g, const Decision& d);

}  // namespace stc

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace stc {

// All minimum cuts; shores are stored on the side without vertex 0, sorted.
struct MinCutFamily {
  Weight k = 0;
  std::vector<VertexSet> shores;
};

MinCutFamily enumerate_min_cuts(const Graph& g);

// Two shores cross when all four quadrants are nonempty.
bool shores_cross(const VertexSet& a, const VertexSet& b);

// A cycle of length 2 is a trivial cycle (two parallel links).
struct Cactus {
  int node_count = 0;
  std::vector<std::vector<int>> cycles;
  std::vector<int> phi;  // vertex -> node

  std::vector<std::vector<int>> preimages() const;
  std::vector<std::vector<int>> cycles_at() const;  // node -> incident cycle ids
};

Cactus build_cactus(const Graph& g, const MinCutFamily& cuts);

// Pullback of every cactus 2-cut, oriented away from vertex 0, sorted and
// deduplicated. An empty set in the result marks a 2-cut with no preimage.
std::vector<VertexSet> cactus_cut_shores(const Cactus& c, int vertex_count);

bool check_preimage_condition(const Cactus& c);

enum class CutKind { kNode, kCycle };
enum class NodeType { kExternal, kType1, kType0, kCycle };

struct CutEntry {
  CutKind kind = CutKind::kNode;
  NodeType type = NodeType::kExternal;
  int node = -1;    // cactus node for node cuts
  int cycle = -1;   // cycle id for cycle cuts
  int vertex = -1;  // the preimage vertex of a Type-1 node
  int head = -1;    // head node of a cycle cut
  VertexSet shore;
  int parent = -1;
  std::vector<int> children;  // entry ids; for cycle cuts in cycle order
};

// Entries are listed children first; the last entry has shore V - {r}.
struct RootedCutTree {
  Weight k = 0;
  int root_vertex = -1;
  int root_node = -1;
  std::vector<CutEntry> entries;
};

// Empty when no vertex has weighted degree k.
std::optional<RootedCutTree> root_cut_tree(const Graph& g, const Cactus& c, Weight k);

}  // namespace stc

#pragma once

#include <vector>

#include "graph.hpp"

namespace stc {

// Vertex and edge ids of a flower inside some host graph. Index i-1 holds
// c_i, d_i, t_i; c_1 is the center.
struct FlowerEmbedding {
  int l = 0;
  Weight k = 0;
  std::vector<int> core, dummy, terminal;
  std::vector<int> edges;  // 4 per position: c_i c_{i+1}, t_i d_i, t_i d_{i+1}, c_i d_i
};

struct Flower {
  Graph graph;
  FlowerEmbedding roles;
};

FlowerEmbedding add_flower(Graph& host, int l, Weight k, const std::string& prefix = {});
Flower build_flower(int l, Weight k);
// Canonical tree as host edge ids; a spanning tree of the flower alone.
std::vector<int> canonical_flower_edges(const FlowerEmbedding& f);
SpanningTree canonical_flower_tree(const Flower& f);
// e is a tree edge of t outside the flower; true iff every core vertex lies on
// one side of the cut it induces.
bool check_core_integrity(const Graph& g, const FlowerEmbedding& f, const SpanningTree& t, int e);

struct Bottleneck {
  Graph graph;
  int s = 0, t = 0, w = 0;
};

struct BottleneckEmbedding {
  int s = 0, t = 0;
  std::vector<int> vertices, edges;
};

Bottleneck build_bottleneck(int w);
BottleneckEmbedding add_bottleneck(Graph& host, int w, const std::string& prefix = {});
SpanningTree canonical_bottleneck_tree(const Bottleneck& b);

struct WeightGadget {
  Graph graph;
  int s_port = 0, t_port = 1;
  int a = 0, b = 0;
  std::vector<BottleneckEmbedding> copies;
};

WeightGadget build_weight_gadget(int a, int b);
// a copies of B(b-a+1) between existing host vertices s and t.
std::vector<BottleneckEmbedding> add_weight_gadget(Graph& host, int s, int t, int a, int b,
                                                   const std::string& prefix = {});

enum class MultiEdgeMode { kParallel, kPaths };

// Unweighted graph whose first vertex_count() vertices are those of g.
Graph expand_double_weights(const Graph& g, Weight k, MultiEdgeMode mode = MultiEdgeMode::kParallel);

}  // namespace stc

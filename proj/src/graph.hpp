#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vertex_set.hpp"

namespace stc {

using Weight = int64_t;

struct DoubleWeight {
  Weight light = 1;
  Weight heavy = 1;

  bool unweighted() const { return light == 1 && heavy == 1; }
  friend bool operator==(const DoubleWeight&, const DoubleWeight&) = default;
};

struct Edge {
  int u = 0;
  int v = 0;
  DoubleWeight w;

  int other(int x) const { return x == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Undirected multigraph with double weights. Edge ids are list positions.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);

  int add_vertex(std::string label = {});
  int add_edge(int u, int v, DoubleWeight w = {});

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(int e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const int> incident(int v) const { return adj_.at(v); }

  // Rewrites a weight in place; used by constructions that learn K late.
  void set_weight(int e, DoubleWeight w);

  void set_label(int v, std::string label);
  const std::string& label(int v) const { return labels_.at(v); }
  bool has_labels() const;

  bool all_unweighted() const;
  bool canonical_weights() const;  // w1 == w2 on every edge

  // Distinct neighbours, ascending.
  std::vector<int> neighbors(int v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.edges_ == b.edges_ && a.labels_ == b.labels_;
  }

 private:
  void check_vertex(int v) const;

  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::string> labels_;
};

// Spanning tree given by ascending host edge ids.
class SpanningTree {
 public:
  SpanningTree() = default;
  // Throws kNotATree unless the edges form a spanning tree of g.
  SpanningTree(const Graph& g, std::vector<int> edges);

  const std::vector<int>& edges() const { return edges_; }
  bool contains(int e) const;
  friend bool operator==(const SpanningTree&, const SpanningTree&) = default;

 private:
  std::vector<int> edges_;
};

std::vector<int> cut_edges(const Graph& g, const VertexSet& shore);
Weight weighted_cut_size(const Graph& g, const VertexSet& shore);
Weight weighted_degree(const Graph& g, int v);

// Endpoints of the cut edges, V(delta(shore)).
VertexSet cut_boundary(const Graph& g, const VertexSet& shore);

// Components of T - e; first holds edge(e).u.
std::pair<VertexSet, VertexSet> tree_shores(const Graph& g, const SpanningTree& t, int e);
Weight edge_congestion(const Graph& g, const SpanningTree& t, int e);
Weight tree_congestion(const Graph& g, const SpanningTree& t);

// Congestion of every tree edge, indexed like t.edges().
std::vector<Weight> all_edge_congestions(const Graph& g, const SpanningTree& t);

bool is_connected(const Graph& g);
// w1-weighted global minimum cut; 0 when disconnected.
Weight edge_connectivity(const Graph& g);
// Minimum w1-weighted cut separating sources from sinks (both nonempty, disjoint).
Weight min_separating_cut(const Graph& g, const VertexSet& sources, const VertexSet& sinks,
                          Weight stop_above);

// Vertices of g reachable from start using only edges with keep[e] set.
VertexSet reachable(const Graph& g, int start, const std::vector<char>& keep);

Graph permute_vertices(const Graph& g, const std::vector<int>& perm);

}  // namespace stc

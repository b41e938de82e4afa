#include "gadgets.hpp"

#include <map>

#include "error.hpp"

namespace stc {

FlowerEmbedding add_flower(Graph& host, int l, Weight k, const std::string& prefix) {
  if (l < 3) fail(ErrorCode::kInvalidArgument, "flower needs l >= 3");
  if (k < 3) fail(ErrorCode::kInvalidArgument, "flower needs K >= 3");
  FlowerEmbedding f;
  f.l = l;
  f.k = k;
  for (int i = 1; i <= l; ++i) f.core.push_back(host.add_vertex(prefix + "c" + std::to_string(i)));
  for (int i = 1; i <= l; ++i) f.dummy.push_back(host.add_vertex(prefix + "d" + std::to_string(i)));
  for (int i = 1; i <= l; ++i) f.terminal.push_back(host.add_vertex(prefix + "t" + std::to_string(i)));
  for (int i = 0; i < l; ++i) {
    int j = (i + 1) % l;
    f.edges.push_back(host.add_edge(f.core[i], f.core[j]));
    f.edges.push_back(host.add_edge(f.terminal[i], f.dummy[i]));
    f.edges.push_back(host.add_edge(f.terminal[i], f.dummy[j]));
    DoubleWeight spoke = i == 0 ? DoubleWeight{1, 1} : DoubleWeight{1, k - 1};
    f.edges.push_back(host.add_edge(f.core[i], f.dummy[i], spoke));
  }
  return f;
}

Flower build_flower(int l, Weight k) {
  Flower out;
  out.roles = add_flower(out.graph, l, k);
  return out;
}

std::vector<int> canonical_flower_edges(const FlowerEmbedding& f) {
  std::vector<int> out;
  for (int i = 0; i + 1 < f.l; ++i) {
    out.push_back(f.edges[4 * i]);
    out.push_back(f.edges[4 * i + 1]);
    out.push_back(f.edges[4 * i + 2]);
  }
  out.push_back(f.edges[4 * (f.l - 1) + 1]);
  out.push_back(f.edges[3]);
  return out;
}

SpanningTree canonical_flower_tree(const Flower& f) {
  return SpanningTree(f.graph, canonical_flower_edges(f.roles));
}

bool check_core_integrity(const Graph& g, const FlowerEmbedding& f, const SpanningTree& t, int e) {
  if (f.core.empty() || f.edges.size() != 4 * f.core.size())
    fail(ErrorCode::kInvalidArgument, "malformed flower embedding");
  for (int fe : f.edges)
    if (fe == e) fail(ErrorCode::kInvalidArgument, "edge belongs to the flower");
  auto [a, b] = tree_shores(g, t, e);
  bool side = a.contains(f.core[0]);
  for (int c : f.core)
    if (a.contains(c) != side) return false;
  return true;
}

namespace {

// Vertex lines j = 0..w-1 of a slanted brick wall. Line 0 spans x in
// [0, 2w-2], inner lines [j-1, j+2w-2], the top line [w-2, 3w-4]. Brick row
// j joins lines j-1 and j at x = j-1+2k.
struct WallShape {
  int w;
  int lo(int j) const { return j == 0 ? 0 : j - 1; }
  int hi(int j) const { return j == 0 ? 2 * w - 2 : (j == w - 1 ? 3 * w - 4 : j + 2 * w - 2); }
};

}  // namespace

BottleneckEmbedding add_bottleneck(Graph& host, int w, const std::string& prefix) {
  if (w < 3) fail(ErrorCode::kInvalidArgument, "bottleneck needs w >= 3");
  WallShape shape{w};
  BottleneckEmbedding b;
  std::map<std::pair<int, int>, int> id;
  for (int j = 0; j < w; ++j)
    for (int x = shape.lo(j); x <= shape.hi(j); ++x) {
      int v = host.add_vertex(prefix + "b" + std::to_string(j) + "." + std::to_string(x));
      id[{j, x}] = v;
      b.vertices.push_back(v);
    }
  for (int j = 0; j < w; ++j)
    for (int x = shape.lo(j); x < shape.hi(j); ++x) b.edges.push_back(host.add_edge(id[{j, x}], id[{j, x + 1}]));
  for (int j = 1; j < w; ++j)
    for (int k = 0; k < w; ++k) {
      int x = j - 1 + 2 * k;
      b.edges.push_back(host.add_edge(id.at({j - 1, x}), id.at({j, x})));
    }
  b.s = id[{0, 0}];
  b.t = id[{w - 1, 3 * w - 4}];
  return b;
}

Bottleneck build_bottleneck(int w) {
  Bottleneck out;
  BottleneckEmbedding emb = add_bottleneck(out.graph, w);
  out.s = emb.s;
  out.t = emb.t;
  out.w = w;
  return out;
}

SpanningTree canonical_bottleneck_tree(const Bottleneck& b) {
  // Full middle line(s) and every vertical; for even w only one vertical
  // joins the two middle lines. Remaining lines hang as staircases.
  int w = b.w;
  const Graph& g = b.graph;
  WallShape shape{w};
  int mid_lo = w % 2 ? (w - 1) / 2 : w / 2 - 1;
  int mid_hi = w % 2 ? mid_lo : w / 2;
  std::map<std::pair<int, int>, int> id;
  for (int j = 0, v = 0; j < w; ++j)
    for (int x = shape.lo(j); x <= shape.hi(j); ++x) id[{j, x}] = v++;
  // +1: vertical goes up, -1: down, 0: none.
  std::vector<int> dir(g.vertex_count(), 0);
  for (int j = 1; j < w; ++j)
    for (int k = 0; k < w; ++k) {
      dir[id[{j - 1, j - 1 + 2 * k}]] = 1;
      dir[id[{j, j - 1 + 2 * k}]] = -1;
    }
  std::vector<int> edges;
  int e = 0;
  for (int j = 0; j < w; ++j)
    for (int x = shape.lo(j); x < shape.hi(j); ++x, ++e) {
      int a = dir[id[{j, x}]], c = dir[id[{j, x + 1}]];
      bool take;
      if (j >= mid_lo && j <= mid_hi) take = true;
      else if (j > mid_hi) take = (a == -1 && c == 1) || (j == w - 1 && c != -1);
      else take = (a == -1 && c == 1) || (j == 0 && a != 1);
      if (take) edges.push_back(e);
    }
  for (int j = 1; j < w; ++j)
    for (int k = 0; k < w; ++k, ++e) {
      if (w % 2 == 0 && j == w / 2 && k != w / 2 - 1) continue;
      edges.push_back(e);
    }
  return SpanningTree(g, edges);
}

std::vector<BottleneckEmbedding> add_weight_gadget(Graph& host, int s, int t, int a, int b,
                                                   const std::string& prefix) {
  if (a < 1 || b - a < 2)
    fail(ErrorCode::kInvalidArgument, "weight gadget needs a >= 1 and b - a >= 2");
  std::vector<BottleneckEmbedding> copies;
  for (int i = 0; i < a; ++i) {
    BottleneckEmbedding c = add_bottleneck(host, b - a + 1, prefix + "w" + std::to_string(i) + ".");
    host.add_edge(s, c.s);
    host.add_edge(t, c.t);
    copies.push_back(std::move(c));
  }
  return copies;
}

WeightGadget build_weight_gadget(int a, int b) {
  WeightGadget out;
  out.a = a;
  out.b = b;
  out.s_port = out.graph.add_vertex("s*");
  out.t_port = out.graph.add_vertex("t*");
  out.copies = add_weight_gadget(out.graph, out.s_port, out.t_port, a, b);
  return out;
}

Graph expand_double_weights(const Graph& g, Weight k, MultiEdgeMode mode) {
  if (k < 3) fail(ErrorCode::kInvalidArgument, "expansion needs K >= 3");
  std::string problems;
  for (int e = 0; e < g.edge_count(); ++e) {
    DoubleWeight w = g.edge(e).w;
    if (w.light == w.heavy) continue;
    Weight gap = w.heavy - w.light;
    if (gap < 2) problems += " edge " + std::to_string(e) + ": w2-w1 < 2;";
    if (gap > k - 2) problems += " edge " + std::to_string(e) + ": w2-w1 > K-2;";
  }
  if (!problems.empty()) fail(ErrorCode::kPrecondition, "cannot expand:" + problems);
  Graph out(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) out.set_label(v, g.label(v));
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.w.light < ed.w.heavy) {
      add_weight_gadget(out, ed.u, ed.v, static_cast<int>(ed.w.light), static_cast<int>(ed.w.heavy),
                        "e" + std::to_string(e) + ".");
      continue;
    }
    Weight c = ed.w.light;
    if (c == 1) {
      out.add_edge(ed.u, ed.v);
      continue;
    }
    for (Weight i = 0; i < c; ++i) {
      if (mode == MultiEdgeMode::kParallel) {
        out.add_edge(ed.u, ed.v);
      } else {
        int mid = out.add_vertex("e" + std::to_string(e) + ".p" + std::to_string(i));
        out.add_edge(ed.u, mid);
        out.add_edge(mid, ed.v);
      }
    }
  }
  return out;
}

}  // namespace stc

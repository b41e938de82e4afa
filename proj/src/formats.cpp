#include "formats.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

#include "error.hpp"

namespace stc {

namespace {

struct Token {
  std::string_view text;
  int col = 0;  // 1-based
};

struct Line {
  int number = 0;
  std::string_view raw;
  std::vector<Token> tokens;
};

// Splits text into non-blank, non-comment lines of whitespace-separated tokens.
class Reader {
 public:
  explicit Reader(std::string_view text) {
    int number = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
      size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view raw = text.substr(pos, end - pos);
      if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
      ++number;
      Line line{number, raw, {}};
      size_t i = 0;
      while (i < raw.size()) {
        while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
        size_t start = i;
        while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t') ++i;
        if (i > start) line.tokens.push_back({raw.substr(start, i - start), static_cast<int>(start) + 1});
      }
      if (!line.tokens.empty() && line.tokens[0].text[0] != '#') lines_.push_back(line);
      last_ = number;
      if (end == text.size()) break;
      pos = end + 1;
    }
  }

  bool done() const { return next_ >= lines_.size(); }
  const Line& next() { return lines_[next_++]; }
  int last_line() const { return last_; }

 private:
  std::vector<Line> lines_;
  size_t next_ = 0;
  int last_ = 0;
};

[[noreturn]] void parse_error(int line, int col, const std::string& msg) {
  fail(ErrorCode::kParse, "line " + std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
}

[[noreturn]] void parse_error(const Line& l, const Token& t, const std::string& msg) {
  parse_error(l.number, t.col, msg);
}

int64_t number(const Line& l, const Token& t, int64_t lo, int64_t hi, const char* what) {
  int64_t v = 0;
  auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec != std::errc() || p != t.text.data() + t.text.size())
    parse_error(l, t, std::string("expected ") + what + ", got '" + std::string(t.text) + "'");
  if (v < lo || v > hi)
    parse_error(l, t, std::string(what) + " " + std::to_string(v) + " out of range " + std::to_string(lo) + ".." +
                          std::to_string(hi));
  return v;
}

void expect_count(const Line& l, size_t lo, size_t hi, const char* what) {
  if (l.tokens.size() < lo || l.tokens.size() > hi) {
    int col = l.tokens.size() > hi ? l.tokens[hi].col : static_cast<int>(l.raw.size()) + 1;
    parse_error(l.number, col, std::string("malformed ") + what);
  }
}

// Reads the header line "<keyword> <count>"; a second header anywhere is an error.
int64_t header(Reader& r, std::string_view keyword, int64_t lo, int64_t hi) {
  if (r.done()) parse_error(r.last_line() + 1, 1, "missing '" + std::string(keyword) + "' header");
  const Line& l = r.next();
  if (l.tokens[0].text != keyword)
    parse_error(l, l.tokens[0], "expected '" + std::string(keyword) + "' header, got '" +
                                    std::string(l.tokens[0].text) + "'");
  expect_count(l, 2, 2, "header");
  return number(l, l.tokens[1], lo, hi, "count");
}

void reject_header(const Line& l, std::string_view keyword) {
  if (l.tokens[0].text == keyword) parse_error(l, l.tokens[0], "duplicate header");
}

// Text after the token at index i, trimmed.
std::string rest_of_line(const Line& l, size_t i) {
  std::string_view s = l.raw.substr(l.tokens[i].col - 1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return std::string(s);
}

constexpr int64_t kMaxId = std::numeric_limits<int>::max();
constexpr int64_t kMaxWeight = int64_t{1} << 40;

ClauseType clause_type(const Line& l, const Token& t) {
  if (t.text == "3p") return ClauseType::k3P;
  if (t.text == "2p") return ClauseType::k2P;
  if (t.text == "2n") return ClauseType::k2N;
  parse_error(l, t, "unknown clause type '" + std::string(t.text) + "'");
}

Clause clause_from(const Line& l, size_t first, int n) {
  Clause c;
  c.type = clause_type(l, l.tokens[first]);
  size_t want = c.type == ClauseType::k3P ? 3 : 2;
  expect_count(l, first + 1 + want, first + 1 + want, "clause");
  for (size_t i = 0; i < want; ++i)
    c.vars.push_back(static_cast<int>(number(l, l.tokens[first + 1 + i], 1, n, "variable")) - 1);
  return c;
}

std::string clause_line(const Clause& c) { return describe_clause(c); }

}  // namespace

Graph parse_graph(std::string_view text) {
  Reader r(text);
  if (r.done()) parse_error(r.last_line() + 1, 1, "missing 'stcgraph' header");
  const Line& h = r.next();
  if (h.tokens[0].text != "stcgraph")
    parse_error(h, h.tokens[0], "expected 'stcgraph' header, got '" + std::string(h.tokens[0].text) + "'");
  expect_count(h, 3, 3, "header");
  int n = static_cast<int>(number(h, h.tokens[1], 0, kMaxId, "vertex count"));
  int64_t m = number(h, h.tokens[2], 0, kMaxId, "edge count");
  Graph g(n);
  int64_t edges = 0;
  std::vector<char> labelled(n);
  while (!r.done()) {
    const Line& l = r.next();
    reject_header(l, "stcgraph");
    if (l.tokens[0].text == "label") {
      if (l.tokens.size() < 3) parse_error(l.number, static_cast<int>(l.raw.size()) + 1, "malformed label line");
      int v = static_cast<int>(number(l, l.tokens[1], 0, n - 1, "vertex id"));
      if (labelled[v]) parse_error(l, l.tokens[1], "vertex " + std::to_string(v) + " labelled twice");
      labelled[v] = 1;
      g.set_label(v, rest_of_line(l, 2));
      continue;
    }
    expect_count(l, 3, 4, "edge line");
    if (edges == m) parse_error(l, l.tokens[0], "more than " + std::to_string(m) + " edges");
    int u = static_cast<int>(number(l, l.tokens[0], 0, n - 1, "vertex id"));
    int v = static_cast<int>(number(l, l.tokens[1], 0, n - 1, "vertex id"));
    if (u == v) parse_error(l, l.tokens[1], "self-loop at vertex " + std::to_string(u));
    Weight w1 = number(l, l.tokens[2], 1, kMaxWeight, "weight");
    Weight w2 = l.tokens.size() == 4 ? number(l, l.tokens[3], 1, kMaxWeight, "weight") : w1;
    if (w2 < w1)
      parse_error(l, l.tokens[3], "heavy weight " + std::to_string(w2) + " below light weight " + std::to_string(w1));
    g.add_edge(u, v, {w1, w2});
    ++edges;
  }
  if (edges != m)
    parse_error(r.last_line() + 1, 1, "expected " + std::to_string(m) + " edges, found " + std::to_string(edges));
  return g;
}

std::string serialize_graph(const Graph& g, bool with_labels) {
  std::ostringstream out;
  out << "stcgraph " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (const Edge& e : g.edges()) {
    out << e.u << " " << e.v << " " << e.w.light;
    if (e.w.heavy != e.w.light) out << " " << e.w.heavy;
    out << "\n";
  }
  if (with_labels)
    for (int v = 0; v < g.vertex_count(); ++v)
      if (!g.label(v).empty()) out << "label " << v << " " << g.label(v) << "\n";
  return out.str();
}

std::vector<int> parse_tree_edges(std::string_view text) {
  Reader r(text);
  int n = static_cast<int>(header(r, "stctree", 1, kMaxId));
  std::vector<int> edges;
  while (!r.done()) {
    const Line& l = r.next();
    reject_header(l, "stctree");
    expect_count(l, 1, 1, "tree line");
    if (static_cast<int>(edges.size()) == n - 1) parse_error(l, l.tokens[0], "more than n-1 edges");
    edges.push_back(static_cast<int>(number(l, l.tokens[0], 0, kMaxId, "edge index")));
  }
  if (static_cast<int>(edges.size()) != n - 1)
    parse_error(r.last_line() + 1, 1, "expected " + std::to_string(n - 1) + " edges, found " +
                                          std::to_string(edges.size()));
  return edges;
}

SpanningTree parse_tree(std::string_view text, const Graph& g) {
  Reader probe(text);
  int n = static_cast<int>(header(probe, "stctree", 1, kMaxId));
  if (n != g.vertex_count())
    fail(ErrorCode::kNotATree, "tree is for " + std::to_string(n) + " vertices, graph has " +
                                   std::to_string(g.vertex_count()));
  auto edges = parse_tree_edges(text);
  for (int e : edges)
    if (e >= g.edge_count())
      fail(ErrorCode::kNotATree, "edge index " + std::to_string(e) + " out of range (graph has " +
                                     std::to_string(g.edge_count()) + " edges)");
  return SpanningTree(g, std::move(edges));
}

std::string serialize_tree(const Graph& g, const SpanningTree& t) {
  std::string out = "stctree " + std::to_string(g.vertex_count()) + "\n";
  for (int e : t.edges()) out += std::to_string(e) + "\n";
  return out;
}

SatInstance parse_sat(std::string_view text) {
  Reader r(text);
  SatInstance inst;
  inst.n = static_cast<int>(header(r, "m2p1n", 1, kMaxId));
  while (!r.done()) {
    const Line& l = r.next();
    reject_header(l, "m2p1n");
    inst.clauses.push_back(clause_from(l, 0, inst.n));
  }
  require_valid(inst);
  return inst;
}

std::string serialize_sat(const SatInstance& inst) {
  std::string out = "m2p1n " + std::to_string(inst.n) + "\n";
  for (const Clause& c : inst.clauses) out += clause_line(c) + "\n";
  return out;
}

Assignment parse_assignment(std::string_view text) {
  Reader r(text);
  int n = static_cast<int>(header(r, "assignment", 1, kMaxId));
  Assignment a(n, 2);
  while (!r.done()) {
    const Line& l = r.next();
    reject_header(l, "assignment");
    expect_count(l, 2, 2, "assignment line");
    int x = static_cast<int>(number(l, l.tokens[0], 1, n, "variable")) - 1;
    if (a[x] != 2) parse_error(l, l.tokens[0], "variable " + std::to_string(x + 1) + " assigned twice");
    a[x] = static_cast<char>(number(l, l.tokens[1], 0, 1, "value"));
  }
  for (int x = 0; x < n; ++x)
    if (a[x] == 2) parse_error(r.last_line() + 1, 1, "variable " + std::to_string(x + 1) + " has no value");
  return a;
}

std::string serialize_assignment(const Assignment& a) {
  std::string out = "assignment " + std::to_string(a.size()) + "\n";
  for (size_t x = 0; x < a.size(); ++x) out += std::to_string(x + 1) + " " + (a[x] ? "1" : "0") + "\n";
  return out;
}

std::string serialize_labels(const ReductionArtifact& art) {
  std::ostringstream out;
  out << "stclabels " << art.graph.vertex_count() << "\n";
  out << "reduction " << reduction_kind_name(art.kind) << "\n";
  out << "k " << art.k << "\n";
  out << "sat " << art.sat.n << "\n";
  for (const Clause& c : art.sat.clauses) out << "clause " << clause_line(c) << "\n";
  for (int v = 0; v < art.graph.vertex_count(); ++v) out << "vertex " << v << " role " << art.graph.label(v) << "\n";
  return out.str();
}

ReductionArtifact parse_labels(std::string_view text, const Graph& g) {
  Reader r(text);
  int vertices = static_cast<int>(header(r, "stclabels", 0, kMaxId));
  std::optional<ReductionKind> kind;
  std::optional<Weight> k;
  std::optional<SatInstance> sat;
  std::vector<std::string> roles(vertices);
  std::vector<char> seen(vertices);
  while (!r.done()) {
    const Line& l = r.next();
    reject_header(l, "stclabels");
    std::string_view key = l.tokens[0].text;
    auto once = [&](bool present) {
      if (present) parse_error(l, l.tokens[0], "duplicate '" + std::string(key) + "' line");
    };
    if (key == "reduction") {
      once(kind.has_value());
      expect_count(l, 2, 2, "reduction line");
      if (l.tokens[1].text == "degree3") kind = ReductionKind::kDegree3;
      else if (l.tokens[1].text == "degree4") kind = ReductionKind::kDegree4;
      else parse_error(l, l.tokens[1], "unknown reduction '" + std::string(l.tokens[1].text) + "'");
    } else if (key == "k") {
      once(k.has_value());
      expect_count(l, 2, 2, "k line");
      k = number(l, l.tokens[1], 1, kMaxWeight, "K");
    } else if (key == "sat") {
      once(sat.has_value());
      expect_count(l, 2, 2, "sat line");
      sat = SatInstance{};
      sat->n = static_cast<int>(number(l, l.tokens[1], 1, kMaxId, "variable count"));
    } else if (key == "clause") {
      if (!sat) parse_error(l, l.tokens[0], "clause before 'sat' line");
      if (l.tokens.size() < 2) parse_error(l.number, static_cast<int>(l.raw.size()) + 1, "malformed clause");
      sat->clauses.push_back(clause_from(l, 1, sat->n));
    } else if (key == "vertex") {
      if (l.tokens.size() < 4 || l.tokens[2].text != "role")
        parse_error(l.number, l.tokens.size() > 2 ? l.tokens[2].col : static_cast<int>(l.raw.size()) + 1,
                    "expected 'vertex <id> role <text>'");
      int v = static_cast<int>(number(l, l.tokens[1], 0, vertices - 1, "vertex id"));
      if (seen[v]) parse_error(l, l.tokens[1], "vertex " + std::to_string(v) + " listed twice");
      seen[v] = 1;
      roles[v] = rest_of_line(l, 3);
    } else {
      parse_error(l, l.tokens[0], "unknown line '" + std::string(key) + "'");
    }
  }
  int end = r.last_line() + 1;
  if (!kind) parse_error(end, 1, "missing 'reduction' line");
  if (!k) parse_error(end, 1, "missing 'k' line");
  if (!sat) parse_error(end, 1, "missing 'sat' line");
  for (int v = 0; v < vertices; ++v)
    if (!seen[v]) parse_error(end, 1, "vertex " + std::to_string(v) + " has no role");

  ReductionArtifact art = reduce(*kind, *sat);
  if (art.k != *k)
    fail(ErrorCode::kPrecondition, "sidecar K = " + std::to_string(*k) + " but the formula gives " + std::to_string(art.k));
  if (art.graph.vertex_count() != vertices)
    fail(ErrorCode::kPrecondition, "sidecar lists " + std::to_string(vertices) + " vertices, reduction has " +
                                       std::to_string(art.graph.vertex_count()));
  for (int v = 0; v < vertices; ++v)
    if (art.graph.label(v) != roles[v])
      fail(ErrorCode::kPrecondition, "vertex " + std::to_string(v) + " role '" + roles[v] + "' does not match '" +
                                         art.graph.label(v) + "'");
  if (g.vertex_count() != vertices || g.edges() != art.graph.edges())
    fail(ErrorCode::kPrecondition, "graph does not match the reduction described by the sidecar");
  return art;
}

std::string describe_cactus(const Cactus& c, Weight k) {
  std::ostringstream out;
  out << "cactus nodes " << c.node_count << " cycles " << c.cycles.size() << " k " << k << "\n";
  auto pre = c.preimages();
  for (int i = 0; i < c.node_count; ++i) {
    out << "node " << i;
    for (int v : pre[i]) out << " " << v;
    out << "\n";
  }
  for (size_t i = 0; i < c.cycles.size(); ++i) {
    out << "cycle " << i;
    for (int x : c.cycles[i]) out << " " << x;
    out << "\n";
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kInvalidArgument, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::kInvalidArgument, "cannot write " + path);
  out << text;
  if (!out) fail(ErrorCode::kInvalidArgument, "write failed for " + path);
}

}  // namespace stc

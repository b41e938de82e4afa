#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cactus.hpp"
#include "graph.hpp"
#include "reduction.hpp"
#include "sat.hpp"

namespace stc {

// All parsers are strict and report "line L:C: ..." with kParse.
// Blank lines and lines starting with '#' are ignored everywhere.

// stcgraph <n> <m>, then m lines "u v w1 [w2]" and optional "label <id> <text>".
Graph parse_graph(std::string_view text);
// w2 is written only when it differs from w1; labels follow the edges.
std::string serialize_graph(const Graph& g, bool with_labels = true);

// stctree <n>, then n-1 edge indices, one per line.
std::vector<int> parse_tree_edges(std::string_view text);
SpanningTree parse_tree(std::string_view text, const Graph& g);
std::string serialize_tree(const Graph& g, const SpanningTree& t);

// m2p1n <n>, then "3p a b c" / "2p a b" / "2n a b" with 1-based ids.
// Structural violations raise kPrecondition after a clean parse.
SatInstance parse_sat(std::string_view text);
std::string serialize_sat(const SatInstance& inst);

// assignment <n>, then "<i> <0|1>" once for every 1-based variable.
Assignment parse_assignment(std::string_view text);
std::string serialize_assignment(const Assignment& a);

// Sidecar for reduction graphs:
//   stclabels <vertex count>
//   reduction degree3|degree4
//   k <K>
//   sat <n>
//   clause <3p|2p|2n> <ids...>
//   vertex <id> role <text>
std::string serialize_labels(const ReductionArtifact& art);
// Rebuilds the artifact from the embedded formula and checks it against the
// sidecar and against g (kParse / kPrecondition on mismatch).
ReductionArtifact parse_labels(std::string_view text, const Graph& g);

// cactus nodes <N> cycles <C> k <K>
// node <id> <vertices...>
// cycle <id> <nodes in cycle order...>
std::string describe_cactus(const Cactus& c, Weight k);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace stc

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gadgets.hpp"
#include "graph.hpp"
#include "sat.hpp"

namespace stc {

enum class ReductionKind { kDegree3, kDegree4 };

const char* reduction_kind_name(ReductionKind k);  // "degree3", "degree4"

enum class EdgeRole {
  kInternal,  // inside a flower or variable 4-cycle
  kRootVariable,
  kRootClause,
  kClauseVariable,
  kRootCycle,     // degree 4: r1-r2 triangle sides and the weight-2 links
  kRootTerminal,  // degree 4: t-r1, t-r2
};

struct VariableRoles {
  // degree 3 gadget: 4-cycle v2n - v2p - vr - v3p - v2n
  int v2n = -1, v2p = -1, vr = -1, v3p = -1;
  // degree 4: the variable vertex and its root triangle
  int vertex = -1, r1 = -1, r2 = -1, t = -1;
  std::vector<int> gadget_edges;
  int root_edge = -1;
  int root_terminal = -1;  // degree 3: terminal of the root flower
};

struct ClauseRoles {
  int center = -1;
  std::optional<FlowerEmbedding> flower;  // degree 3, 2N clauses
  std::vector<int> var_edges;             // parallel to Clause::vars
  std::vector<int> root_edges;            // none for 3P
  std::vector<int> root_terminals;        // degree 3: root flower terminals
  int r1 = -1, r2 = -1, t = -1;           // degree 4, non-3P clauses
};

struct ReductionArtifact {
  ReductionKind kind = ReductionKind::kDegree3;
  SatInstance sat;
  Graph graph;  // vertex labels carry the role strings
  Weight k = 0;
  std::optional<FlowerEmbedding> root;  // degree 3
  std::vector<int> root_cycle;          // degree 4, in cycle order
  std::vector<VariableRoles> variables;
  std::vector<ClauseRoles> clauses;
  std::vector<EdgeRole> edge_roles;

  bool external(int e) const;
};

ReductionArtifact reduce_degree3(const SatInstance& inst);
// Same construction with a caller-chosen K (K >= 6); the shape does not depend on K.
ReductionArtifact reduce_degree3_with_k(const SatInstance& inst, Weight k);
ReductionArtifact reduce_degree4(const SatInstance& inst);
ReductionArtifact reduce(ReductionKind kind, const SatInstance& inst);

// Throws kRefused naming the first unsatisfied clause.
SpanningTree assignment_to_tree(const ReductionArtifact& art, const Assignment& a);
// Throws kRefused when the tree congestion exceeds K.
Assignment tree_to_assignment(const ReductionArtifact& art, const SpanningTree& t);

// Degree 3: is there a tree path from the clause center that enters the
// variable gadget through the clause-variable edge and leaves it by another
// external edge. Degree 4: is the clause-variable edge in the tree.
bool traverses(const ReductionArtifact& art, const SpanningTree& t, int clause, int var);

struct AuditCheck {
  std::string name;
  bool passed = false;
  std::string detail;  // first counterexample when failed
};

struct AuditReport {
  bool skipped = false;
  std::string reason;
  std::vector<AuditCheck> checks;
  bool all_pass() const;
};

AuditReport audit_structural_lemmas(const ReductionArtifact& art, const SpanningTree& t);

}  // namespace stc

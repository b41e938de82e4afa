#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace stc {

// 3P: three positive literals, 2P: two positive, 2N: two negative.
enum class ClauseType { k3P, k2P, k2N };

const char* clause_type_name(ClauseType t);  // "3p", "2p", "2n"

struct Clause {
  ClauseType type = ClauseType::k3P;
  std::vector<int> vars;  // 0-based
  bool positive() const { return type != ClauseType::k2N; }
  friend bool operator==(const Clause&, const Clause&) = default;
};

struct SatInstance {
  int n = 0;
  std::vector<Clause> clauses;

  int m() const { return static_cast<int>(clauses.size()); }
  int count(ClauseType t) const;
  // Index of the clause of type t holding x, or -1.
  int clause_of(int x, ClauseType t) const;
  friend bool operator==(const SatInstance&, const SatInstance&) = default;
};

// Human-readable clause as in the file format, 1-based: "2n 1 5".
std::string describe_clause(const Clause& c);

struct SatViolation {
  std::string kind;  // clause arity, variable range, duplicate variable, type multiplicity, shared pair
  std::string message;
};

std::vector<SatViolation> validate_sat(const SatInstance& inst);
// Throws kPrecondition listing every violation.
void require_valid(const SatInstance& inst);

using Assignment = std::vector<char>;  // per variable, 1 = true

// First clause the assignment fails, or nullopt.
std::optional<int> unsatisfied_clause(const SatInstance& inst, const Assignment& a);
// All satisfying assignments in lexicographic order of the bit vector
// (variable 0 most significant). n <= 24.
std::vector<Assignment> satisfying_assignments(const SatInstance& inst);

// Random valid instance on n variables (n a positive multiple of 6).
SatInstance random_sat(int n, uint64_t seed);

}  // namespace stc

#include "sat.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <utility>

#include "error.hpp"
#include "generate.hpp"

namespace stc {

const char* clause_type_name(ClauseType t) {
  switch (t) {
    case ClauseType::k3P: return "3p";
    case ClauseType::k2P: return "2p";
    case ClauseType::k2N: return "2n";
  }
  return "?";
}

int SatInstance::count(ClauseType t) const {
  return static_cast<int>(std::count_if(clauses.begin(), clauses.end(),
                                        [t](const Clause& c) { return c.type == t; }));
}

int SatInstance::clause_of(int x, ClauseType t) const {
  for (int i = 0; i < m(); ++i)
    if (clauses[i].type == t && std::find(clauses[i].vars.begin(), clauses[i].vars.end(), x) != clauses[i].vars.end())
      return i;
  return -1;
}

std::string describe_clause(const Clause& c) {
  std::string s = clause_type_name(c.type);
  for (int x : c.vars) s += " " + std::to_string(x + 1);
  return s;
}

std::vector<SatViolation> validate_sat(const SatInstance& inst) {
  std::vector<SatViolation> out;
  auto add = [&](const char* kind, std::string msg) { out.push_back({kind, std::move(msg)}); };
  if (inst.n < 1) add("variable range", "instance has no variables");
  // per variable, per type: clause indices holding it
  std::vector<std::array<std::vector<int>, 3>> seen(std::max(inst.n, 0));
  for (int i = 0; i < inst.m(); ++i) {
    const Clause& c = inst.clauses[i];
    std::string where = "clause " + std::to_string(i + 1) + " (" + describe_clause(c) + ")";
    size_t want = c.type == ClauseType::k3P ? 3 : 2;
    if (c.vars.size() != want)
      add("clause arity", where + " has " + std::to_string(c.vars.size()) + " literals, expected " +
                              std::to_string(want));
    std::vector<int> sorted = c.vars;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      add("duplicate variable", where + " repeats a variable");
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int x : sorted) {
      if (x < 0 || x >= inst.n) {
        add("variable range", where + " uses variable " + std::to_string(x + 1) + " outside 1.." +
                                  std::to_string(inst.n));
        continue;
      }
      seen[x][static_cast<int>(c.type)].push_back(i);
    }
  }
  for (int x = 0; x < inst.n; ++x)
    for (int t = 0; t < 3; ++t) {
      size_t k = seen[x][t].size();
      if (k != 1)
        add("type multiplicity", "variable " + std::to_string(x + 1) + " appears in " + std::to_string(k) + " " +
                                     clause_type_name(static_cast<ClauseType>(t)) +
                                     " clauses, expected exactly 1");
    }
  std::map<std::pair<int, int>, int> pairs;
  for (int i = 0; i < inst.m(); ++i) {
    std::vector<int> v = inst.clauses[i].vars;
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    for (size_t a = 0; a < v.size(); ++a)
      for (size_t b = a + 1; b < v.size(); ++b) {
        auto [it, fresh] = pairs.emplace(std::pair{v[a], v[b]}, i);
        if (!fresh)
          add("shared pair", "clauses " + std::to_string(it->second + 1) + " and " + std::to_string(i + 1) +
                                 " share variables " + std::to_string(v[a] + 1) + " and " +
                                 std::to_string(v[b] + 1));
      }
  }
  return out;
}

void require_valid(const SatInstance& inst) {
  auto v = validate_sat(inst);
  if (v.empty()) return;
  std::string msg = "invalid instance:";
  for (const auto& x : v) msg += "\n  " + x.kind + ": " + x.message;
  fail(ErrorCode::kPrecondition, msg);
}

std::optional<int> unsatisfied_clause(const SatInstance& inst, const Assignment& a) {
  if (static_cast<int>(a.size()) != inst.n)
    fail(ErrorCode::kInvalidArgument, "assignment has " + std::to_string(a.size()) + " values for " +
                                          std::to_string(inst.n) + " variables");
  for (int i = 0; i < inst.m(); ++i) {
    const Clause& c = inst.clauses[i];
    bool want = c.positive();
    bool ok = std::any_of(c.vars.begin(), c.vars.end(), [&](int x) { return (a.at(x) != 0) == want; });
    if (!ok) return i;
  }
  return std::nullopt;
}

std::vector<Assignment> satisfying_assignments(const SatInstance& inst) {
  if (inst.n > 24) fail(ErrorCode::kInvalidArgument, "exhaustive scan limited to 24 variables");
  std::vector<Assignment> out;
  Assignment a(inst.n);
  for (uint64_t mask = 0; mask < (uint64_t{1} << inst.n); ++mask) {
    for (int x = 0; x < inst.n; ++x) a[x] = (mask >> (inst.n - 1 - x)) & 1;
    if (!unsatisfied_clause(inst, a)) out.push_back(a);
  }
  return out;
}

SatInstance random_sat(int n, uint64_t seed) {
  if (n < 6 || n % 6 != 0) fail(ErrorCode::kInvalidArgument, "n must be a positive multiple of 6");
  Rng rng(seed);
  auto shuffled = [&] {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(p[i], p[rng.below(i + 1)]);
    return p;
  };
  for (int attempt = 0; attempt < 100000; ++attempt) {
    SatInstance inst;
    inst.n = n;
    auto group = [&](ClauseType t, int size) {
      auto p = shuffled();
      for (int i = 0; i < n; i += size) {
        Clause c{t, std::vector<int>(p.begin() + i, p.begin() + i + size)};
        std::sort(c.vars.begin(), c.vars.end());
        inst.clauses.push_back(std::move(c));
      }
    };
    group(ClauseType::k3P, 3);
    group(ClauseType::k2P, 2);
    group(ClauseType::k2N, 2);
    if (validate_sat(inst).empty()) return inst;
  }
  fail(ErrorCode::kInternal, "no valid instance found");
}

}  // namespace stc

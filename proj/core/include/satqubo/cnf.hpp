#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace satqubo {

// One bit per variable, index v-1 holds variable v; 1 = TRUE, 0 = FALSE.
using Assignment = std::vector<std::uint8_t>;

struct Literal {
  int variable = 1;  // 1-based index
  bool negated = false;

  auto operator<=>(const Literal&) const = default;
};

// Exactly three literals over pairwise distinct variables.
struct Clause {
  std::array<Literal, 3> literals;

  auto operator<=>(const Clause&) const = default;
};

struct CnfFormula {
  int num_variables = 0;
  std::vector<Clause> clauses;  // order is significant and preserved

  int num_clauses() const { return static_cast<int>(clauses.size()); }
  auto operator<=>(const CnfFormula&) const = default;
};

struct EvalResult {
  bool satisfied = false;
  int num_satisfied_clauses = 0;
};

// Largest n the exhaustive solver (and therefore require_satisfiable
// generation) accepts.
inline constexpr int kExactSolverMaxVariables = 30;

// Draws m clauses, each over 3 distinct variables chosen uniformly from
// 1..n, each chosen variable negated with probability 1/2. When
// require_satisfiable is set, whole instances are regenerated from fresh
// derived seeds until the exact solver confirms satisfiability. Deterministic
// in (n, m, seed).
CnfFormula generate_instance(int num_variables, int num_clauses,
                             std::uint64_t seed, bool require_satisfiable);

// Counts satisfied clauses; satisfied iff all m are.
EvalResult evaluate(const CnfFormula& formula, const Assignment& assignment);

// Exhaustive search with early clause pruning. Returns a satisfying witness,
// or nullopt when the formula is unsatisfiable. Ground truth only; n is
// capped at kExactSolverMaxVariables.
std::optional<Assignment> solve_exact(const CnfFormula& formula);

// Stable reorder putting positive literals before negated ones.
Clause sort_clause(const Clause& clause);

// DIMACS CNF. Comment lines starting with 'c' are ignored; every clause must
// contain exactly 3 literals over distinct variables.
CnfFormula parse_dimacs(const std::string& text);
std::string write_dimacs(const CnfFormula& formula);

CnfFormula read_dimacs_file(const std::string& path);
void write_dimacs_file(const CnfFormula& formula, const std::string& path);

}  // namespace satqubo

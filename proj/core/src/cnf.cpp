#include "satqubo/cnf.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "satqubo/errors.hpp"
#include "satqubo/rng.hpp"

namespace satqubo {

namespace {

// Upper bound on regeneration attempts for require_satisfiable, so absurd
// (n, m) combinations fail loudly instead of spinning forever.
constexpr std::uint64_t kMaxRegenerationAttempts = 100000;

void check_well_formed(const CnfFormula& f) {
  if (f.num_variables < 1) throw ParseError("formula has no variables");
  if (f.clauses.empty()) throw ParseError("formula has no clauses");
  for (const Clause& c : f.clauses) {
    for (const Literal& lit : c.literals) {
      if (lit.variable < 1 || lit.variable > f.num_variables) {
        throw ParseError("literal variable out of range");
      }
    }
    if (c.literals[0].variable == c.literals[1].variable ||
        c.literals[0].variable == c.literals[2].variable ||
        c.literals[1].variable == c.literals[2].variable) {
      throw UnsupportedError("clause with repeated variable");
    }
  }
}

CnfFormula draw_instance(int n, int m, Rng& rng) {
  CnfFormula f;
  f.num_variables = n;
  f.clauses.reserve(static_cast<std::size_t>(m));
  for (int c = 0; c < m; ++c) {
    int v[3];
    v[0] = 1 + static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(n)));
    do {
      v[1] = 1 + static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(n)));
    } while (v[1] == v[0]);
    do {
      v[2] = 1 + static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(n)));
    } while (v[2] == v[0] || v[2] == v[1]);
    Clause clause;
    for (int k = 0; k < 3; ++k) {
      clause.literals[k] = Literal{v[k], rng.coin()};
    }
    f.clauses.push_back(clause);
  }
  return f;
}

bool literal_true(const Literal& lit, const Assignment& a) {
  const bool value = a[static_cast<std::size_t>(lit.variable - 1)] != 0;
  return lit.negated ? !value : value;
}

}  // namespace

CnfFormula generate_instance(int num_variables, int num_clauses,
                             std::uint64_t seed, bool require_satisfiable) {
  if (num_variables < 3) {
    throw InvalidParameterError("need at least 3 variables per clause");
  }
  if (num_clauses < 1) {
    throw InvalidParameterError("need at least one clause");
  }
  if (require_satisfiable && num_variables > kExactSolverMaxVariables) {
    throw UnsupportedError(
        "satisfiability filtering requires n <= " +
        std::to_string(kExactSolverMaxVariables));
  }
  for (std::uint64_t attempt = 0; attempt < kMaxRegenerationAttempts;
       ++attempt) {
    Rng rng(derive_seed(seed, attempt));
    CnfFormula f = draw_instance(num_variables, num_clauses, rng);
    if (!require_satisfiable || solve_exact(f).has_value()) return f;
  }
  throw Error("no satisfiable instance found after " +
              std::to_string(kMaxRegenerationAttempts) + " attempts");
}

EvalResult evaluate(const CnfFormula& formula, const Assignment& assignment) {
  if (assignment.size() != static_cast<std::size_t>(formula.num_variables)) {
    throw InvalidParameterError("assignment length does not match n");
  }
  EvalResult r;
  for (const Clause& c : formula.clauses) {
    if (literal_true(c.literals[0], assignment) ||
        literal_true(c.literals[1], assignment) ||
        literal_true(c.literals[2], assignment)) {
      ++r.num_satisfied_clauses;
    }
  }
  r.satisfied = r.num_satisfied_clauses == formula.num_clauses();
  return r;
}

std::optional<Assignment> solve_exact(const CnfFormula& formula) {
  const int n = formula.num_variables;
  if (n > kExactSolverMaxVariables) {
    throw UnsupportedError("exact solver capped at n <= " +
                           std::to_string(kExactSolverMaxVariables));
  }
  const int m = formula.num_clauses();

  // Occurrence lists: for each variable, which clauses mention it and how.
  struct Occurrence {
    int clause;
    bool negated;
  };
  std::vector<std::vector<Occurrence>> occurrences(
      static_cast<std::size_t>(n) + 1);
  for (int ci = 0; ci < m; ++ci) {
    for (const Literal& lit : formula.clauses[static_cast<std::size_t>(ci)].literals) {
      occurrences[static_cast<std::size_t>(lit.variable)].push_back(
          Occurrence{ci, lit.negated});
    }
  }

  std::vector<int> num_true(static_cast<std::size_t>(m), 0);
  std::vector<int> num_false(static_cast<std::size_t>(m), 0);
  Assignment assignment(static_cast<std::size_t>(n), 0);
  int satisfied_clauses = 0;

  // Applies variable = value; returns false if some clause became falsified.
  auto apply = [&](int variable, bool value) {
    bool ok = true;
    for (const Occurrence& occ : occurrences[static_cast<std::size_t>(variable)]) {
      const bool lit_true = occ.negated ? !value : value;
      if (lit_true) {
        if (num_true[static_cast<std::size_t>(occ.clause)]++ == 0) ++satisfied_clauses;
      } else if (++num_false[static_cast<std::size_t>(occ.clause)] == 3) {
        ok = false;
      }
    }
    return ok;
  };
  auto undo = [&](int variable, bool value) {
    for (const Occurrence& occ : occurrences[static_cast<std::size_t>(variable)]) {
      const bool lit_true = occ.negated ? !value : value;
      if (lit_true) {
        if (--num_true[static_cast<std::size_t>(occ.clause)] == 0) --satisfied_clauses;
      } else {
        --num_false[static_cast<std::size_t>(occ.clause)];
      }
    }
  };

  auto search = [&](auto&& self, int variable) -> bool {
    if (satisfied_clauses == m) return true;  // remaining variables stay 0
    if (variable > n) return false;
    for (const bool value : {true, false}) {
      assignment[static_cast<std::size_t>(variable - 1)] = value ? 1 : 0;
      if (apply(variable, value) && self(self, variable + 1)) return true;
      undo(variable, value);
      assignment[static_cast<std::size_t>(variable - 1)] = 0;
    }
    return false;
  };

  if (search(search, 1)) return assignment;
  return std::nullopt;
}

Clause sort_clause(const Clause& clause) {
  Clause sorted = clause;
  std::stable_partition(sorted.literals.begin(), sorted.literals.end(),
                        [](const Literal& lit) { return !lit.negated; });
  return sorted;
}

CnfFormula parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  bool have_header = false;
  int n = 0, m = 0;
  std::vector<int> pending;
  CnfFormula f;

  auto flush_clause = [&](int zero_terminated_end) {
    (void)zero_terminated_end;
    if (pending.size() != 3) {
      throw UnsupportedError("clause must contain exactly 3 literals");
    }
    Clause c;
    for (int k = 0; k < 3; ++k) {
      const int lit = pending[static_cast<std::size_t>(k)];
      c.literals[static_cast<std::size_t>(k)] =
          Literal{std::abs(lit), lit < 0};
    }
    pending.clear();
    f.clauses.push_back(c);
  };

  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    if (!have_header) {
      std::istringstream hs(line);
      std::string p, cnf;
      if (!(hs >> p >> cnf >> n >> m) || p != "p" || cnf != "cnf" || n < 1 ||
          m < 1) {
        throw ParseError("malformed DIMACS header: " + line);
      }
      std::string extra;
      if (hs >> extra) throw ParseError("trailing tokens in DIMACS header");
      have_header = true;
      f.num_variables = n;
      continue;
    }
    std::istringstream ls(line);
    int token;
    while (ls >> token) {
      if (token == 0) {
        flush_clause(0);
      } else {
        pending.push_back(token);
      }
    }
    if (!ls.eof()) throw ParseError("non-integer token in clause data");
  }
  if (!have_header) throw ParseError("missing DIMACS header");
  if (!pending.empty()) throw ParseError("unterminated clause at end of input");
  if (f.num_clauses() != m) {
    throw ParseError("clause count does not match header");
  }
  check_well_formed(f);
  return f;
}

std::string write_dimacs(const CnfFormula& formula) {
  std::ostringstream out;
  out << "p cnf " << formula.num_variables << ' ' << formula.num_clauses()
      << '\n';
  for (const Clause& c : formula.clauses) {
    for (const Literal& lit : c.literals) {
      out << (lit.negated ? -lit.variable : lit.variable) << ' ';
    }
    out << "0\n";
  }
  return out.str();
}

CnfFormula read_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_dimacs(buffer.str());
}

void write_dimacs_file(const CnfFormula& formula, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << write_dimacs(formula);
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace satqubo

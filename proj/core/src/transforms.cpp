#include "satqubo/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "satqubo/errors.hpp"
#include "satqubo/rng.hpp"

namespace satqubo {

namespace {

void check_formula(const CnfFormula& f) {
  if (f.num_variables < 1 || f.clauses.empty()) {
    throw InvalidParameterError("formula must have variables and clauses");
  }
}

// Places a 4-local gadget into the formula QUBO at the given indices,
// summing coefficient-wise with whatever is already there.
void superimpose(Qubo& qubo, const ClauseGadget& gadget,
                 const std::array<int, 4>& indices) {
  for (int i = 0; i < 4; ++i) {
    for (int j = i; j < 4; ++j) {
      const double v = gadget.coeff[static_cast<std::size_t>(i)]
                                   [static_cast<std::size_t>(j)];
      if (v != 0.0) qubo.add_coefficient(indices[static_cast<std::size_t>(i)],
                                         indices[static_cast<std::size_t>(j)], v);
    }
  }
}

double min_over_states(const ClauseGadget& g) {
  double best = std::numeric_limits<double>::infinity();
  for (int state = 0; state < 16; ++state) {
    const std::array<std::uint8_t, 4> bits{
        static_cast<std::uint8_t>(state & 1),
        static_cast<std::uint8_t>((state >> 1) & 1),
        static_cast<std::uint8_t>((state >> 2) & 1),
        static_cast<std::uint8_t>((state >> 3) & 1)};
    best = std::min(best, g.energy(bits));
  }
  return best;
}

ClauseGadget scaled_gadget(const ClauseGadget& g, double factor) {
  ClauseGadget out = g;
  for (auto& row : out.coeff) {
    for (double& v : row) v *= factor;
  }
  out.satisfying_energy = g.satisfying_energy * factor;
  return out;
}

TransformOutput build_chancellor(const CnfFormula& formula, double coupling,
                                 const std::vector<double>* multipliers,
                                 std::uint64_t seed) {
  check_formula(formula);
  const int n = formula.num_variables;
  const int m = formula.num_clauses();

  TransformOutput out;
  out.kind = multipliers ? TransformKind::kModifiedChancellor
                         : TransformKind::kChancellor;
  out.num_variables = n;
  out.num_clauses = m;
  out.params.coupling = coupling;
  if (multipliers) {
    out.params.multipliers = *multipliers;
    out.params.seed = seed;
  }
  out.qubo = Qubo(n + m);

  for (int l = 0; l < m; ++l) {
    const Clause& clause = formula.clauses[static_cast<std::size_t>(l)];
    ClauseGadget gadget = chancellor_clause_gadget(
        {clause.literals[0].negated, clause.literals[1].negated,
         clause.literals[2].negated},
        coupling);
    if (multipliers) {
      Rng rng(derive_seed(seed, static_cast<std::uint64_t>(l)));
      const double factor =
          (*multipliers)[rng.uniform_below(multipliers->size())];
      gadget = scaled_gadget(gadget, factor);
    }
    superimpose(out.qubo, gadget,
                {clause.literals[0].variable - 1,
                 clause.literals[1].variable - 1,
                 clause.literals[2].variable - 1, n + l});
  }
  return out;
}

}  // namespace

std::string to_string(TransformKind kind) {
  switch (kind) {
    case TransformKind::kChoi: return "choi";
    case TransformKind::kChancellor: return "chancellor";
    case TransformKind::kNuesslein: return "nuesslein";
    case TransformKind::kModifiedChancellor: return "modified_chancellor";
  }
  throw InvalidParameterError("unknown transform kind");
}

TransformKind transform_kind_from_string(const std::string& name) {
  if (name == "choi") return TransformKind::kChoi;
  if (name == "chancellor") return TransformKind::kChancellor;
  if (name == "nuesslein") return TransformKind::kNuesslein;
  if (name == "modified_chancellor") return TransformKind::kModifiedChancellor;
  throw InvalidParameterError("unknown transform kind: " + name);
}

double ClauseGadget::energy(const std::array<std::uint8_t, 4>& bits) const {
  double total = 0.0;
  for (int i = 0; i < 4; ++i) {
    if (!bits[static_cast<std::size_t>(i)]) continue;
    for (int j = i; j < 4; ++j) {
      if (bits[static_cast<std::size_t>(j)]) {
        total += coeff[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      }
    }
  }
  return total;
}

TransformOutput choi_transform(const CnfFormula& formula, double vertex_weight,
                               double edge_weight) {
  check_formula(formula);
  if (!(vertex_weight < 0.0)) {
    throw InvalidParameterError("vertex weight must be negative");
  }
  if (!(edge_weight > -vertex_weight)) {
    throw InvalidParameterError(
        "edge weight must exceed |vertex weight| to penalize conflicts");
  }
  const int m = formula.num_clauses();

  TransformOutput out;
  out.kind = TransformKind::kChoi;
  out.num_variables = formula.num_variables;
  out.num_clauses = m;
  out.params.vertex_weight = vertex_weight;
  out.params.edge_weight = edge_weight;
  out.qubo = Qubo(3 * m);
  out.node_literals.reserve(static_cast<std::size_t>(3 * m));

  for (int i = 0; i < m; ++i) {
    for (int s = 0; s < 3; ++s) {
      out.node_literals.push_back(
          formula.clauses[static_cast<std::size_t>(i)].literals[static_cast<std::size_t>(s)]);
      out.qubo.add_coefficient(3 * i + s, 3 * i + s, vertex_weight);
    }
    out.qubo.add_coefficient(3 * i, 3 * i + 1, edge_weight);
    out.qubo.add_coefficient(3 * i, 3 * i + 2, edge_weight);
    out.qubo.add_coefficient(3 * i + 1, 3 * i + 2, edge_weight);
  }
  // Conflict edges between complementary literal labels of different clauses.
  for (int a = 0; a < 3 * m; ++a) {
    for (int b = a + 1; b < 3 * m; ++b) {
      if (a / 3 == b / 3) continue;
      const Literal& la = out.node_literals[static_cast<std::size_t>(a)];
      const Literal& lb = out.node_literals[static_cast<std::size_t>(b)];
      if (la.variable == lb.variable && la.negated != lb.negated) {
        out.qubo.add_coefficient(a, b, edge_weight);
      }
    }
  }
  return out;
}

std::optional<Assignment> choi_decode(const TransformOutput& output,
                                      std::span<const std::uint8_t> bits) {
  if (output.kind != TransformKind::kChoi) {
    throw InvalidParameterError("output is not a Choi transform");
  }
  const int m = output.num_clauses;
  if (bits.size() != static_cast<std::size_t>(3 * m)) {
    throw InvalidParameterError("bit vector length does not match 3m");
  }
  // -1 unseen, otherwise the forced value of the variable.
  std::vector<int> forced(static_cast<std::size_t>(output.num_variables) + 1, -1);
  for (int clause = 0; clause < m; ++clause) {
    int selected = 0;
    for (int s = 0; s < 3; ++s) {
      const int node = 3 * clause + s;
      if (!bits[static_cast<std::size_t>(node)]) continue;
      ++selected;
      const Literal& lit = output.node_literals[static_cast<std::size_t>(node)];
      const int value = lit.negated ? 0 : 1;
      int& slot = forced[static_cast<std::size_t>(lit.variable)];
      if (slot == -1) {
        slot = value;
      } else if (slot != value) {
        return std::nullopt;  // conflict edge inside the selection
      }
    }
    if (selected != 1) return std::nullopt;  // missed clause or triangle edge
  }
  Assignment assignment(static_cast<std::size_t>(output.num_variables), 0);
  for (int v = 1; v <= output.num_variables; ++v) {
    if (forced[static_cast<std::size_t>(v)] == 1) {
      assignment[static_cast<std::size_t>(v - 1)] = 1;
    }
  }
  return assignment;
}

ClauseGadget chancellor_clause_gadget(const std::array<bool, 3>& negated,
                                      double coupling) {
  if (!(2.0 * coupling > 1.0)) {
    throw InvalidParameterError("need 2J > |h| with |h| = 1");
  }
  const double j = coupling;
  const std::array<double, 3> c{negated[0] ? -1.0 : 1.0,
                                negated[1] ? -1.0 : 1.0,
                                negated[2] ? -1.0 : 1.0};

  // Spin form of one clause: the OR expands (in literal spins t_i = c_i s_i)
  // to quadratic (J+1) t_i t_j, linear -2 t_i, ancilla couplings 2J t_i s_a
  // and ancilla field -2, which is the parity-check gadget for the cubic term
  // combined with the remaining clause coefficients. Below is that model
  // converted to Boolean variables, scaled so all coefficients are integers
  // for integer J, constants dropped.
  ClauseGadget g;
  for (int p = 0; p < 3; ++p) {
    for (int q = p + 1; q < 3; ++q) {
      g.coeff[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] =
          (j + 1) / 2 * c[static_cast<std::size_t>(p)] * c[static_cast<std::size_t>(q)];
    }
    g.coeff[static_cast<std::size_t>(p)][3] = j * c[static_cast<std::size_t>(p)];
    const double others = c[0] + c[1] + c[2] - c[static_cast<std::size_t>(p)];
    g.coeff[static_cast<std::size_t>(p)][static_cast<std::size_t>(p)] =
        -c[static_cast<std::size_t>(p)] * (j + 1) * (2 + others) / 4;
  }
  g.coeff[3][3] = -(1 + j * (c[0] + c[1] + c[2])) / 2;
  g.satisfying_energy = min_over_states(g);
  return g;
}

TransformOutput chancellor_transform(const CnfFormula& formula,
                                     double coupling) {
  return build_chancellor(formula, coupling, nullptr, 0);
}

ClauseGadget nuesslein_pattern(int num_negated) {
  ClauseGadget g;
  switch (num_negated) {
    case 0:  // (a v b v c)
      g.coeff[0][1] = 2;
      g.coeff[0][3] = -2;
      g.coeff[1][3] = -2;
      g.coeff[2][2] = -1;
      g.coeff[2][3] = 1;
      g.coeff[3][3] = 1;
      g.satisfying_energy = -1;
      break;
    case 1:  // (a v b v !c)
      g.coeff[0][1] = 2;
      g.coeff[0][3] = -2;
      g.coeff[1][3] = -2;
      g.coeff[2][2] = 1;
      g.coeff[2][3] = -1;
      g.coeff[3][3] = 2;
      g.satisfying_energy = 0;
      break;
    case 2:  // (a v !b v !c)
      g.coeff[0][0] = 2;
      g.coeff[0][1] = -2;
      g.coeff[0][3] = -2;
      g.coeff[1][3] = 2;
      g.coeff[2][2] = 1;
      g.coeff[2][3] = -1;
      g.satisfying_energy = 0;
      break;
    case 3:  // (!a v !b v !c)
      g.coeff[0][0] = -1;
      g.coeff[1][1] = -1;
      g.coeff[2][2] = -1;
      g.coeff[3][3] = -1;
      g.coeff[0][1] = 1;
      g.coeff[0][2] = 1;
      g.coeff[0][3] = 1;
      g.coeff[1][2] = 1;
      g.coeff[1][3] = 1;
      g.coeff[2][3] = 1;
      g.satisfying_energy = -1;
      break;
    default:
      throw InvalidParameterError("num_negated must be in 0..3");
  }
  return g;
}

TransformOutput nuesslein_transform(const CnfFormula& formula) {
  check_formula(formula);
  const int n = formula.num_variables;
  const int m = formula.num_clauses();

  TransformOutput out;
  out.kind = TransformKind::kNuesslein;
  out.num_variables = n;
  out.num_clauses = m;
  out.qubo = Qubo(n + m);

  for (int l = 0; l < m; ++l) {
    const Clause sorted = sort_clause(formula.clauses[static_cast<std::size_t>(l)]);
    const int num_negated = static_cast<int>(sorted.literals[0].negated) +
                            static_cast<int>(sorted.literals[1].negated) +
                            static_cast<int>(sorted.literals[2].negated);
    superimpose(out.qubo, nuesslein_pattern(num_negated),
                {sorted.literals[0].variable - 1, sorted.literals[1].variable - 1,
                 sorted.literals[2].variable - 1, n + l});
  }
  return out;
}

TransformOutput modified_chancellor_transform(
    const CnfFormula& formula, double coupling,
    const std::vector<double>& multipliers, std::uint64_t seed) {
  if (multipliers.empty()) {
    throw InvalidParameterError("multiplier set must be nonempty");
  }
  for (const double m : multipliers) {
    if (!(m > 0.0)) {
      throw InvalidParameterError("multipliers must be positive");
    }
  }
  return build_chancellor(formula, coupling, &multipliers, seed);
}

Assignment nm_decode(const TransformOutput& output,
                     std::span<const std::uint8_t> bits) {
  if (output.kind == TransformKind::kChoi) {
    throw InvalidParameterError("nm_decode does not apply to Choi outputs");
  }
  const std::size_t expected =
      static_cast<std::size_t>(output.num_variables + output.num_clauses);
  if (bits.size() != expected) {
    throw InvalidParameterError("bit vector length does not match n + m");
  }
  return Assignment(bits.begin(),
                    bits.begin() + static_cast<std::ptrdiff_t>(output.num_variables));
}

std::optional<Assignment> decode(const TransformOutput& output,
                                 std::span<const std::uint8_t> bits) {
  if (output.kind == TransformKind::kChoi) return choi_decode(output, bits);
  return nm_decode(output, bits);
}

}  // namespace satqubo

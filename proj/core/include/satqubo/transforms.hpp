#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "satqubo/cnf.hpp"
#include "satqubo/qubo.hpp"

namespace satqubo {

enum class TransformKind {
  kChoi,                // clique-and-conflict graph, 3m nodes
  kChancellor,          // parity-check ancilla per clause, n+m nodes
  kNuesslein,           // pattern matrix per sorted clause, n+m nodes
  kModifiedChancellor,  // Chancellor with per-clause random multipliers
};

std::string to_string(TransformKind kind);
TransformKind transform_kind_from_string(const std::string& name);

// Parameter defaults.
inline constexpr double kDefaultVertexWeight = -1.0;
inline constexpr double kDefaultEdgeWeight = 3.0;
inline constexpr double kChancellorJ1 = 1.0;
inline constexpr double kChancellorJ5 = 5.0;
inline const std::vector<double> kDefaultMultipliers{1.0, 500.0, 1001.0};

// Free parameters a transform was built with. Only the fields relevant to
// the kind are meaningful.
struct TransformParams {
  double vertex_weight = kDefaultVertexWeight;  // Choi
  double edge_weight = kDefaultEdgeWeight;      // Choi
  double coupling = kChancellorJ1;              // Chancellor J
  std::vector<double> multipliers;              // modified Chancellor
  std::uint64_t seed = 0;                       // modified Chancellor

  bool operator==(const TransformParams&) const = default;
};

// A QUBO plus the bookkeeping needed to decode bit vectors back to
// assignments. For n+m kinds, QUBO indices 0..n-1 are the formula variables
// and n..n+m-1 the per-clause ancillas. For Choi, index 3*clause + position
// carries the literal label stored in node_literals.
struct TransformOutput {
  Qubo qubo;
  TransformKind kind = TransformKind::kChoi;
  int num_variables = 0;
  int num_clauses = 0;
  std::vector<Literal> node_literals;  // Choi only
  TransformParams params;
};

// Boolean-form clause gadget on local indices 0..2 (clause literals) plus 3
// (ancilla). Minimizing over the ancilla, the 7 satisfying assignments of the
// clause share satisfying_energy and the falsifying one is strictly higher.
struct ClauseGadget {
  std::array<std::array<double, 4>, 4> coeff{};  // upper triangular
  double satisfying_energy = 0.0;

  double energy(const std::array<std::uint8_t, 4>& bits) const;
};

// One node per clause literal, weight vertex_weight; edge_weight on the three
// intra-clause triangle edges and on every conflict edge between nodes whose
// labels are complementary literals. Minimization form: a satisfiable formula
// reaches energy m * vertex_weight.
TransformOutput choi_transform(const CnfFormula& formula,
                               double vertex_weight = kDefaultVertexWeight,
                               double edge_weight = kDefaultEdgeWeight);

// Reads an independent one-node-per-clause selection off the bits; returns
// nullopt when the selection conflicts or misses a clause. Variables not
// fixed by any selected literal default to FALSE.
std::optional<Assignment> choi_decode(const TransformOutput& output,
                                      std::span<const std::uint8_t> bits);

// Parity-check gadget for one clause. negated[k] is the sign of the k-th
// literal; coupling is the free J with 2J > |h| = 1.
ClauseGadget chancellor_clause_gadget(const std::array<bool, 3>& negated,
                                      double coupling);

TransformOutput chancellor_transform(const CnfFormula& formula,
                                     double coupling);

// The fixed 4x4 pattern matrix for a sorted clause with num_negated in 0..3.
ClauseGadget nuesslein_pattern(int num_negated);

TransformOutput nuesslein_transform(const CnfFormula& formula);

// Chancellor construction with every clause gadget multiplied by a uniformly
// chosen entry of multipliers before superimposition. The multiplier stream
// is split per clause index, so runs replay exactly.
TransformOutput modified_chancellor_transform(
    const CnfFormula& formula, double coupling,
    const std::vector<double>& multipliers, std::uint64_t seed);

// Projection decoder for the n+m kinds: the first n bits are the assignment.
Assignment nm_decode(const TransformOutput& output,
                     std::span<const std::uint8_t> bits);

// Decodes bits against output's kind; nullopt when a Choi selection is
// invalid.
std::optional<Assignment> decode(const TransformOutput& output,
                                 std::span<const std::uint8_t> bits);

}  // namespace satqubo

#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <utility>

namespace satqubo {

// Sparse upper-triangular QUBO: minimize
//   H(x) = sum_i Q_ii x_i + sum_{i<j} Q_ij x_i x_j,  x in {0,1}^d.
// Diagonal entries are the linear coefficients. Exact zeros are never stored.
class Qubo {
 public:
  using Key = std::pair<int, int>;  // (i, j) with i <= j
  using TermMap = std::map<Key, double>;

  Qubo() = default;
  explicit Qubo(int dimension);

  int dimension() const { return dimension_; }
  const TermMap& terms() const { return terms_; }

  // 0.0 for entries that are not stored. Index order is normalized.
  double coefficient(int i, int j) const;

  // Overwrites the entry; storing 0.0 erases it.
  void set_coefficient(int i, int j, double value);

  // Adds into the entry; entries that cancel to exactly 0 are erased.
  void add_coefficient(int i, int j, double value);

  double energy(std::span<const std::uint8_t> bits) const;

  bool operator==(const Qubo&) const = default;

 private:
  Key normalize(int i, int j) const;

  int dimension_ = 0;
  TermMap terms_;
};

// Spin-space twin of a QUBO: H(s) = sum_i h_i s_i + sum_{i<j} J_ij s_i s_j
// + offset, with s_i in {-1, +1}.
struct IsingModel {
  int dimension = 0;
  std::map<int, double> fields;                     // h
  std::map<std::pair<int, int>, double> couplings;  // J, keys i < j
  double offset = 0.0;

  bool operator==(const IsingModel&) const = default;
};

double ising_energy(const IsingModel& model, std::span<const std::int8_t> spins);

// Change of variables x_i = (s_i + 1) / 2. For every bit vector x and its
// spin image s: qubo.energy(x) == ising_energy(to_ising(qubo), s).
IsingModel to_ising(const Qubo& qubo);

// Inverse map. Returns the QUBO plus a constant offset such that
// qubo.energy(x) + offset == ising_energy(model, s).
std::pair<Qubo, double> from_ising(const IsingModel& model);

struct Range {
  double lo = 0.0;
  double hi = 0.0;
};

// Hardware coefficient ranges used for scaling.
inline constexpr Range kDefaultFieldRange{-4.0, 4.0};
inline constexpr Range kDefaultCouplingRange{-1.0, 1.0};

// Divisor that brings fields into field_range and couplings into
// coupling_range:
//   h_max = max(max(h)/hi clipped at 0, min(h)/lo clipped at 0)
//   J_max analogous; result = max(h_max, J_max), floored at 1 so problems
// already in range are never scaled up.
double scale_factor(const IsingModel& model,
                    Range field_range = kDefaultFieldRange,
                    Range coupling_range = kDefaultCouplingRange);

// Divides every coefficient by the scale factor of the QUBO's Ising image
// (default ranges). Never scales up: in-range problems come back unchanged.
// Preserves the argmin set.
Qubo apply_dwave_scaling(const Qubo& qubo);

// Hardware-style auto-scaling: divides by the raw clipped-ratio maximum with
// no floor, so in-range problems are magnified to the full range. This makes
// scaling cancel uniform multipliers exactly: auto_scale(k * q) ==
// auto_scale(q) bit for bit. Used by the experiment pipeline.
Qubo auto_scale(const Qubo& qubo);

// Multiplies every coefficient by factor > 0. Preserves the argmin set.
Qubo multiply(const Qubo& qubo, double factor);

// Structural properties of the coefficient matrix. Distinct counts use exact
// equality on stored (nonzero) values; range sizes are max minus min over the
// same values; density is the filled fraction of the strict upper triangle.
struct StructureMetrics {
  int dimension = 0;
  int num_distinct_quadratic = 0;
  int num_distinct_linear = 0;
  double quadratic_range_size = 0.0;
  double linear_range_size = 0.0;
  double scale_factor = 0.0;  // 0 for an all-zero matrix
  double density = 0.0;

  bool operator==(const StructureMetrics&) const = default;
};

StructureMetrics structure_metrics(const Qubo& qubo);

}  // namespace satqubo

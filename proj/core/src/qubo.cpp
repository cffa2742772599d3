#include "satqubo/qubo.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "satqubo/errors.hpp"

namespace satqubo {

Qubo::Qubo(int dimension) : dimension_(dimension) {
  if (dimension < 1) throw InvalidParameterError("dimension must be positive");
}

Qubo::Key Qubo::normalize(int i, int j) const {
  if (i < 0 || j < 0 || i >= dimension_ || j >= dimension_) {
    throw InvalidParameterError("index out of range");
  }
  return i <= j ? Key{i, j} : Key{j, i};
}

double Qubo::coefficient(int i, int j) const {
  const auto it = terms_.find(normalize(i, j));
  return it == terms_.end() ? 0.0 : it->second;
}

void Qubo::set_coefficient(int i, int j, double value) {
  const Key key = normalize(i, j);
  if (value == 0.0) {
    terms_.erase(key);
  } else {
    terms_[key] = value;
  }
}

void Qubo::add_coefficient(int i, int j, double value) {
  if (value == 0.0) return;
  const Key key = normalize(i, j);
  const auto [it, inserted] = terms_.emplace(key, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0.0) terms_.erase(it);
  }
}

double Qubo::energy(std::span<const std::uint8_t> bits) const {
  if (bits.size() != static_cast<std::size_t>(dimension_)) {
    throw InvalidParameterError("bit vector length does not match dimension");
  }
  double total = 0.0;
  for (const auto& [key, value] : terms_) {
    if (bits[static_cast<std::size_t>(key.first)] &&
        bits[static_cast<std::size_t>(key.second)]) {
      total += value;
    }
  }
  return total;
}

double ising_energy(const IsingModel& model, std::span<const std::int8_t> spins) {
  if (spins.size() != static_cast<std::size_t>(model.dimension)) {
    throw InvalidParameterError("spin vector length does not match dimension");
  }
  double total = model.offset;
  for (const auto& [i, h] : model.fields) {
    total += h * spins[static_cast<std::size_t>(i)];
  }
  for (const auto& [key, j] : model.couplings) {
    total += j * spins[static_cast<std::size_t>(key.first)] *
             spins[static_cast<std::size_t>(key.second)];
  }
  return total;
}

IsingModel to_ising(const Qubo& qubo) {
  IsingModel m;
  m.dimension = qubo.dimension();
  for (const auto& [key, v] : qubo.terms()) {
    const auto [i, j] = key;
    if (i == j) {
      m.fields[i] += v / 2;
      m.offset += v / 2;
    } else {
      m.couplings[key] += v / 4;
      m.fields[i] += v / 4;
      m.fields[j] += v / 4;
      m.offset += v / 4;
    }
  }
  std::erase_if(m.fields, [](const auto& e) { return e.second == 0.0; });
  std::erase_if(m.couplings, [](const auto& e) { return e.second == 0.0; });
  return m;
}

std::pair<Qubo, double> from_ising(const IsingModel& model) {
  Qubo q(model.dimension);
  double offset = model.offset;
  for (const auto& [i, h] : model.fields) {
    q.add_coefficient(i, i, 2 * h);
    offset -= h;
  }
  for (const auto& [key, j] : model.couplings) {
    const auto [a, b] = key;
    q.add_coefficient(a, b, 4 * j);
    q.add_coefficient(a, a, -2 * j);
    q.add_coefficient(b, b, -2 * j);
    offset += j;
  }
  return {q, offset};
}

namespace {

// Raw Eq.-style clipped-ratio maximum, before any flooring.
double raw_scale_factor(const IsingModel& model, Range field_range,
                        Range coupling_range) {
  if (!(field_range.lo < 0.0 && 0.0 < field_range.hi) ||
      !(coupling_range.lo < 0.0 && 0.0 < coupling_range.hi)) {
    throw InvalidParameterError("ranges must straddle zero");
  }
  auto clipped_ratio_max = [](const auto& values, Range range) {
    if (values.empty()) return 0.0;
    double lo = values.begin()->second;
    double hi = lo;
    for (const auto& [key, v] : values) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    return std::max(std::max(hi / range.hi, 0.0),
                    std::max(lo / range.lo, 0.0));
  };
  return std::max(clipped_ratio_max(model.fields, field_range),
                  clipped_ratio_max(model.couplings, coupling_range));
}

Qubo divide_by(const Qubo& qubo, double factor) {
  if (factor == 1.0) return qubo;
  Qubo scaled(qubo.dimension());
  for (const auto& [key, v] : qubo.terms()) {
    scaled.set_coefficient(key.first, key.second, v / factor);
  }
  return scaled;
}

}  // namespace

double scale_factor(const IsingModel& model, Range field_range,
                    Range coupling_range) {
  const double factor = raw_scale_factor(model, field_range, coupling_range);
  return factor < 1.0 ? 1.0 : factor;
}

Qubo apply_dwave_scaling(const Qubo& qubo) {
  return divide_by(qubo, scale_factor(to_ising(qubo)));
}

Qubo auto_scale(const Qubo& qubo) {
  const double factor = raw_scale_factor(to_ising(qubo), kDefaultFieldRange,
                                         kDefaultCouplingRange);
  if (factor == 0.0) return qubo;
  return divide_by(qubo, factor);
}

Qubo multiply(const Qubo& qubo, double factor) {
  if (!(factor > 0.0)) {
    throw InvalidParameterError("factor must be positive");
  }
  Qubo result(qubo.dimension());
  for (const auto& [key, v] : qubo.terms()) {
    result.set_coefficient(key.first, key.second, v * factor);
  }
  return result;
}

StructureMetrics structure_metrics(const Qubo& qubo) {
  StructureMetrics s;
  s.dimension = qubo.dimension();
  std::set<double> quadratic;
  std::set<double> linear;
  for (const auto& [key, v] : qubo.terms()) {
    (key.first == key.second ? linear : quadratic).insert(v);
  }
  s.num_distinct_quadratic = static_cast<int>(quadratic.size());
  s.num_distinct_linear = static_cast<int>(linear.size());
  if (!quadratic.empty()) {
    s.quadratic_range_size = *quadratic.rbegin() - *quadratic.begin();
  }
  if (!linear.empty()) {
    s.linear_range_size = *linear.rbegin() - *linear.begin();
  }
  if (!qubo.terms().empty()) {
    s.scale_factor = scale_factor(to_ising(qubo));
  }
  const int d = qubo.dimension();
  if (d >= 2) {
    std::size_t num_quadratic_terms = 0;
    for (const auto& [key, v] : qubo.terms()) {
      if (key.first != key.second) ++num_quadratic_terms;
    }
    s.density = static_cast<double>(num_quadratic_terms) /
                (static_cast<double>(d) * (d - 1) / 2.0);
  }
  return s;
}

}  // namespace satqubo

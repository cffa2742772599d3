#pragma once

#include <cstdint>

namespace satqubo {

// Deterministic 64-bit generator (splitmix64). Every randomized operation in
// the library draws from this generator rather than std:: distributions, so
// identical seeds give identical results on every platform and standard
// library implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  // Next 64 uniform bits.
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform integer in [0, bound). bound must be nonzero. Rejection sampling,
  // so there is no modulo bias.
  std::uint64_t uniform_below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Fair coin.
  bool coin() { return (next() >> 63) != 0; }

 private:
  std::uint64_t state_;
};

// Derives an independent child seed from a root seed and a stream index.
// Nested derivation (root -> stream -> item -> sub-item) is the seeding
// scheme used throughout: every instance, clause and solver read gets its own
// reproducible stream, independent of evaluation order.
inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream) {
  std::uint64_t z = root ^ (0x9e3779b97f4a7c15ULL + (stream << 1));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace satqubo

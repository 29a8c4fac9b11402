#ifndef OAPOLY_RANDOM_HPP
#define OAPOLY_RANDOM_HPP

#include <cstddef>
#include <cstdint>
#include <random>

#include "rational.hpp"

namespace oapoly {

/// Seeded generator for every randomized check. mt19937_64 has a fixed output
/// sequence on all platforms, and the helpers below avoid the
/// implementation-defined std distributions, so a seed pins the whole run.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform-ish integer in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

  /// Integer in [lo, hi].
  long between(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

  bool coin() { return (engine_() >> 63U) != 0; }

 private:
  std::mt19937_64 engine_;
};

/// splitmix64 finalizer: derives independent per-trial seeds from a campaign seed.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30U)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27U)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31U);
}

/// p/q with |p| <= 20, 1 <= q <= 10.
inline Rational random_rational(Rng& rng) { return make_rational(rng.between(-20, 20), rng.between(1, 10)); }

inline Rational random_nonzero_rational(Rng& rng) {
  long p = rng.between(1, 20);
  if (rng.coin()) p = -p;
  return make_rational(p, rng.between(1, 10));
}

inline Vector random_vector(Rng& rng, std::size_t d) {
  Vector out;
  out.reserve(d);
  for (std::size_t i = 0; i < d; ++i) out.push_back(random_rational(rng));
  return out;
}

}  // namespace oapoly

#endif  // OAPOLY_RANDOM_HPP

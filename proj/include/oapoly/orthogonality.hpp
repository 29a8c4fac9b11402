#ifndef OAPOLY_ORTHOGONALITY_HPP
#define OAPOLY_ORTHOGONALITY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "lattice.hpp"
#include "polynomial.hpp"
#include "powers_form.hpp"
#include "random.hpp"
#include "rational.hpp"

namespace oapoly {

/// P(x + y) - P(x) - P(y); zero for every disjoint pair iff P is orthogonally additive.
inline Rational additivity_defect(const MonomialPoly& poly, const Vector& x, const Vector& y) {
  return evaluate(poly, add(x, y)) - evaluate(poly, x) - evaluate(poly, y);
}

struct DisjointPair {
  Vector x;
  Vector y;
};

struct OAVerdict {
  bool is_oa = true;
  /// Lexicographically first monomial touching two or more coordinates.
  std::optional<std::pair<MultiIndex, Rational>> witness;
  /// Disjoint x, y with P(x + y) != P(x) + P(y).
  std::optional<DisjointPair> disjoint_witness;
};

namespace detail {

// Splits supp(alpha) into {first coordinate} and the rest and searches the grid
// {1, ..., m+1}^|supp| (all ones first) for a point where the defect is nonzero.
// The defect restricted to these coordinates is a nonzero polynomial of degree m
// (it contains alpha), so it cannot vanish on the whole grid.
inline DisjointPair split_support_witness(const MonomialPoly& poly, const MultiIndex& alpha) {
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    if (alpha[i] != 0) support.push_back(i);
  const std::size_t d = poly.dimension();
  const long top = static_cast<long>(poly.degree()) + 1;
  std::vector<long> values(support.size(), 1);
  while (true) {
    DisjointPair pair{Vector(d, Rational(0)), Vector(d, Rational(0))};
    pair.x[support[0]] = values[0];
    for (std::size_t s = 1; s < support.size(); ++s) pair.y[support[s]] = values[s];
    if (additivity_defect(poly, pair.x, pair.y) != 0) return pair;
    std::size_t s = 0;
    while (s < values.size() && values[s] == top) values[s++] = 1;
    if (s == values.size()) break;
    ++values[s];
  }
  throw std::logic_error("no disjoint witness found for a mixed monomial");
}

}  // namespace detail

/// On R^d a homogeneous polynomial is orthogonally additive iff it has no
/// monomial whose support meets two coordinates.
inline OAVerdict is_orthogonally_additive(const MonomialPoly& poly) {
  OAVerdict verdict;
  for (const auto& [alpha, c] : poly.monomials()) {
    if (support_size(alpha) < 2) continue;
    verdict.is_oa = false;
    verdict.witness = std::make_pair(alpha, c);
    verdict.disjoint_witness = detail::split_support_witness(poly, alpha);
    break;
  }
  return verdict;
}

/// The symmetric m-linear form A with A(x, ..., x) = P(x), by polarization:
///   A(x_1, ..., x_m) = 1/(2^m m!) sum_{eps in {+-1}^m} eps_1 ... eps_m P(sum eps_i x_i).
/// The eps and -eps summands coincide, so only eps_1 = +1 is visited.
inline Rational symmetric_form_eval(const MonomialPoly& poly, const std::vector<Vector>& args) {
  const unsigned m = poly.degree();
  if (args.size() != m)
    throw std::invalid_argument("symmetric_form_eval: expected " + std::to_string(m) + " arguments, got " +
                                std::to_string(args.size()));
  for (const auto& v : args) require_same_dimension(poly.dimension(), v.size(), "symmetric_form_eval argument");
  if (m == 0) return poly.coefficient(MultiIndex(poly.dimension(), 0));
  if (poly.is_zero()) return Rational(0);

  const std::uint64_t patterns = std::uint64_t{1} << (m - 1);
  Rational sum(0);
  for (std::uint64_t mask = 0; mask < patterns; ++mask) {
    // bit s-1 of mask set <=> eps_s = -1 for s >= 1; eps_0 = +1
    Vector point = args[0];
    bool negative = false;
    for (unsigned s = 1; s < m; ++s) {
      const bool flip = ((mask >> (s - 1)) & 1U) != 0;
      negative ^= flip;
      for (std::size_t i = 0; i < point.size(); ++i) {
        if (flip) {
          point[i] -= args[s][i];
        } else {
          point[i] += args[s][i];
        }
      }
    }
    const Rational value = evaluate(poly, point);
    if (negative) {
      sum -= value;
    } else {
      sum += value;
    }
  }
  return sum / (Rational(patterns) * Rational(factorial(m)));
}

/// m argument vectors of which entries `pair.first` and `pair.second` are disjoint.
struct DisjointTuple {
  std::vector<Vector> vectors;
  std::pair<std::size_t, std::size_t> disjoint_pair{0, 1};
};

struct OrthosymmetryResult {
  bool orthosymmetric = true;
  std::optional<DisjointTuple> witness;
  /// A evaluated at the witness.
  std::optional<Rational> value;
};

namespace detail {

// Random nonempty split of the coordinates into two sides (side b empty only when d = 1).
inline std::vector<bool> random_split(Rng& rng, std::size_t d) {
  std::vector<bool> on_a(d);
  for (std::size_t i = 0; i < d; ++i) on_a[i] = rng.coin();
  if (d >= 2) {
    const std::size_t pick = static_cast<std::size_t>(rng.below(d));
    bool any_a = false;
    bool any_b = false;
    for (bool f : on_a) (f ? any_a : any_b) = true;
    if (!any_a) on_a[pick] = true;
    if (!any_b) on_a[pick] = false;
  } else {
    on_a[0] = true;
  }
  return on_a;
}

inline Vector random_vector_on(Rng& rng, const std::vector<bool>& on_side, bool side) {
  Vector out(on_side.size(), Rational(0));
  for (std::size_t i = 0; i < on_side.size(); ++i)
    if (on_side[i] == side) out[i] = random_rational(rng);
  return out;
}

}  // namespace detail

/// Samples disjoint tuples and reports the first one on which the symmetric form
/// does not vanish. Before the random draws, the sweep tries the coordinate tuples
/// (e_a, e_b, 1, ..., 1) for a < b; each counts as one trial.
inline OrthosymmetryResult orthosymmetry_check(const MonomialPoly& poly, std::size_t trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("orthosymmetry_check: trials must be at least 1");
  OrthosymmetryResult result;
  const unsigned m = poly.degree();
  const std::size_t d = poly.dimension();
  if (m < 2 || poly.is_zero()) return result;

  auto test = [&](DisjointTuple tuple) {
    Rational value = symmetric_form_eval(poly, tuple.vectors);
    if (value == 0) return false;
    result.orthosymmetric = false;
    result.witness = std::move(tuple);
    result.value = std::move(value);
    return true;
  };

  std::size_t used = 0;
  const Vector ones(d, Rational(1));
  for (std::size_t a = 0; a < d && used < trials; ++a) {
    for (std::size_t b = a + 1; b < d && used < trials; ++b, ++used) {
      DisjointTuple tuple;
      tuple.vectors.assign(m, ones);
      tuple.vectors[0] = unit_vector(d, a);
      tuple.vectors[1] = unit_vector(d, b);
      if (test(std::move(tuple))) return result;
    }
  }

  Rng rng(seed);
  for (; used < trials; ++used) {
    DisjointTuple tuple;
    std::size_t i = static_cast<std::size_t>(rng.below(m));
    std::size_t j = static_cast<std::size_t>(rng.below(m - 1));
    if (j >= i) ++j;
    tuple.disjoint_pair = {i, j};
    const auto on_a = detail::random_split(rng, d);
    tuple.vectors.resize(m);
    for (std::size_t s = 0; s < m; ++s) {
      if (s == i) {
        tuple.vectors[s] = detail::random_vector_on(rng, on_a, true);
      } else if (s == j) {
        tuple.vectors[s] = detail::random_vector_on(rng, on_a, false);
      } else {
        tuple.vectors[s] = random_vector(rng, d);
      }
    }
    if (test(std::move(tuple))) return result;
  }
  return result;
}

/// Samples random disjoint pairs and returns the first with P(x + y) != P(x) + P(y).
inline std::optional<DisjointPair> disjoint_pair_check(const MonomialPoly& poly, std::size_t trials,
                                                       std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t d = poly.dimension();
  for (std::size_t t = 0; t < trials; ++t) {
    const auto on_a = detail::random_split(rng, d);
    DisjointPair pair{detail::random_vector_on(rng, on_a, true), detail::random_vector_on(rng, on_a, false)};
    if (additivity_defect(poly, pair.x, pair.y) != 0) return pair;
  }
  return std::nullopt;
}

/// True iff, after amalgamation, phi_j or -phi_j is a lattice homomorphism for every term.
inline bool theorem_predicate(const PowersForm& form) {
  const PowersForm merged = amalgamate(form);
  for (const auto& term : merged.terms())
    if (!classify_homomorphism(term.phi).either()) return false;
  return true;
}

}  // namespace oapoly

#endif  // OAPOLY_ORTHOGONALITY_HPP

#ifndef OAPOLY_LATTICE_HPP
#define OAPOLY_LATTICE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "powers_form.hpp"
#include "rational.hpp"

namespace oapoly {

// Componentwise lattice structure of R^d.

inline Vector lattice_meet(const Vector& x, const Vector& y) {
  require_same_dimension(x.size(), y.size(), "lattice_meet");
  Vector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] < y[i] ? x[i] : y[i];
  return out;
}

inline Vector lattice_join(const Vector& x, const Vector& y) {
  require_same_dimension(x.size(), y.size(), "lattice_join");
  Vector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] < y[i] ? y[i] : x[i];
  return out;
}

inline Vector lattice_abs(const Vector& x) {
  Vector out(x);
  for (auto& v : out)
    if (v < 0) v = -v;
  return out;
}

inline Vector positive_part(const Vector& x) { return lattice_join(x, Vector(x.size(), Rational(0))); }

/// x^- = (-x) v 0, so x = x^+ - x^-.
inline Vector negative_part(const Vector& x) { return positive_part(scaled(x, Rational(-1))); }

/// |x| ^ |y| = 0, i.e. disjoint supports.
inline bool disjoint(const Vector& x, const Vector& y) {
  require_same_dimension(x.size(), y.size(), "disjoint");
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0 && y[i] != 0) return false;
  return true;
}

/// Outcome of testing phi and -phi for the lattice-homomorphism property.
struct HomVerdict {
  bool is_homomorphism = false;
  bool negation_is = false;
  /// Present iff neither phi nor -phi is a homomorphism: an x with
  /// |phi(x)| != phi(|x|) and |phi(x)| != -phi(|x|).
  std::optional<Vector> witness;

  bool either() const { return is_homomorphism || negation_is; }
};

/// A functional on R^d is a lattice homomorphism iff it is a nonnegative
/// multiple of a coordinate functional. The zero functional counts for both signs.
inline HomVerdict classify_homomorphism(const Functional& phi) {
  const auto& a = phi.coefficients;
  std::vector<std::size_t> nonzero;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) nonzero.push_back(i);

  HomVerdict verdict;
  if (nonzero.empty()) {
    verdict.is_homomorphism = verdict.negation_is = true;
    return verdict;
  }
  if (nonzero.size() == 1) {
    verdict.is_homomorphism = a[nonzero[0]] > 0;
    verdict.negation_is = !verdict.is_homomorphism;
    return verdict;
  }

  const std::size_t i = nonzero[0];
  const std::size_t j = nonzero[1];
  Vector x(a.size(), Rational(0));
  if ((a[i] > 0) == (a[j] > 0)) {
    // same sign: phi(|x|) = a_i + a_j while phi(x) = a_i - a_j is strictly smaller in size
    x[i] = 1;
    x[j] = -1;
  } else {
    // mixed sign: phi(|x|) = 0 while |phi(x)| = 2 |a_i a_j|
    x[i] = a[j] < 0 ? Rational(-a[j]) : a[j];
    x[j] = a[i] < 0 ? a[i] : Rational(-a[i]);
  }
  verdict.witness = std::move(x);
  return verdict;
}

/// |phi(x)| == phi(|x|), the pointwise form of the homomorphism criterion.
inline bool preserves_modulus_at(const Functional& phi, const Vector& x) {
  Rational value = phi(x);
  if (value < 0) value = -value;
  return value == phi(lattice_abs(x));
}

/// phi(x^+) ^ phi(x^-) == 0, the pointwise form of the disjointness-preserving criterion.
inline bool preserves_disjointness_at(const Functional& phi, const Vector& x) {
  const Rational up = phi(positive_part(x));
  const Rational down = phi(negative_part(x));
  return (up < down ? up : down) == 0;
}

}  // namespace oapoly

#endif  // OAPOLY_LATTICE_HPP

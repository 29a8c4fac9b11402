#ifndef OAPOLY_ALGEBRA_HPP
#define OAPOLY_ALGEBRA_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polynomial.hpp"
#include "powers_form.hpp"
#include "rational.hpp"

namespace oapoly {

/// m! / (alpha_1! ... alpha_d!) as a product of binomials C(rest, alpha_i).
inline BigInt multinomial(const BinomialTable& binom, const MultiIndex& alpha) {
  unsigned rest = total_degree(alpha);
  BigInt out(1);
  for (unsigned a : alpha) {
    if (a == 0) continue;
    out *= binom(rest, a);
    rest -= a;
  }
  return out;
}

/// Monomial expansion of sum_j lambda_j phi_j^m by the multinomial theorem.
inline MonomialPoly expand(const PowersForm& form) {
  const unsigned m = form.degree();
  const std::size_t d = form.dimension();
  MonomialPoly out(m, d);
  if (form.empty()) return out;

  const BinomialTable binom(m);
  // coeff_powers[j][i][e] = a_{j,i}^e
  std::vector<std::vector<std::vector<Rational>>> coeff_powers(form.size());
  for (std::size_t j = 0; j < form.size(); ++j) {
    const auto& a = form.terms()[j].phi.coefficients;
    coeff_powers[j].resize(d);
    for (std::size_t i = 0; i < d; ++i) {
      auto& row = coeff_powers[j][i];
      row.reserve(m + 1);
      row.emplace_back(1);
      for (unsigned e = 1; e <= m; ++e) row.push_back(row.back() * a[i]);
    }
  }

  for_each_composition(d, m, [&](const MultiIndex& alpha) {
    Rational sum(0);
    for (std::size_t j = 0; j < form.size(); ++j) {
      Rational term = form.terms()[j].lambda;
      for (std::size_t i = 0; i < d && term != 0; ++i)
        if (alpha[i] != 0) term *= coeff_powers[j][i][alpha[i]];
      sum += term;
    }
    if (sum != 0) out.add_term(alpha, sum * Rational(multinomial(binom, alpha)));
  });
  return out;
}

/// sum_j lambda_j phi_j(x)^m, evaluated without expanding.
inline Rational evaluate_form(const PowersForm& form, const Vector& x) {
  require_same_dimension(form.dimension(), x.size(), "evaluate_form");
  Rational sum(0);
  for (const auto& term : form.terms()) sum += term.lambda * pow(term.phi(x), form.degree());
  return sum;
}

/// Rescales phi so its first nonzero coefficient is +1. Returns the factor t with
/// phi = t * direction; t is zero only for the zero functional.
inline Rational canonical_direction(const Functional& phi, Functional& direction) {
  direction = phi;
  for (const auto& a : phi.coefficients) {
    if (a == 0) continue;
    const Rational t = a;
    for (auto& c : direction.coefficients) c /= t;
    return t;
  }
  return Rational(0);
}

/// Merges proportional functionals so the result has pairwise independent
/// terms. phi_i = t psi contributes lambda_i t^m to the coefficient of psi^m;
/// terms that cancel to zero are dropped. Output order follows the first
/// appearance of each direction.
inline PowersForm amalgamate(const PowersForm& form) {
  std::vector<Functional> directions;
  std::vector<Rational> lambdas;
  std::map<Vector, std::size_t> slot_of;
  for (const auto& term : form.terms()) {
    Functional direction;
    const Rational t = canonical_direction(term.phi, direction);
    const Rational contribution = term.lambda * pow(t, form.degree());
    auto [it, inserted] = slot_of.try_emplace(direction.coefficients, directions.size());
    if (inserted) {
      directions.push_back(std::move(direction));
      lambdas.push_back(contribution);
    } else {
      lambdas[it->second] += contribution;
    }
  }
  PowersForm out(form.degree(), form.dimension());
  for (std::size_t s = 0; s < directions.size(); ++s) out.add_term(lambdas[s], directions[s]);
  return out;
}

/// Indices (i, j), i < j, of the first pair of proportional functionals, if any.
inline std::optional<std::pair<std::size_t, std::size_t>> first_dependent_pair(const PowersForm& form) {
  std::map<Vector, std::size_t> first_index;
  for (std::size_t j = 0; j < form.size(); ++j) {
    Functional direction;
    canonical_direction(form.terms()[j].phi, direction);
    auto [it, inserted] = first_index.try_emplace(direction.coefficients, j);
    if (!inserted) return std::make_pair(it->second, j);
  }
  return std::nullopt;
}

inline bool pairwise_independent(const PowersForm& form) { return !first_dependent_pair(form).has_value(); }

namespace detail {
inline void check_derivative_order(unsigned k, unsigned m) {
  if (k < 1 || k >= m)
    throw std::invalid_argument("derivative order k=" + std::to_string(k) + " must satisfy 1 <= k < m=" +
                                std::to_string(m));
}
}  // namespace detail

/// The k-th differential of P = sum_j lambda_j phi_j^m at `point`, as a degree-k
/// powers form:
///   d^k P(point) = m!/(m-k)! * sum_j lambda_j phi_j(point)^{m-k} phi_j^k.
/// Terms with phi_j(point) = 0 vanish.
inline PowersForm derivative_form(const PowersForm& form, const Vector& point, unsigned k) {
  detail::check_derivative_order(k, form.degree());
  require_same_dimension(form.dimension(), point.size(), "derivative_form point");
  const Rational scale(falling_factorial(form.degree(), k));
  PowersForm out(k, form.dimension());
  for (const auto& term : form.terms()) {
    const Rational value = term.phi(point);
    if (value == 0) continue;
    out.add_term(scale * term.lambda * pow(value, form.degree() - k), term.phi);
  }
  return out;
}

/// The k-th differential of a monomial polynomial at `point`, computed from the
/// Taylor coefficients of (point + t h)^alpha:
///   d^k x^alpha (point)[h] = k! * sum_{beta <= alpha, |beta| = k} prod_i C(alpha_i, beta_i) point^{alpha-beta} h^beta.
inline MonomialPoly derivative_monomial(const MonomialPoly& poly, const Vector& point, unsigned k) {
  detail::check_derivative_order(k, poly.degree());
  require_same_dimension(poly.dimension(), point.size(), "derivative_monomial point");
  const std::size_t d = poly.dimension();
  const BinomialTable binom(poly.degree());
  const Rational k_factorial(factorial(k));
  MonomialPoly out(k, d);
  for (const auto& [alpha, c] : poly.monomials()) {
    for_each_composition(d, k, alpha, [&](const MultiIndex& beta) {
      Rational term = c * k_factorial;
      for (std::size_t i = 0; i < d && term != 0; ++i) {
        if (alpha[i] == 0) continue;
        term *= Rational(binom(alpha[i], beta[i]));
        term *= pow(point[i], alpha[i] - beta[i]);
      }
      out.add_term(beta, term);
    });
  }
  return out;
}

}  // namespace oapoly

#endif  // OAPOLY_ALGEBRA_HPP

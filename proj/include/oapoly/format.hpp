#ifndef OAPOLY_FORMAT_HPP
#define OAPOLY_FORMAT_HPP

#include <cstddef>
#include <string>

#include "polynomial.hpp"
#include "powers_form.hpp"
#include "rational.hpp"

namespace oapoly {

// Human-readable renderings. Monomials are listed in descending lexicographic
// order of exponents, so x_1^m comes first.

namespace detail {

inline std::string latex_rational(const Rational& v) {
  if (denominator(v) == 1) return numerator(v).str();
  const BigInt num = numerator(v);
  const bool negative = num < 0;
  return std::string(negative ? "-" : "") + "\\frac{" + (negative ? BigInt(-num) : num).str() + "}{" +
         denominator(v).str() + "}";
}

// Coefficient prefix with unit coefficients elided; `first` suppresses the leading '+'.
inline std::string signed_coefficient(const Rational& c, bool first, bool latex, bool has_variables) {
  std::string out;
  const bool negative = c < 0;
  const Rational magnitude = negative ? Rational(-c) : c;
  if (negative) {
    out = first ? "-" : (latex ? "-" : " - ");
  } else if (!first) {
    out = latex ? "+" : " + ";
  }
  if (magnitude != 1 || !has_variables) {
    out += latex ? latex_rational(magnitude) : to_string(magnitude);
    if (!latex && has_variables) out += "*";
  }
  return out;
}

}  // namespace detail

inline std::string to_latex(const MonomialPoly& poly) {
  if (poly.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = poly.monomials().rbegin(); it != poly.monomials().rend(); ++it) {
    const auto& [alpha, c] = *it;
    const bool has_variables = total_degree(alpha) > 0;
    out += detail::signed_coefficient(c, first, true, has_variables);
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      if (alpha[i] == 0) continue;
      out += "x_" + std::to_string(i + 1);
      if (alpha[i] > 1) out += "^{" + std::to_string(alpha[i]) + "}";
    }
    first = false;
  }
  return out;
}

inline std::string to_text(const MonomialPoly& poly) {
  if (poly.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = poly.monomials().rbegin(); it != poly.monomials().rend(); ++it) {
    const auto& [alpha, c] = *it;
    const bool has_variables = total_degree(alpha) > 0;
    out += detail::signed_coefficient(c, first, false, has_variables);
    bool first_factor = true;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      if (alpha[i] == 0) continue;
      if (!first_factor) out += "*";
      out += "x" + std::to_string(i + 1);
      if (alpha[i] > 1) out += "^" + std::to_string(alpha[i]);
      first_factor = false;
    }
    first = false;
  }
  return out;
}

/// e.g. "m=2 d=2 [1*(1,1)^2, 1*(1,-1)^2]"
inline std::string to_text(const PowersForm& form) {
  std::string out = "m=" + std::to_string(form.degree()) + " d=" + std::to_string(form.dimension()) + " [";
  for (std::size_t j = 0; j < form.size(); ++j) {
    const auto& term = form.terms()[j];
    if (j) out += ", ";
    out += to_string(term.lambda) + "*(";
    for (std::size_t i = 0; i < term.phi.dimension(); ++i)
      out += (i ? "," : "") + to_string(term.phi.coefficients[i]);
    out += ")^" + std::to_string(form.degree());
  }
  return out + "]";
}

}  // namespace oapoly

#endif  // OAPOLY_FORMAT_HPP

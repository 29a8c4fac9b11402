#ifndef OAPOLY_POWERS_FORM_HPP
#define OAPOLY_POWERS_FORM_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace oapoly {

/// Linear functional phi(x) = sum_i a_i x_i on R^d.
struct Functional {
  Vector coefficients;

  Functional() = default;
  explicit Functional(Vector coeffs) : coefficients(std::move(coeffs)) {}

  std::size_t dimension() const { return coefficients.size(); }

  bool is_zero() const {
    return std::all_of(coefficients.begin(), coefficients.end(), [](const Rational& a) { return a == 0; });
  }

  Rational operator()(const Vector& x) const {
    require_same_dimension(dimension(), x.size(), "functional application");
    Rational sum(0);
    for (std::size_t i = 0; i < x.size(); ++i)
      if (coefficients[i] != 0) sum += coefficients[i] * x[i];
    return sum;
  }

  Functional operator-() const { return Functional(scaled(coefficients, Rational(-1))); }

  friend bool operator==(const Functional&, const Functional&) = default;
};

/// One summand lambda * phi^m of a powers form.
struct PowerTerm {
  Rational lambda;
  Functional phi;

  friend bool operator==(const PowerTerm&, const PowerTerm&) = default;
};

/// The m-homogeneous polynomial sum_j lambda_j phi_j^m.
///
/// Terms with lambda = 0 or phi = 0 are dropped on construction; all
/// functionals share the form's dimension.
class PowersForm {
 public:
  PowersForm(unsigned degree, std::size_t dimension, std::vector<PowerTerm> terms = {})
      : degree_(degree), dimension_(dimension) {
    if (degree == 0) throw std::invalid_argument("powers form degree must be at least 1");
    if (dimension == 0) throw std::invalid_argument("powers form dimension must be at least 1");
    terms_.reserve(terms.size());
    for (auto& t : terms) add_term(std::move(t.lambda), std::move(t.phi));
  }

  unsigned degree() const { return degree_; }
  std::size_t dimension() const { return dimension_; }
  const std::vector<PowerTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  void add_term(Rational lambda, Functional phi) {
    require_same_dimension(dimension_, phi.dimension(), "powers form term");
    if (lambda == 0 || phi.is_zero()) return;
    terms_.push_back(PowerTerm{std::move(lambda), std::move(phi)});
  }

  friend bool operator==(const PowersForm&, const PowersForm&) = default;

 private:
  unsigned degree_;
  std::size_t dimension_;
  std::vector<PowerTerm> terms_;
};

}  // namespace oapoly

#endif  // OAPOLY_POWERS_FORM_HPP

#ifndef OAPOLY_POLYNOMIAL_HPP
#define OAPOLY_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace oapoly {

/// Exponent vector of a monomial x_1^{a_1} ... x_d^{a_d}.
using MultiIndex = std::vector<unsigned>;

inline unsigned total_degree(const MultiIndex& alpha) {
  return std::accumulate(alpha.begin(), alpha.end(), 0U);
}

/// Number of coordinates with a nonzero exponent.
inline std::size_t support_size(const MultiIndex& alpha) {
  std::size_t n = 0;
  for (unsigned a : alpha) n += (a != 0);
  return n;
}

/// Homogeneous polynomial of a fixed degree in sparse monomial form.
///
/// Keys are ordered lexicographically by exponent vector. Zero coefficients are
/// never stored, so two polynomials are equal iff their maps are equal.
class MonomialPoly {
 public:
  using Map = std::map<MultiIndex, Rational>;

  MonomialPoly(unsigned degree, std::size_t dimension) : degree_(degree), dimension_(dimension) {
    if (dimension == 0) throw std::invalid_argument("polynomial dimension must be at least 1");
  }

  unsigned degree() const { return degree_; }
  std::size_t dimension() const { return dimension_; }
  const Map& monomials() const { return monomials_; }
  bool is_zero() const { return monomials_.empty(); }
  std::size_t size() const { return monomials_.size(); }

  /// Coefficient of x^alpha (zero when absent).
  Rational coefficient(const MultiIndex& alpha) const {
    auto it = monomials_.find(alpha);
    return it == monomials_.end() ? Rational(0) : it->second;
  }

  /// Adds c x^alpha, erasing the entry if it cancels.
  void add_term(const MultiIndex& alpha, const Rational& c) {
    check_index(alpha);
    if (c == 0) return;
    auto [it, inserted] = monomials_.try_emplace(alpha, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) monomials_.erase(it);
    }
  }

  MonomialPoly& operator+=(const MonomialPoly& other) {
    check_compatible(other);
    for (const auto& [alpha, c] : other.monomials_) add_term(alpha, c);
    return *this;
  }

  MonomialPoly& operator*=(const Rational& s) {
    if (s == 0) {
      monomials_.clear();
    } else {
      for (auto& entry : monomials_) entry.second *= s;
    }
    return *this;
  }

  friend bool operator==(const MonomialPoly& a, const MonomialPoly& b) {
    return a.degree_ == b.degree_ && a.dimension_ == b.dimension_ && a.monomials_ == b.monomials_;
  }

 private:
  void check_index(const MultiIndex& alpha) const {
    require_same_dimension(dimension_, alpha.size(), "monomial exponents");
    if (total_degree(alpha) != degree_)
      throw std::invalid_argument("monomial degree " + std::to_string(total_degree(alpha)) +
                                  " does not match polynomial degree " + std::to_string(degree_));
  }

  void check_compatible(const MonomialPoly& other) const {
    if (other.degree_ != degree_ || other.dimension_ != dimension_)
      throw std::invalid_argument("incompatible polynomial shapes");
  }

  unsigned degree_;
  std::size_t dimension_;
  Map monomials_;
};

inline MonomialPoly operator*(const Rational& s, MonomialPoly p) {
  p *= s;
  return p;
}

/// Exact value of sum_alpha c_alpha x^alpha.
inline Rational evaluate(const MonomialPoly& poly, const Vector& x) {
  require_same_dimension(poly.dimension(), x.size(), "evaluate");
  const std::size_t d = x.size();
  // powers[i][e] = x_i^e
  std::vector<std::vector<Rational>> powers(d);
  for (std::size_t i = 0; i < d; ++i) {
    powers[i].reserve(poly.degree() + 1);
    powers[i].emplace_back(1);
    for (unsigned e = 1; e <= poly.degree(); ++e) powers[i].push_back(powers[i].back() * x[i]);
  }
  Rational sum(0);
  for (const auto& [alpha, c] : poly.monomials()) {
    Rational term = c;
    for (std::size_t i = 0; i < d && term != 0; ++i)
      if (alpha[i] != 0) term *= powers[i][alpha[i]];
    sum += term;
  }
  return sum;
}

/// Calls visit(alpha) for every exponent vector of length d with entries summing
/// to total and alpha[i] <= bound[i]. Visits in lexicographically descending order.
template <typename Visitor>
void for_each_composition(std::size_t d, unsigned total, const MultiIndex& bound, Visitor&& visit) {
  if (d == 0) return;
  MultiIndex alpha(d, 0);
  // suffix_cap[i] = sum of bound[i..d-1]
  std::vector<unsigned> suffix_cap(d + 1, 0);
  for (std::size_t i = d; i-- > 0;) suffix_cap[i] = suffix_cap[i + 1] + bound[i];
  if (suffix_cap[0] < total) return;

  // Depth-first fill with an explicit stack; position i takes values from
  // min(bound, remaining) down to the smallest value that keeps the rest feasible.
  std::vector<unsigned> remaining(d + 1, 0);
  remaining[0] = total;
  std::size_t i = 0;
  auto lowest = [&](std::size_t pos) {
    unsigned rest_cap = suffix_cap[pos + 1];
    return remaining[pos] > rest_cap ? remaining[pos] - rest_cap : 0U;
  };
  alpha[0] = std::min(bound[0], total);
  while (true) {
    if (i + 1 == d) {
      alpha[i] = remaining[i];
      visit(static_cast<const MultiIndex&>(alpha));
      // backtrack to the deepest position that can still decrease
      bool advanced = false;
      while (i > 0) {
        --i;
        if (alpha[i] > lowest(i)) {
          --alpha[i];
          advanced = true;
          break;
        }
      }
      if (!advanced) return;
    }
    remaining[i + 1] = remaining[i] - alpha[i];
    ++i;
    alpha[i] = std::min(bound[i], remaining[i]);
  }
}

template <typename Visitor>
void for_each_composition(std::size_t d, unsigned total, Visitor&& visit) {
  for_each_composition(d, total, MultiIndex(d, total), std::forward<Visitor>(visit));
}

}  // namespace oapoly

#endif  // OAPOLY_POLYNOMIAL_HPP

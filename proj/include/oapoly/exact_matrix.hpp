#ifndef OAPOLY_EXACT_MATRIX_HPP
#define OAPOLY_EXACT_MATRIX_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace oapoly {

class SingularMatrixError : public std::runtime_error {
 public:
  SingularMatrixError() : std::runtime_error("matrix is singular") {}
};

/// Dense row-major matrix of rationals.
class ExactMatrix {
 public:
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

  ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
      throw std::invalid_argument("matrix entry count " + std::to_string(entries_.size()) + " != " +
                                  std::to_string(rows_) + "x" + std::to_string(cols_));
  }

  static ExactMatrix identity(std::size_t n) {
    ExactMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
    return out;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  const std::vector<Rational>& entries() const { return entries_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  Vector operator*(const Vector& v) const {
    require_same_dimension(cols_, v.size(), "matrix-vector product");
    Vector out(rows_, Rational(0));
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
    return out;
  }

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> entries_;
};

namespace detail {

// Integer matrix equal to `m` with every row scaled by the lcm of its denominators
// (extra columns, if any, are scaled with their row).
struct IntegerRows {
  std::vector<std::vector<BigInt>> rows;
  std::vector<BigInt> row_scale;
};

inline IntegerRows clear_denominators(const ExactMatrix& m, const Vector* rhs) {
  IntegerRows out;
  out.rows.resize(m.rows());
  out.row_scale.resize(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    BigInt scale(1);
    for (std::size_t c = 0; c < m.cols(); ++c) scale = lcm(scale, denominator(m(r, c)));
    if (rhs) scale = lcm(scale, denominator((*rhs)[r]));
    auto& row = out.rows[r];
    row.reserve(m.cols() + 1);
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(numerator(m(r, c)) * (scale / denominator(m(r, c))));
    if (rhs) row.push_back(numerator((*rhs)[r]) * (scale / denominator((*rhs)[r])));
    out.row_scale[r] = scale;
  }
  return out;
}

// Bareiss fraction-free elimination on the first n columns of an n-row integer
// matrix. Every division is exact. Returns the sign of the row permutation, or 0
// if a column has no nonzero pivot.
inline int bareiss_eliminate(std::vector<std::vector<BigInt>>& a, std::size_t n) {
  int sign = 1;
  BigInt previous(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a[pivot][k] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < a[i].size(); ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / previous;
      a[i][k] = 0;
    }
    previous = a[k][k];
  }
  return sign;
}

}  // namespace detail

/// Determinant by Bareiss elimination.
inline Rational determinant(const ExactMatrix& m) {
  if (!m.square()) throw std::invalid_argument("determinant of a non-square matrix");
  if (m.rows() == 0) return Rational(1);
  auto ints = detail::clear_denominators(m, nullptr);
  const int sign = detail::bareiss_eliminate(ints.rows, m.rows());
  if (sign == 0) return Rational(0);
  BigInt scale(1);
  for (const auto& s : ints.row_scale) scale *= s;
  return Rational(ints.rows.back().back() * sign, scale);
}

/// Exact solution of M a = rhs by fraction-free elimination and back substitution.
/// Throws SingularMatrixError when M is singular.
inline Vector solve_exact(const ExactMatrix& m, const Vector& rhs) {
  if (!m.square()) throw std::invalid_argument("solve_exact: matrix must be square");
  require_same_dimension(m.rows(), rhs.size(), "solve_exact right-hand side");
  const std::size_t n = m.rows();
  auto ints = detail::clear_denominators(m, &rhs);
  if (detail::bareiss_eliminate(ints.rows, n) == 0) throw SingularMatrixError();

  const auto& u = ints.rows;
  Vector solution(n, Rational(0));
  for (std::size_t i = n; i-- > 0;) {
    Rational acc(u[i][n]);
    for (std::size_t j = i + 1; j < n; ++j) acc -= Rational(u[i][j]) * solution[j];
    solution[i] = acc / Rational(u[i][i]);
  }
  return solution;
}

}  // namespace oapoly

#endif  // OAPOLY_EXACT_MATRIX_HPP

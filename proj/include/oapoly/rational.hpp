#ifndef OAPOLY_RATIONAL_HPP
#define OAPOLY_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace oapoly {

/// Arbitrary-precision integer used for numerators, denominators and
/// binomial coefficients.
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

/// Exact rational scalar. GMP keeps every value canonical: lowest terms,
/// positive denominator.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// A point of R^d (with rational entries).
using Vector = std::vector<Rational>;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  return Rational(BigInt(num), BigInt(den));
}

/// Parses "p", "-p" or "p/q". Whitespace is not accepted.
inline Rational parse_rational(std::string_view text) {
  auto is_integer = [](std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer(num, true) || !is_integer(den, false))
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  std::string num_str(num);
  if (num_str[0] == '+') num_str.erase(0, 1);
  BigInt n(num_str);
  BigInt d{std::string(den)};
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(n, d);
}

/// Inverse of parse_rational: "p" for integers, otherwise "p/q".
inline std::string to_string(const Rational& value) {
  std::string out = numerator(value).str();
  if (denominator(value) != 1) out += "/" + denominator(value).str();
  return out;
}

inline Rational pow(const Rational& base, unsigned exponent) {
  Rational result(1);
  Rational factor = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= factor;
    exponent >>= 1U;
    if (exponent != 0) factor *= factor;
  }
  return result;
}

inline BigInt factorial(unsigned n) {
  BigInt out(1);
  for (unsigned i = 2; i <= n; ++i) out *= i;
  return out;
}

/// Falling factorial n (n-1) ... (n-k+1) = n!/(n-k)!.
inline BigInt falling_factorial(unsigned n, unsigned k) {
  BigInt out(1);
  for (unsigned i = 0; i < k; ++i) out *= (n - i);
  return out;
}

/// Rows 0..max_n of Pascal's triangle in big integers.
class BinomialTable {
 public:
  explicit BinomialTable(unsigned max_n) : rows_(max_n + 1) {
    for (unsigned n = 0; n <= max_n; ++n) {
      rows_[n].assign(n + 1, BigInt(1));
      for (unsigned k = 1; k < n; ++k) rows_[n][k] = rows_[n - 1][k - 1] + rows_[n - 1][k];
    }
  }

  const BigInt& operator()(unsigned n, unsigned k) const {
    if (n >= rows_.size() || k > n) throw std::out_of_range("binomial index out of table range");
    return rows_[n][k];
  }

  unsigned max_n() const { return static_cast<unsigned>(rows_.size()) - 1; }

 private:
  std::vector<std::vector<BigInt>> rows_;
};

inline void require_same_dimension(std::size_t expected, std::size_t actual, const char* what) {
  if (expected != actual)
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (expected " +
                                std::to_string(expected) + ", got " + std::to_string(actual) + ")");
}

inline Vector scaled(const Vector& x, const Rational& t) {
  Vector out(x);
  for (auto& v : out) v *= t;
  return out;
}

inline Vector add(const Vector& a, const Vector& b) {
  require_same_dimension(a.size(), b.size(), "vector addition");
  Vector out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

inline Vector unit_vector(std::size_t d, std::size_t i) {
  Vector out(d, Rational(0));
  out.at(i) = 1;
  return out;
}

}  // namespace oapoly

#endif  // OAPOLY_RATIONAL_HPP

#ifndef OAPOLY_SHARPNESS_HPP
#define OAPOLY_SHARPNESS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "exact_matrix.hpp"
#include "lattice.hpp"
#include "orthogonality.hpp"
#include "polynomial.hpp"
#include "powers_form.hpp"
#include "rational.hpp"

namespace oapoly {

// Families of m functionals on R^2, none of them (or their negatives) a lattice
// homomorphism, whose m-th powers combine to x_1^m + B2 x_2^m. They show that
// "k < m terms" cannot be relaxed to k = m.

enum class Parity { even, odd };

inline const char* to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

struct SharpnessInstance {
  unsigned n = 0;
  unsigned m = 0;
  Parity parity = Parity::even;
  /// Solution A_1..A_n of the power-moment system.
  Vector A;
  Rational B2;
  PowersForm form{1, 2};
  MonomialPoly expanded{1, 2};
};

/// The n x n system sum_r A_r r^{2(n-j)} = rhs_j, j = 0..n-1. Row 0 carries the
/// normalization sum_r A_r r^{2n} = 1/2 (so the x_1^{2n} coefficient is exactly 1);
/// the other rows kill every mixed monomial.
inline std::pair<ExactMatrix, Vector> build_system(unsigned n) {
  if (n < 1) throw std::invalid_argument("build_system: n must be at least 1");
  ExactMatrix system(n, n);
  for (unsigned j = 0; j < n; ++j)
    for (unsigned r = 1; r <= n; ++r) system(j, r - 1) = Rational(pow(Rational(r), 2 * (n - j)));
  Vector rhs(n, Rational(0));
  rhs[0] = make_rational(1, 2);
  return {std::move(system), std::move(rhs)};
}

/// 2 * sum_r A_r, the x_2^m coefficient read off the j = n column of the expansion.
inline Rational b2_from_coefficients(const Vector& A) {
  Rational sum(0);
  for (const auto& a : A) sum += a;
  return 2 * sum;
}

namespace detail {
inline SharpnessInstance finish_instance(unsigned n, unsigned m, Parity parity, Vector A, PowersForm form) {
  SharpnessInstance inst;
  inst.n = n;
  inst.m = m;
  inst.parity = parity;
  inst.A = std::move(A);
  inst.expanded = expand(form);
  inst.form = std::move(form);
  MultiIndex x2_power{0, m};
  inst.B2 = inst.expanded.coefficient(x2_power);
  if (inst.B2 != b2_from_coefficients(inst.A))
    throw std::logic_error("sharpness instance: B2 from expansion disagrees with 2 * sum(A)");
  return inst;
}
}  // namespace detail

/// Degree m = 2n: sum_r A_r ((r x_1 + x_2)^{2n} + (r x_1 - x_2)^{2n}) = x_1^{2n} + B2 x_2^{2n}.
inline SharpnessInstance gen_even(unsigned n) {
  if (n < 1) throw std::invalid_argument("gen_even: n must be at least 1");
  auto [system, rhs] = build_system(n);
  Vector A = solve_exact(system, rhs);
  PowersForm form(2 * n, 2);
  for (unsigned r = 1; r <= n; ++r) {
    form.add_term(A[r - 1], Functional({Rational(r), Rational(1)}));
    form.add_term(A[r - 1], Functional({Rational(r), Rational(-1)}));
  }
  return detail::finish_instance(n, 2 * n, Parity::even, std::move(A), std::move(form));
}

/// Degree m = 2n - 1, the (2n-1)-th differential of the even identity at (1, 1)
/// divided by (2n)!:
///   2 A_1 (x_1 + x_2)^{2n-1} + sum_{r>=2} A_r ((r+1)(r x_1 + x_2)^{2n-1} + (r-1)(r x_1 - x_2)^{2n-1}).
inline SharpnessInstance gen_odd(unsigned n) {
  if (n < 2) throw std::invalid_argument("gen_odd: n must be at least 2 (n = 1 gives the linear case)");
  auto [system, rhs] = build_system(n);
  Vector A = solve_exact(system, rhs);
  PowersForm form(2 * n - 1, 2);
  form.add_term(2 * A[0], Functional({Rational(1), Rational(1)}));
  for (unsigned r = 2; r <= n; ++r) {
    form.add_term(A[r - 1] * Rational(r + 1), Functional({Rational(r), Rational(1)}));
    form.add_term(A[r - 1] * Rational(r - 1), Functional({Rational(r), Rational(-1)}));
  }
  return detail::finish_instance(n, 2 * n - 1, Parity::odd, std::move(A), std::move(form));
}

/// gen_even for m = 2n, gen_odd for m = 2n - 1 >= 3.
inline SharpnessInstance gen_sharpness(unsigned m) {
  if (m < 2) throw std::invalid_argument("sharpness examples need degree m >= 2");
  return m % 2 == 0 ? gen_even(m / 2) : gen_odd((m + 1) / 2);
}

struct ClauseResult {
  std::string name;
  bool passed = false;
  /// Witness or explanation when the clause fails.
  std::string detail;
};

struct VerificationReport {
  std::vector<ClauseResult> clauses;

  bool passed() const {
    for (const auto& c : clauses)
      if (!c.passed) return false;
    return true;
  }

  const ClauseResult& clause(const std::string& name) const {
    for (const auto& c : clauses)
      if (c.name == name) return c;
    throw std::out_of_range("no clause named " + name);
  }
};

namespace detail {
inline std::string format_vector(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_string(v[i]);
  return out + ")";
}

inline std::string format_index(const MultiIndex& alpha) {
  std::string out = "(";
  for (std::size_t i = 0; i < alpha.size(); ++i) out += (i ? "," : "") + std::to_string(alpha[i]);
  return out + ")";
}
}  // namespace detail

/// Re-checks every claim an instance makes, each exactly.
inline VerificationReport verify_instance(const SharpnessInstance& inst) {
  VerificationReport report;

  {
    ClauseResult c{"expansion_matches", true, {}};
    const MonomialPoly recomputed = expand(inst.form);
    if (!(recomputed == inst.expanded)) {
      c.passed = false;
      MonomialPoly diff = recomputed;
      diff += Rational(-1) * inst.expanded;
      const auto& [alpha, delta] = *diff.monomials().begin();
      c.detail = "expand(form) differs at monomial " + detail::format_index(alpha) + " by " + to_string(delta);
    }
    report.clauses.push_back(std::move(c));
  }

  {
    ClauseResult c{"orthogonally_additive", true, {}};
    const OAVerdict verdict = is_orthogonally_additive(inst.expanded);
    if (!verdict.is_oa) {
      c.passed = false;
      c.detail = "mixed monomial " + detail::format_index(verdict.witness->first) + " with coefficient " +
                 to_string(verdict.witness->second) + "; disjoint pair x=" +
                 detail::format_vector(verdict.disjoint_witness->x) +
                 " y=" + detail::format_vector(verdict.disjoint_witness->y);
    }
    report.clauses.push_back(std::move(c));
  }

  {
    ClauseResult c{"no_homomorphisms", true, {}};
    for (std::size_t j = 0; j < inst.form.size(); ++j) {
      const HomVerdict verdict = classify_homomorphism(inst.form.terms()[j].phi);
      if (verdict.either()) {
        c.passed = false;
        c.detail = "term " + std::to_string(j) + " functional " +
                   detail::format_vector(inst.form.terms()[j].phi.coefficients) +
                   (verdict.is_homomorphism ? " is a lattice homomorphism" : " has a homomorphic negation");
        break;
      }
    }
    report.clauses.push_back(std::move(c));
  }

  {
    ClauseResult c{"pairwise_independent", true, {}};
    if (auto pair = first_dependent_pair(inst.form)) {
      c.passed = false;
      c.detail = "terms " + std::to_string(pair->first) + " and " + std::to_string(pair->second) +
                 " are proportional";
    }
    report.clauses.push_back(std::move(c));
  }

  {
    ClauseResult c{"term_count_equals_degree", true, {}};
    const std::size_t count = amalgamate(inst.form).size();
    if (count != inst.m || inst.form.degree() != inst.m) {
      c.passed = false;
      c.detail = std::to_string(count) + " independent terms for degree " + std::to_string(inst.m);
    }
    report.clauses.push_back(std::move(c));
  }

  return report;
}

}  // namespace oapoly

#endif  // OAPOLY_SHARPNESS_HPP

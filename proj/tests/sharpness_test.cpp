#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace oapoly;
using namespace oapoly::test;

namespace {

// B2 for n = 1..8 from an independent sympy solve of the same system.
const char* const kFrozenB2[] = {"1", "-1/4", "1/36", "-1/576", "1/14400", "-1/518400", "1/25401600", "-1/1625702400"};

}  // namespace

TEST(BuildSystem, SmallCases) {
  auto [m1, rhs1] = build_system(1);
  EXPECT_EQ(m1, ExactMatrix(1, 1, {R(1)}));
  EXPECT_EQ(rhs1, Vector{R("1/2")});

  auto [m2, rhs2] = build_system(2);
  EXPECT_EQ(m2, ExactMatrix(2, 2, {R(1), R(16), R(1), R(4)}));
  EXPECT_EQ(rhs2, (Vector{R("1/2"), R(0)}));

  auto [m3, rhs3] = build_system(3);
  EXPECT_EQ(m3, ExactMatrix(3, 3, {R(1), R(64), R(729), R(1), R(16), R(81), R(1), R(4), R(9)}));
  EXPECT_THROW(build_system(0), std::invalid_argument);
}

TEST(SolveExact, Examples) {
  auto [m1, rhs1] = build_system(1);
  EXPECT_EQ(solve_exact(m1, rhs1), Vector{R("1/2")});
  auto [m2, rhs2] = build_system(2);
  EXPECT_EQ(solve_exact(m2, rhs2), (Vector{R("-1/6"), R("1/24")}));
  const Vector rhs{R("3/7"), R(-2), R(0), R("11/5")};
  EXPECT_EQ(solve_exact(ExactMatrix::identity(4), rhs), rhs);
}

TEST(SolveExact, PivotsAndRejectsSingular) {
  const ExactMatrix needs_swap(2, 2, {R(0), R(1), R(1), R(0)});
  EXPECT_EQ(solve_exact(needs_swap, V({3, 4})), V({4, 3}));
  const ExactMatrix singular(2, 2, {R(1), R(2), R(2), R(4)});
  EXPECT_THROW(solve_exact(singular, V({1, 1})), SingularMatrixError);
  EXPECT_EQ(determinant(singular), R(0));
  EXPECT_THROW(solve_exact(ExactMatrix(2, 3), V({1, 1})), std::invalid_argument);
}

TEST(SolveExact, RandomRationalSystemsMatchCramer) {
  Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng.below(4);
    ExactMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = random_rational(rng);
    const Vector rhs = random_vector(rng, n);
    const Rational det = laplace_determinant(m);
    EXPECT_EQ(determinant(m), det);
    if (det == 0) {
      EXPECT_THROW(solve_exact(m, rhs), SingularMatrixError);
      continue;
    }
    const Vector a = solve_exact(m, rhs);
    EXPECT_EQ(m * a, rhs);
    EXPECT_EQ(a, cramer_solve(m, rhs));
  }
}

TEST(SolveExact, VandermondeSystemsHaveZeroResidual) {
  for (unsigned n = 1; n <= 8; ++n) {
    auto [m, rhs] = build_system(n);
    EXPECT_NE(determinant(m), R(0));
    EXPECT_EQ(m * solve_exact(m, rhs), rhs);
    if (n <= 4) {
      EXPECT_EQ(solve_exact(m, rhs), cramer_solve(m, rhs));
    }
  }
}

TEST(GenEven, SmallInstances) {
  const SharpnessInstance one = gen_even(1);
  EXPECT_EQ(one.m, 2U);
  EXPECT_EQ(one.A, Vector{R("1/2")});
  EXPECT_EQ(one.B2, R(1));
  EXPECT_EQ(one.expanded, poly(2, 2, {{{2, 0}, R(1)}, {{0, 2}, R(1)}}));

  const SharpnessInstance two = gen_even(2);
  EXPECT_EQ(two.A, (Vector{R("-1/6"), R("1/24")}));
  EXPECT_EQ(two.B2, R("-1/4"));
  EXPECT_EQ(two.expanded, poly(4, 2, {{{4, 0}, R(1)}, {{0, 4}, R("-1/4")}}));

  const SharpnessInstance three = gen_even(3);
  EXPECT_EQ(three.A, (Vector{R("1/48"), R("-1/120"), R("1/720")}));
  EXPECT_EQ(three.expanded.size(), 2U);
  EXPECT_EQ(three.expanded.coefficient({6, 0}), R(1));
  EXPECT_THROW(gen_even(0), std::invalid_argument);
}

TEST(GenEven, MatchesFrozenB2AndOracleExpansion) {
  for (unsigned n = 1; n <= 8; ++n) {
    const SharpnessInstance inst = gen_even(n);
    EXPECT_EQ(inst.B2, R(kFrozenB2[n - 1])) << "n=" << n;
    EXPECT_EQ(inst.B2, b2_from_coefficients(inst.A));
    if (n <= 5) {
      EXPECT_EQ(expand_by_multiplication(inst.form), inst.expanded);
    }
  }
}

TEST(GenOdd, SmallInstances) {
  const SharpnessInstance two = gen_odd(2);
  EXPECT_EQ(two.m, 3U);
  EXPECT_EQ(two.form, PowersForm(3, 2, {{R("-1/3"), F({1, 1})}, {R("1/8"), F({2, 1})}, {R("1/24"), F({2, -1})}}));
  EXPECT_EQ(two.expanded, poly(3, 2, {{{3, 0}, R(1)}, {{0, 3}, R("-1/4")}}));
  EXPECT_EQ(two.B2, gen_even(2).B2);
  EXPECT_THROW(gen_odd(1), std::invalid_argument);
  for (unsigned n = 2; n <= 8; ++n) {
    EXPECT_EQ(gen_odd(n).form.size(), 2 * n - 1);
    EXPECT_EQ(gen_odd(n).B2, R(kFrozenB2[n - 1]));
  }
}

TEST(GenOdd, IsTheScaledDifferentialOfTheEvenIdentity) {
  for (unsigned n = 2; n <= 6; ++n) {
    const SharpnessInstance even = gen_even(n);
    const SharpnessInstance odd = gen_odd(n);
    const PowersForm diff = derivative_form(even.form, V({1, 1}), 2 * n - 1);
    EXPECT_EQ(expand(diff), Rational(factorial(2 * n)) * expand(odd.form));
    PowersForm scaled_down(2 * n - 1, 2);
    for (const auto& t : diff.terms()) scaled_down.add_term(t.lambda / Rational(factorial(2 * n)), t.phi);
    EXPECT_EQ(scaled_down, odd.form);
  }
}

TEST(GenSharpness, DispatchesOnParity) {
  EXPECT_EQ(gen_sharpness(4).parity, Parity::even);
  EXPECT_EQ(gen_sharpness(5).parity, Parity::odd);
  EXPECT_EQ(gen_sharpness(5).n, 3U);
  EXPECT_THROW(gen_sharpness(1), std::invalid_argument);
}

TEST(VerifyInstance, GeneratedInstancesPass) {
  for (const auto& inst : {gen_even(2), gen_odd(2), gen_even(1)}) {
    const VerificationReport report = verify_instance(inst);
    ASSERT_EQ(report.clauses.size(), 5U);
    EXPECT_TRUE(report.passed());
  }
}

TEST(VerifyInstance, TamperedCoefficientIsCaught) {
  SharpnessInstance inst = gen_even(2);
  std::vector<PowerTerm> terms = inst.form.terms();
  terms[2].lambda = -terms[2].lambda;
  inst.form = PowersForm(4, 2, terms);
  VerificationReport report = verify_instance(inst);
  EXPECT_FALSE(report.clause("expansion_matches").passed);
  EXPECT_NE(report.clause("expansion_matches").detail.find("monomial"), std::string::npos);

  // with a consistent but broken expansion the OA clause reports the mixed monomial
  inst.expanded = expand(inst.form);
  report = verify_instance(inst);
  EXPECT_TRUE(report.clause("expansion_matches").passed);
  EXPECT_FALSE(report.clause("orthogonally_additive").passed);
  EXPECT_NE(report.clause("orthogonally_additive").detail.find("mixed monomial"), std::string::npos);
}

TEST(VerifyInstance, CatchesHomomorphismsDependenceAndCount) {
  SharpnessInstance inst;
  inst.m = 2;
  inst.form = PowersForm(2, 2, {{R(1), F({1, 0})}, {R(1), F({2, 0})}});
  inst.expanded = expand(inst.form);
  const VerificationReport report = verify_instance(inst);
  EXPECT_FALSE(report.clause("no_homomorphisms").passed);
  EXPECT_FALSE(report.clause("pairwise_independent").passed);
  EXPECT_FALSE(report.clause("term_count_equals_degree").passed);
}

TEST(Sharpness, PredicateFailsWhileExpansionIsOA) {
  for (unsigned m = 2; m <= 12; ++m) {
    const SharpnessInstance inst = gen_sharpness(m);
    EXPECT_FALSE(theorem_predicate(inst.form));
    EXPECT_TRUE(is_orthogonally_additive(expand(inst.form)).is_oa);
  }
}

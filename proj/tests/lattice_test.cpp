#include <gtest/gtest.h>

#include <algorithm>

#include "test_support.hpp"

using namespace oapoly;
using namespace oapoly::test;

TEST(LatticeOps, Componentwise) {
  EXPECT_EQ(lattice_meet(V({1, -1}), V({0, 3})), V({0, -1}));
  EXPECT_EQ(lattice_abs(V({1, -1})), V({1, 1}));
  EXPECT_EQ(lattice_join(V({2, 0}), V({1, 5})), V({2, 5}));
  EXPECT_THROW(lattice_meet(V({1}), V({1, 2})), std::invalid_argument);
  EXPECT_THROW(lattice_join(V({1}), V({1, 2})), std::invalid_argument);
}

TEST(LatticeOps, RieszDecomposition) {
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    const Vector x = random_vector(rng, 4);
    const Vector plus = positive_part(x);
    const Vector minus = negative_part(x);
    EXPECT_EQ(add(plus, scaled(minus, R(-1))), x);
    EXPECT_EQ(add(plus, minus), lattice_abs(x));
    EXPECT_EQ(lattice_meet(plus, minus), Vector(4, R(0)));
  }
}

TEST(Classify, SumOfCoordinatesIsNeither) {
  const HomVerdict v = classify_homomorphism(F({1, 1}));
  EXPECT_FALSE(v.is_homomorphism);
  EXPECT_FALSE(v.negation_is);
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(*v.witness, V({1, -1}));
  EXPECT_EQ(F({1, 1})(lattice_abs(*v.witness)), R(2));
  EXPECT_EQ(F({1, 1})(*v.witness), R(0));
}

TEST(Classify, CoordinateMultiples) {
  const HomVerdict pos = classify_homomorphism(F({0, 3}));
  EXPECT_TRUE(pos.is_homomorphism);
  EXPECT_FALSE(pos.negation_is);
  EXPECT_FALSE(pos.witness);
  const HomVerdict neg = classify_homomorphism(F({-2, 0}));
  EXPECT_FALSE(neg.is_homomorphism);
  EXPECT_TRUE(neg.negation_is);
  EXPECT_FALSE(neg.witness);
}

TEST(Classify, ZeroFunctionalCountsForBothSigns) {
  const HomVerdict v = classify_homomorphism(F({0, 0, 0}));
  EXPECT_TRUE(v.is_homomorphism);
  EXPECT_TRUE(v.negation_is);
}

TEST(Classify, WitnessesFailBothCriteriaForBothSigns) {
  for (const auto& phi : {F({1, 1}), F({1, -1}), F({-1, 1}), F({-3, -5}), F({0, 2, 0, -7}), F({4, 0, 4, 1})}) {
    const HomVerdict v = classify_homomorphism(phi);
    ASSERT_TRUE(v.witness);
    for (const auto& psi : {phi, -phi}) {
      EXPECT_FALSE(preserves_modulus_at(psi, *v.witness));
      EXPECT_FALSE(preserves_disjointness_at(psi, *v.witness));
    }
  }
}

TEST(OrthogonalAdditivity, PurePowersAreOA) {
  EXPECT_TRUE(is_orthogonally_additive(poly(2, 2, {{{2, 0}, R(2)}, {{0, 2}, R(2)}})).is_oa);
  EXPECT_TRUE(is_orthogonally_additive(poly(3, 2, {{{3, 0}, R(1)}, {{0, 3}, R("-1/4")}})).is_oa);
  EXPECT_TRUE(is_orthogonally_additive(MonomialPoly(4, 3)).is_oa);
}

TEST(OrthogonalAdditivity, MixedMonomialGivesWitnesses) {
  const auto p = poly(2, 2, {{{1, 1}, R(1)}});
  const OAVerdict v = is_orthogonally_additive(p);
  EXPECT_FALSE(v.is_oa);
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(v.witness->first, (MultiIndex{1, 1}));
  EXPECT_EQ(v.witness->second, R(1));
  ASSERT_TRUE(v.disjoint_witness);
  EXPECT_EQ(v.disjoint_witness->x, V({1, 0}));
  EXPECT_EQ(v.disjoint_witness->y, V({0, 1}));
  EXPECT_EQ(evaluate(p, add(v.disjoint_witness->x, v.disjoint_witness->y)), R(1));
}

TEST(OrthogonalAdditivity, WitnessPairSurvivesCancellationAtOnes) {
  // x1^2 x2 - x1 x2^2 vanishes at (1, 1), so the all-ones split is not a witness.
  const auto p = poly(3, 2, {{{2, 1}, R(1)}, {{1, 2}, R(-1)}});
  const OAVerdict v = is_orthogonally_additive(p);
  ASSERT_FALSE(v.is_oa);
  EXPECT_EQ(v.witness->first, (MultiIndex{1, 2}));
  const auto& w = *v.disjoint_witness;
  EXPECT_TRUE(disjoint(w.x, w.y));
  EXPECT_NE(additivity_defect(p, w.x, w.y), R(0));
}

TEST(OrthogonalAdditivity, WitnessIsValidOnRandomPolynomials) {
  Rng rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t d = 2 + rng.below(3);
    const unsigned m = 2 + static_cast<unsigned>(rng.below(4));
    MonomialPoly p(m, d);
    for (int c = 0; c < 6; ++c) {
      MultiIndex alpha(d, 0);
      for (unsigned u = 0; u < m; ++u) ++alpha[rng.below(d)];
      p.add_term(alpha, R(rng.between(-3, 3)));
    }
    const OAVerdict v = is_orthogonally_additive(p);
    if (v.is_oa) continue;
    ASSERT_TRUE(v.disjoint_witness);
    EXPECT_TRUE(disjoint(v.disjoint_witness->x, v.disjoint_witness->y));
    EXPECT_NE(additivity_defect(p, v.disjoint_witness->x, v.disjoint_witness->y), R(0)) << to_text(p);
  }
}

TEST(SymmetricForm, Examples) {
  EXPECT_EQ(symmetric_form_eval(poly(2, 2, {{{1, 1}, R(1)}}), {V({1, 0}), V({0, 1})}), R("1/2"));
  EXPECT_EQ(symmetric_form_eval(poly(2, 2, {{{2, 0}, R(1)}}), {V({1, 0}), V({0, 1})}), R(0));
  EXPECT_THROW(symmetric_form_eval(poly(2, 2, {{{2, 0}, R(1)}}), {V({1, 0})}), std::invalid_argument);
}

TEST(SymmetricForm, MatchesMultilinearCoefficientFormula) {
  // A(e_1, e_2, e_2) for c x1 x2^2 is c / 3.
  EXPECT_EQ(symmetric_form_eval(poly(3, 2, {{{1, 2}, R(6)}}), {V({1, 0}), V({0, 1}), V({0, 1})}), R(2));
}

TEST(SymmetricForm, DiagonalAndPermutationProperties) {
  Rng rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t d = 1 + rng.below(4);
    const unsigned m = 1 + static_cast<unsigned>(rng.below(5));
    const MonomialPoly p = expand(random_form(rng, d, m, 1 + rng.below(3)));
    const Vector x = random_vector(rng, d);
    ASSERT_EQ(symmetric_form_eval(p, std::vector<Vector>(m, x)), evaluate(p, x));

    std::vector<Vector> args;
    for (unsigned s = 0; s < m; ++s) args.push_back(random_vector(rng, d));
    const Rational base = symmetric_form_eval(p, args);
    if (m >= 2) {
      auto swapped = args;
      std::swap(swapped[rng.below(m)], swapped[rng.below(m)]);
      ASSERT_EQ(symmetric_form_eval(p, swapped), base);
    }
    // linear in the first argument
    auto doubled = args;
    doubled[0] = scaled(doubled[0], R(3));
    ASSERT_EQ(symmetric_form_eval(p, doubled), R(3) * base);
  }
}

TEST(Orthosymmetry, Examples) {
  for (std::uint64_t seed : {1ULL, 2ULL, 99ULL}) {
    const OrthosymmetryResult r = orthosymmetry_check(poly(2, 2, {{{2, 0}, R(2)}, {{0, 2}, R(2)}}), 50, seed);
    EXPECT_TRUE(r.orthosymmetric);
    EXPECT_FALSE(r.witness);
  }
  const OrthosymmetryResult mixed = orthosymmetry_check(poly(2, 2, {{{1, 1}, R(1)}}), 50, 5);
  ASSERT_FALSE(mixed.orthosymmetric);
  EXPECT_EQ(mixed.witness->vectors[0], V({1, 0}));
  EXPECT_EQ(mixed.witness->vectors[1], V({0, 1}));
  EXPECT_EQ(*mixed.value, R("1/2"));
  EXPECT_TRUE(orthosymmetry_check(poly(5, 3, {{{0, 0, 5}, R(7)}}), 100, 3).orthosymmetric);
  EXPECT_THROW(orthosymmetry_check(poly(2, 2, {{{2, 0}, R(1)}}), 0, 1), std::invalid_argument);
}

TEST(Orthosymmetry, RandomWitnessTuplesAreDisjoint) {
  // A(e_1, e_2, y) is proportional to y_1 - y_2, so the coordinate sweep with y = (1, 1) misses it
  const auto p = poly(3, 2, {{{2, 1}, R(1)}, {{1, 2}, R(-1)}});
  const OrthosymmetryResult r = orthosymmetry_check(p, 200, 8);
  ASSERT_FALSE(r.orthosymmetric);
  const auto& t = *r.witness;
  EXPECT_TRUE(disjoint(t.vectors[t.disjoint_pair.first], t.vectors[t.disjoint_pair.second]));
  EXPECT_NE(symmetric_form_eval(p, t.vectors), R(0));
}

TEST(Orthosymmetry, Deterministic) {
  const auto p = poly(4, 3, {{{2, 1, 1}, R(1)}, {{4, 0, 0}, R(3)}});
  const auto a = orthosymmetry_check(p, 200, 77);
  const auto b = orthosymmetry_check(p, 200, 77);
  ASSERT_EQ(a.orthosymmetric, b.orthosymmetric);
  if (a.witness) {
    EXPECT_EQ(a.witness->vectors, b.witness->vectors);
  }
}

TEST(TheoremPredicate, Examples) {
  EXPECT_TRUE(theorem_predicate(PowersForm(3, 2, {{R(2), F({1, 0})}, {R(-1), F({0, 5})}})));
  EXPECT_FALSE(theorem_predicate(PowersForm(2, 2, {{R(1), F({1, 1})}, {R(1), F({1, -1})}})));
  const PowersForm odd(3, 2, {{R("-1/3"), F({1, 1})}, {R("1/8"), F({2, 1})}, {R("1/24"), F({2, -1})}});
  EXPECT_FALSE(theorem_predicate(odd));
  // a non-homomorphism that cancels under amalgamation does not count
  EXPECT_TRUE(theorem_predicate(PowersForm(2, 2, {{R(1), F({1, 0})}, {R(1), F({1, 1})}, {R(-1), F({2, 2})}, {R(3), F({1, 1})}})));
}

#ifndef OAPOLY_HARNESS_HPP
#define OAPOLY_HARNESS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "format.hpp"
#include "lattice.hpp"
#include "orthogonality.hpp"
#include "polynomial.hpp"
#include "powers_form.hpp"
#include "random.hpp"
#include "rational.hpp"
#include "sharpness.hpp"

namespace oapoly {

/// How many terms a generated powers form gets relative to its degree m.
enum class KPolicy { below_m, equal_m, any };

inline const char* to_string(KPolicy p) {
  switch (p) {
    case KPolicy::below_m: return "below_m";
    case KPolicy::equal_m: return "equal_m";
    case KPolicy::any: return "any";
  }
  return "?";
}

inline std::optional<KPolicy> parse_k_policy(const std::string& s) {
  if (s == "below_m") return KPolicy::below_m;
  if (s == "equal_m") return KPolicy::equal_m;
  if (s == "any") return KPolicy::any;
  return std::nullopt;
}

struct TrialConfig {
  std::uint64_t seed = 0;
  std::size_t trials = 100;
  std::size_t d_max = 5;
  unsigned m_max = 6;
  KPolicy k_policy = KPolicy::below_m;
  /// Random pairs / tuples / vectors drawn per instance by the sampling cross-checks.
  std::size_t samples = 200;

  void validate() const {
    if (trials < 1) throw std::invalid_argument("trials must be at least 1");
    if (d_max < 1) throw std::invalid_argument("d_max must be at least 1");
    if (m_max < 2) throw std::invalid_argument("m_max must be at least 2");
    if (samples < 1) throw std::invalid_argument("samples must be at least 1");
  }
};

struct TrialFailure {
  std::size_t trial = 0;
  std::string clause;
  std::string instance;
  std::string detail;

  friend bool operator==(const TrialFailure&, const TrialFailure&) = default;
};

struct ClauseCount {
  std::size_t checked = 0;
  std::size_t failed = 0;

  friend bool operator==(const ClauseCount&, const ClauseCount&) = default;
};

struct TrialReport {
  std::string campaign;
  std::size_t trials_run = 0;
  /// Generated sharpness instances added on top of the random trials.
  std::size_t injected = 0;
  std::vector<TrialFailure> failures;
  std::map<std::string, ClauseCount> clauses;
  /// k >= m forms whose predicate is false while the polynomial is orthogonally additive.
  std::vector<std::string> sharpness_confirmations;

  bool passed() const { return failures.empty(); }

  void record(const std::string& clause, bool ok, std::size_t trial, const std::string& instance,
              const std::string& detail = {}) {
    auto& count = clauses[clause];
    ++count.checked;
    if (ok) return;
    ++count.failed;
    failures.push_back(TrialFailure{trial, clause, instance, detail});
  }

  friend bool operator==(const TrialReport&, const TrialReport&) = default;
};

/// A random functional on R^d. With `hom`, +-c e_i for c > 0 (so phi or -phi is a
/// lattice homomorphism); otherwise at least two nonzero entries, which needs d >= 2.
inline Functional gen_functional(std::size_t d, bool hom, Rng& rng) {
  if (d < 1) throw std::invalid_argument("gen_functional: d must be at least 1");
  Vector coeffs(d, Rational(0));
  if (hom) {
    Rational c = make_rational(rng.between(1, 20), rng.between(1, 10));
    if (rng.coin()) c = -c;
    coeffs[rng.below(d)] = c;
    return Functional(std::move(coeffs));
  }
  if (d < 2) throw std::invalid_argument("gen_functional: a non-homomorphism needs d >= 2");
  const std::size_t count = 2 + static_cast<std::size_t>(rng.below(d - 1));
  std::vector<std::size_t> positions(d);
  for (std::size_t i = 0; i < d; ++i) positions[i] = i;
  // partial Fisher-Yates
  for (std::size_t i = 0; i < count; ++i) std::swap(positions[i], positions[i + rng.below(d - i)]);
  for (std::size_t i = 0; i < count; ++i) coeffs[positions[i]] = random_nonzero_rational(rng);
  return Functional(std::move(coeffs));
}

namespace detail {

inline std::size_t draw_dimension(Rng& rng, std::size_t d_max) {
  return 1 + static_cast<std::size_t>(rng.below(d_max));
}

inline unsigned draw_degree(Rng& rng, unsigned m_max) {
  return 2 + static_cast<unsigned>(rng.below(m_max - 1));
}

// Random form with k raw terms mixing homomorphic and non-homomorphic functionals,
// with occasional proportional duplicates; amalgamated before returning.
inline PowersForm random_mixed_form(Rng& rng, std::size_t d, unsigned m, std::size_t k) {
  // 0: all homomorphic, 1: independent coin per term, 2: exactly one non-homomorphic
  const auto mode = rng.below(3);
  const std::size_t odd_one = static_cast<std::size_t>(rng.below(k));
  PowersForm raw(m, d);
  for (std::size_t j = 0; j < k; ++j) {
    if (j > 0 && rng.below(8) == 0) {
      const auto& base = raw.terms().empty() ? Functional(unit_vector(d, 0)) : raw.terms()[rng.below(raw.size())].phi;
      raw.add_term(random_nonzero_rational(rng), Functional(scaled(base.coefficients, random_nonzero_rational(rng))));
      continue;
    }
    bool hom = true;
    if (d >= 2) {
      if (mode == 1) hom = rng.coin();
      if (mode == 2) hom = j != odd_one;
    }
    raw.add_term(random_nonzero_rational(rng), gen_functional(d, hom, rng));
  }
  return amalgamate(raw);
}

inline std::size_t draw_term_count(Rng& rng, KPolicy policy, unsigned m) {
  switch (policy) {
    case KPolicy::below_m: return 1 + static_cast<std::size_t>(rng.below(m - 1));
    case KPolicy::equal_m: return m;
    case KPolicy::any: return 1 + static_cast<std::size_t>(rng.below(m + 1));
  }
  return 1;
}

// Compares the orthogonal-additivity decision with the theorem's predicate.
// Below k = m they must agree; at or above it only "predicate => OA" is required.
inline void check_theorem_instance(TrialReport& report, std::size_t trial, const PowersForm& form) {
  const bool oa = is_orthogonally_additive(expand(form)).is_oa;
  const bool predicate = theorem_predicate(form);
  const std::string text = to_text(form);
  if (form.size() < form.degree()) {
    report.record("equivalence_below_m", oa == predicate, trial, text,
                  std::string("orthogonally additive=") + (oa ? "true" : "false") +
                      ", predicate=" + (predicate ? "true" : "false"));
    return;
  }
  report.record("forward_direction", !predicate || oa, trial, text, "predicate holds but polynomial is not OA");
  if (!predicate && oa) report.sharpness_confirmations.push_back(text);
}

}  // namespace detail

/// Random forms with k terms (per the policy) checked against the theorem: for
/// k < m, orthogonal additivity of the expansion must coincide with "every phi_j
/// or -phi_j is a lattice homomorphism". Under equal_m and any, the generated
/// sharpness instances for degrees 2..m_max are appended (dimension 2 required).
inline TrialReport run_theorem_trials(const TrialConfig& config) {
  config.validate();
  TrialReport report;
  report.campaign = "theorem";
  for (std::size_t t = 0; t < config.trials; ++t) {
    Rng rng(derive_seed(config.seed, t));
    const std::size_t d = detail::draw_dimension(rng, config.d_max);
    const unsigned m = detail::draw_degree(rng, config.m_max);
    const std::size_t k = detail::draw_term_count(rng, config.k_policy, m);
    detail::check_theorem_instance(report, t, detail::random_mixed_form(rng, d, m, k));
    ++report.trials_run;
  }
  if (config.k_policy != KPolicy::below_m && config.d_max >= 2) {
    for (unsigned m = 2; m <= config.m_max; ++m) {
      detail::check_theorem_instance(report, config.trials + report.injected, gen_sharpness(m).form);
      ++report.injected;
    }
  }
  return report;
}

/// Differentials of orthogonally additive forms (sums of powers of +-coordinate
/// functionals, or generated sharpness instances) at random points must again be
/// orthogonally additive. Each trial also cross-checks derivative_form against
/// derivative_monomial.
inline TrialReport run_deriv_trials(const TrialConfig& config) {
  config.validate();
  TrialReport report;
  report.campaign = "derivative";
  std::map<unsigned, PowersForm> sharp_forms;
  for (std::size_t t = 0; t < config.trials; ++t) {
    Rng rng(derive_seed(config.seed, t));
    std::optional<PowersForm> form;
    if (config.d_max >= 2 && rng.below(4) == 0) {
      const unsigned m = detail::draw_degree(rng, config.m_max);
      auto it = sharp_forms.find(m);
      if (it == sharp_forms.end()) it = sharp_forms.emplace(m, gen_sharpness(m).form).first;
      form = it->second;
    } else {
      const std::size_t d = detail::draw_dimension(rng, config.d_max);
      const unsigned m = detail::draw_degree(rng, config.m_max);
      const std::size_t terms = 1 + static_cast<std::size_t>(rng.below(2 * d));
      form.emplace(m, d);
      for (std::size_t j = 0; j < terms; ++j) form->add_term(random_nonzero_rational(rng), gen_functional(d, true, rng));
    }
    const Vector point = random_vector(rng, form->dimension());
    const unsigned k = 1 + static_cast<unsigned>(rng.below(form->degree() - 1));
    const std::string text = to_text(*form) + " at " + detail::format_vector(point) + " k=" + std::to_string(k);

    const MonomialPoly expanded = expand(*form);
    report.record("input_oa", is_orthogonally_additive(expanded).is_oa, t, text);
    const MonomialPoly via_form = expand(derivative_form(*form, point, k));
    const OAVerdict verdict = is_orthogonally_additive(via_form);
    report.record("derivative_oa", verdict.is_oa, t, text,
                  verdict.witness ? "mixed monomial " + detail::format_index(verdict.witness->first) : "");
    report.record("derivative_consistency", via_form == derivative_monomial(expanded, point, k), t, text);
    ++report.trials_run;
  }
  return report;
}

namespace detail {

// Random homogeneous polynomial with at most 10 monomials. A third of the draws
// use pure powers only, one draw in twenty is the zero polynomial.
inline MonomialPoly random_monomial_poly(Rng& rng, std::size_t d, unsigned m) {
  MonomialPoly poly(m, d);
  const auto kind = rng.below(20);
  if (kind == 0) return poly;
  const std::size_t count = 1 + static_cast<std::size_t>(rng.below(10));
  const bool pure = kind % 3 == 0;
  for (std::size_t c = 0; c < count; ++c) {
    MultiIndex alpha(d, 0);
    if (pure) {
      alpha[rng.below(d)] = m;
    } else {
      for (unsigned unit = 0; unit < m; ++unit) ++alpha[rng.below(d)];
    }
    poly.add_term(alpha, random_nonzero_rational(rng));
  }
  return poly;
}

}  // namespace detail

/// Three independent decisions of orthogonal additivity must agree on random
/// monomial polynomials: the monomial-support criterion, sampled disjoint pairs of
/// P, and sampled disjoint tuples of the polarized symmetric form.
inline TrialReport run_agreement_trials(const TrialConfig& config) {
  config.validate();
  TrialReport report;
  report.campaign = "agreement";
  for (std::size_t t = 0; t < config.trials; ++t) {
    Rng rng(derive_seed(config.seed, t));
    const std::size_t d = detail::draw_dimension(rng, config.d_max);
    const unsigned m = detail::draw_degree(rng, config.m_max);
    const MonomialPoly poly = detail::random_monomial_poly(rng, d, m);
    const std::string text = to_text(poly) + " (d=" + std::to_string(d) + ")";

    const OAVerdict verdict = is_orthogonally_additive(poly);
    const bool pairs_ok = !disjoint_pair_check(poly, config.samples, rng.next()).has_value();
    const OrthosymmetryResult ortho = orthosymmetry_check(poly, config.samples, rng.next());
    const bool agree = verdict.is_oa == pairs_ok && verdict.is_oa == ortho.orthosymmetric;
    report.record("three_way_agreement", agree, t, text,
                  std::string("criterion=") + (verdict.is_oa ? "true" : "false") +
                      " pairs=" + (pairs_ok ? "true" : "false") +
                      " orthosymmetry=" + (ortho.orthosymmetric ? "true" : "false"));
    if (verdict.disjoint_witness) {
      const auto& w = *verdict.disjoint_witness;
      report.record("witness_valid", disjoint(w.x, w.y) && additivity_defect(poly, w.x, w.y) != 0, t, text);
    }
    ++report.trials_run;
  }
  return report;
}

/// The structural homomorphism classifier against sampled pointwise criteria:
/// |phi(x)| = phi(|x|) and phi(x^+) ^ phi(x^-) = 0, for phi and for -phi.
inline TrialReport run_homomorphism_trials(const TrialConfig& config) {
  config.validate();
  TrialReport report;
  report.campaign = "homomorphism";
  for (std::size_t t = 0; t < config.trials; ++t) {
    Rng rng(derive_seed(config.seed, t));
    const std::size_t d = detail::draw_dimension(rng, config.d_max);
    Functional phi;
    switch (rng.below(4)) {
      case 0: phi = gen_functional(d, true, rng); break;
      case 1: phi = d >= 2 ? gen_functional(d, false, rng) : gen_functional(d, true, rng); break;
      case 2: phi = Functional(random_vector(rng, d)); break;
      default: phi = Functional(Vector(d, Rational(0))); break;
    }
    const HomVerdict verdict = classify_homomorphism(phi);
    const Functional negated = -phi;
    bool b_pos = true, c_pos = true, b_neg = true, c_neg = true;
    for (std::size_t s = 0; s < config.samples; ++s) {
      const Vector x = random_vector(rng, d);
      b_pos = b_pos && preserves_modulus_at(phi, x);
      c_pos = c_pos && preserves_disjointness_at(phi, x);
      b_neg = b_neg && preserves_modulus_at(negated, x);
      c_neg = c_neg && preserves_disjointness_at(negated, x);
    }
    const std::string text = detail::format_vector(phi.coefficients);
    report.record("modulus_criterion", verdict.is_homomorphism == b_pos && verdict.negation_is == b_neg, t, text);
    report.record("disjointness_criterion", verdict.is_homomorphism == c_pos && verdict.negation_is == c_neg, t, text);
    if (verdict.witness) {
      const Vector& x = *verdict.witness;
      const bool certifies = !preserves_modulus_at(phi, x) && !preserves_modulus_at(negated, x) &&
                             !preserves_disjointness_at(phi, x) && !preserves_disjointness_at(negated, x);
      report.record("witness_valid", certifies, t, text);
    }
    ++report.trials_run;
  }
  return report;
}

}  // namespace oapoly

#endif  // OAPOLY_HARNESS_HPP

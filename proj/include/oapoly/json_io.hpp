#ifndef OAPOLY_JSON_IO_HPP
#define OAPOLY_JSON_IO_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "harness.hpp"
#include "lattice.hpp"
#include "orthogonality.hpp"
#include "polynomial.hpp"
#include "powers_form.hpp"
#include "rational.hpp"
#include "sharpness.hpp"

namespace oapoly {

using Json = nlohmann::ordered_json;

/// Malformed input document; `field()` is a path such as "terms[1].lambda".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

// ---------------------------------------------------------------------------
// Writers. Rationals are always strings ("p" or "p/q").

inline Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

inline Json to_json(const MultiIndex& alpha) {
  Json out = Json::array();
  for (unsigned a : alpha) out.push_back(a);
  return out;
}

inline Json to_json(const Functional& phi) { return Json{{"coefficients", to_json(phi.coefficients)}}; }

inline Json to_json(const PowersForm& form) {
  Json terms = Json::array();
  for (const auto& t : form.terms()) terms.push_back(Json{{"lambda", to_string(t.lambda)}, {"phi", to_json(t.phi.coefficients)}});
  return Json{{"kind", "powers_form"}, {"m", form.degree()}, {"d", form.dimension()}, {"terms", std::move(terms)}};
}

inline Json to_json(const MonomialPoly& poly) {
  Json monomials = Json::array();
  // descending lexicographic order, matching the text and LaTeX renderings
  for (auto it = poly.monomials().rbegin(); it != poly.monomials().rend(); ++it)
    monomials.push_back(Json{{"exponents", to_json(it->first)}, {"coeff", to_string(it->second)}});
  return Json{{"kind", "monomial_poly"}, {"m", poly.degree()}, {"d", poly.dimension()}, {"monomials", std::move(monomials)}};
}

inline std::string comma_list(const Vector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_string(v[i]);
  return out;
}

inline Json to_json(const HomVerdict& verdict, const Functional& phi) {
  Json out{{"functional", comma_list(phi.coefficients)},
           {"homomorphism", verdict.is_homomorphism},
           {"negation", verdict.negation_is}};
  if (verdict.witness) out["witness"] = comma_list(*verdict.witness);
  return out;
}

inline Json to_json(const OAVerdict& verdict) {
  Json out{{"orthogonally_additive", verdict.is_oa}};
  if (verdict.witness)
    out["witness"] = Json{{"exponents", to_json(verdict.witness->first)}, {"coeff", to_string(verdict.witness->second)}};
  if (verdict.disjoint_witness)
    out["disjoint_pair"] = Json{{"x", to_json(verdict.disjoint_witness->x)}, {"y", to_json(verdict.disjoint_witness->y)}};
  return out;
}

inline Json to_json(const VerificationReport& report) {
  Json clauses = Json::array();
  for (const auto& c : report.clauses) {
    Json entry{{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) entry["detail"] = c.detail;
    clauses.push_back(std::move(entry));
  }
  return Json{{"passed", report.passed()}, {"clauses", std::move(clauses)}};
}

inline Json to_json(const SharpnessInstance& inst) {
  return Json{{"kind", "sharpness_instance"},
              {"n", inst.n},
              {"m", inst.m},
              {"parity", to_string(inst.parity)},
              {"A", to_json(inst.A)},
              {"B2", to_string(inst.B2)},
              {"form", to_json(inst.form)},
              {"expanded", to_json(inst.expanded)}};
}

inline Json to_json(const TrialReport& report) {
  Json clauses = Json::object();
  for (const auto& [name, count] : report.clauses) clauses[name] = Json{{"checked", count.checked}, {"failed", count.failed}};
  Json failures = Json::array();
  for (const auto& f : report.failures)
    failures.push_back(Json{{"trial", f.trial}, {"clause", f.clause}, {"instance", f.instance}, {"detail", f.detail}});
  return Json{{"campaign", report.campaign},
              {"trials_run", report.trials_run},
              {"injected", report.injected},
              {"passed", report.passed()},
              {"clauses", std::move(clauses)},
              {"failures", std::move(failures)},
              {"sharpness_confirmations", report.sharpness_confirmations}};
}

inline Json to_json(const TrialConfig& config) {
  return Json{{"seed", config.seed},
              {"trials", config.trials},
              {"dmax", config.d_max},
              {"mmax", config.m_max},
              {"k_policy", to_string(config.k_policy)},
              {"samples", config.samples}};
}

// ---------------------------------------------------------------------------
// Readers. Every failure names the offending field.

namespace detail {

inline const Json& member(const Json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw ParseError(path.empty() ? "<root>" : path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(path.empty() ? key : path + "." + key, "missing field");
  return *it;
}

inline std::string join(const std::string& path, const char* key) { return path.empty() ? key : path + "." + key; }

inline std::string index_path(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

inline Rational read_rational(const Json& j, const std::string& path) {
  if (!j.is_string()) throw ParseError(path, "expected a rational encoded as a string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(path, e.what());
  }
}

inline std::uint64_t read_count(const Json& j, const std::string& path, std::uint64_t minimum) {
  if (!j.is_number_integer()) throw ParseError(path, "expected an integer");
  if (j.is_number_unsigned() || j.get<std::int64_t>() >= 0) {
    const auto v = j.get<std::uint64_t>();
    if (v >= minimum) return v;
  }
  throw ParseError(path, "must be at least " + std::to_string(minimum));
}

inline Vector read_vector(const Json& j, const std::string& path, std::size_t d) {
  if (!j.is_array()) throw ParseError(path, "expected an array of rationals");
  if (j.size() != d) throw ParseError(path, "expected " + std::to_string(d) + " entries, got " + std::to_string(j.size()));
  Vector out;
  out.reserve(d);
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(read_rational(j[i], index_path(path, i)));
  return out;
}

inline void expect_kind(const Json& j, const char* kind, const std::string& path) {
  const Json& k = member(j, "kind", path);
  if (!k.is_string() || k.get<std::string>() != kind)
    throw ParseError(join(path, "kind"), std::string("expected \"") + kind + "\"");
}

}  // namespace detail

/// A term's "phi" may be a bare coefficient array or {"coefficients": [...]}.
inline Functional functional_from_json(const Json& j, const std::string& path, std::size_t d) {
  if (j.is_object()) return Functional(detail::read_vector(detail::member(j, "coefficients", path), detail::join(path, "coefficients"), d));
  return Functional(detail::read_vector(j, path, d));
}

inline PowersForm powers_form_from_json(const Json& j, const std::string& path = {}) {
  detail::expect_kind(j, "powers_form", path);
  const auto m = static_cast<unsigned>(detail::read_count(detail::member(j, "m", path), detail::join(path, "m"), 1));
  const auto d = static_cast<std::size_t>(detail::read_count(detail::member(j, "d", path), detail::join(path, "d"), 1));
  const Json& terms = detail::member(j, "terms", path);
  const std::string terms_path = detail::join(path, "terms");
  if (!terms.is_array()) throw ParseError(terms_path, "expected an array");
  PowersForm form(m, d);
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const std::string tp = detail::index_path(terms_path, t);
    Rational lambda = detail::read_rational(detail::member(terms[t], "lambda", tp), detail::join(tp, "lambda"));
    Functional phi = functional_from_json(detail::member(terms[t], "phi", tp), detail::join(tp, "phi"), d);
    form.add_term(std::move(lambda), std::move(phi));
  }
  return form;
}

inline MonomialPoly monomial_poly_from_json(const Json& j, const std::string& path = {}) {
  detail::expect_kind(j, "monomial_poly", path);
  const auto m = static_cast<unsigned>(detail::read_count(detail::member(j, "m", path), detail::join(path, "m"), 0));
  const auto d = static_cast<std::size_t>(detail::read_count(detail::member(j, "d", path), detail::join(path, "d"), 1));
  const Json& monomials = detail::member(j, "monomials", path);
  const std::string mp = detail::join(path, "monomials");
  if (!monomials.is_array()) throw ParseError(mp, "expected an array");
  MonomialPoly poly(m, d);
  for (std::size_t t = 0; t < monomials.size(); ++t) {
    const std::string tp = detail::index_path(mp, t);
    const Json& exps = detail::member(monomials[t], "exponents", tp);
    const std::string ep = detail::join(tp, "exponents");
    if (!exps.is_array() || exps.size() != d) throw ParseError(ep, "expected an array of " + std::to_string(d) + " exponents");
    MultiIndex alpha;
    for (std::size_t i = 0; i < exps.size(); ++i)
      alpha.push_back(static_cast<unsigned>(detail::read_count(exps[i], detail::index_path(ep, i), 0)));
    if (total_degree(alpha) != m) throw ParseError(ep, "exponents sum to " + std::to_string(total_degree(alpha)) + ", expected m=" + std::to_string(m));
    poly.add_term(alpha, detail::read_rational(detail::member(monomials[t], "coeff", tp), detail::join(tp, "coeff")));
  }
  return poly;
}

inline HomVerdict hom_verdict_from_json(const Json& j) {
  HomVerdict v;
  v.is_homomorphism = detail::member(j, "homomorphism", "").get<bool>();
  v.negation_is = detail::member(j, "negation", "").get<bool>();
  if (j.contains("witness")) {
    Vector w;
    std::string text = j["witness"].get<std::string>();
    std::size_t start = 0;
    while (true) {
      const auto comma = text.find(',', start);
      w.push_back(parse_rational(text.substr(start, comma - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    v.witness = std::move(w);
  }
  return v;
}

inline OAVerdict oa_verdict_from_json(const Json& j, std::size_t d) {
  OAVerdict v;
  v.is_oa = detail::member(j, "orthogonally_additive", "").get<bool>();
  if (j.contains("witness")) {
    const Json& w = j["witness"];
    v.witness = std::make_pair(w.at("exponents").get<MultiIndex>(), detail::read_rational(w.at("coeff"), "witness.coeff"));
  }
  if (j.contains("disjoint_pair")) {
    const Json& p = j["disjoint_pair"];
    v.disjoint_witness = DisjointPair{detail::read_vector(p.at("x"), "disjoint_pair.x", d),
                                      detail::read_vector(p.at("y"), "disjoint_pair.y", d)};
  }
  return v;
}

inline SharpnessInstance sharpness_instance_from_json(const Json& j) {
  detail::expect_kind(j, "sharpness_instance", "");
  SharpnessInstance inst;
  inst.n = static_cast<unsigned>(detail::read_count(detail::member(j, "n", ""), "n", 1));
  inst.m = static_cast<unsigned>(detail::read_count(detail::member(j, "m", ""), "m", 1));
  const std::string parity = detail::member(j, "parity", "").get<std::string>();
  if (parity != "even" && parity != "odd") throw ParseError("parity", "expected \"even\" or \"odd\"");
  inst.parity = parity == "even" ? Parity::even : Parity::odd;
  inst.A = detail::read_vector(detail::member(j, "A", ""), "A", inst.n);
  inst.B2 = detail::read_rational(detail::member(j, "B2", ""), "B2");
  inst.form = powers_form_from_json(detail::member(j, "form", ""), "form");
  inst.expanded = monomial_poly_from_json(detail::member(j, "expanded", ""), "expanded");
  return inst;
}

inline TrialReport trial_report_from_json(const Json& j) {
  TrialReport r;
  r.campaign = j.at("campaign").get<std::string>();
  r.trials_run = j.at("trials_run").get<std::size_t>();
  r.injected = j.at("injected").get<std::size_t>();
  for (const auto& [name, count] : j.at("clauses").items())
    r.clauses[name] = ClauseCount{count.at("checked").get<std::size_t>(), count.at("failed").get<std::size_t>()};
  for (const auto& f : j.at("failures"))
    r.failures.push_back(TrialFailure{f.at("trial").get<std::size_t>(), f.at("clause").get<std::string>(),
                                      f.at("instance").get<std::string>(), f.at("detail").get<std::string>()});
  r.sharpness_confirmations = j.at("sharpness_confirmations").get<std::vector<std::string>>();
  return r;
}

/// Either document kind; a powers form is expanded.
inline MonomialPoly polynomial_from_json(const Json& j) {
  const Json& kind = detail::member(j, "kind", "");
  if (kind.is_string() && kind.get<std::string>() == "powers_form") return expand(powers_form_from_json(j));
  return monomial_poly_from_json(j);
}

}  // namespace oapoly

#endif  // OAPOLY_JSON_IO_HPP

#ifndef OAPOLY_COMMANDS_HPP
#define OAPOLY_COMMANDS_HPP

#include <istream>
#include <iterator>
#include <ostream>
#include <stdexcept>
#include <string>

#include "algebra.hpp"
#include "format.hpp"
#include "harness.hpp"
#include "json_io.hpp"
#include "lattice.hpp"
#include "orthogonality.hpp"
#include "sharpness.hpp"

namespace oapoly::cli {

// Command bodies behind the oapoly executable, stream-based so they can be
// driven directly from tests. Results go to `out`, diagnostics to `err`.

enum ExitCode : int {
  kVerified = 0,
  kFalsified = 1,
  kInputError = 2,
};

namespace detail {

inline Json read_document(std::istream& in) {
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("<input>", std::string("invalid JSON: ") + e.what());
  }
}

inline void write(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kInputError;
}

}  // namespace detail

/// expand: powers_form document -> monomial polynomial (json, latex or text).
inline int run_expand(std::istream& in, const std::string& format, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    if (format != "json" && format != "latex" && format != "text")
      throw std::invalid_argument("--format must be json, latex or text");
    const MonomialPoly poly = expand(powers_form_from_json(detail::read_document(in)));
    if (format == "json") {
      detail::write(out, to_json(poly));
    } else {
      out << (format == "latex" ? to_latex(poly) : to_text(poly)) << '\n';
    }
    return int{kVerified};
  });
}

/// check-oa: monomial_poly or powers_form document -> OA verdict.
inline int run_check_oa(std::istream& in, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const MonomialPoly poly = polynomial_from_json(detail::read_document(in));
    const OAVerdict verdict = is_orthogonally_additive(poly);
    detail::write(out, to_json(verdict));
    return int{verdict.is_oa ? kVerified : kFalsified};
  });
}

/// classify "a1,a2,...": exit 1 only when neither phi nor -phi is a homomorphism.
inline int run_classify(const std::string& coefficients, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    Vector coeffs;
    std::size_t start = 0;
    while (true) {
      const auto comma = coefficients.find(',', start);
      const std::string item = coefficients.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      try {
        coeffs.push_back(parse_rational(item));
      } catch (const std::invalid_argument& e) {
        throw ParseError("functional[" + std::to_string(coeffs.size()) + "]", e.what());
      }
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    const Functional phi(std::move(coeffs));
    const HomVerdict verdict = classify_homomorphism(phi);
    detail::write(out, to_json(verdict, phi));
    return int{verdict.witness ? kFalsified : kVerified};
  });
}

/// gen-sharp --degree m [--verify]
inline int run_gen_sharp(long degree, bool verify, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    if (degree < 2) throw std::invalid_argument("--degree must be at least 2");
    const SharpnessInstance inst = gen_sharpness(static_cast<unsigned>(degree));
    Json doc = to_json(inst);
    int code = kVerified;
    if (verify) {
      const VerificationReport report = verify_instance(inst);
      doc["verification"] = to_json(report);
      if (!report.passed()) code = kFalsified;
    }
    detail::write(out, doc);
    return code;
  });
}

/// verify-theorem: theorem, derivative and agreement campaigns under one config.
inline int run_verify_theorem(const TrialConfig& config, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    config.validate();
    const TrialReport reports[] = {run_theorem_trials(config), run_deriv_trials(config), run_agreement_trials(config)};
    Json list = Json::array();
    bool passed = true;
    for (const auto& r : reports) {
      list.push_back(to_json(r));
      passed = passed && r.passed();
    }
    detail::write(out, Json{{"config", to_json(config)}, {"passed", passed}, {"reports", std::move(list)}});
    return int{passed ? kVerified : kFalsified};
  });
}

}  // namespace oapoly::cli

#endif  // OAPOLY_COMMANDS_HPP

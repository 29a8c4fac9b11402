// oapoly: command-line front end for expansion, homomorphism classification,
// orthogonal-additivity decisions, sharpness examples and trial campaigns.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <oapoly/commands.hpp>

namespace {

// "-" reads stdin.
template <typename Fn>
int with_input(const std::string& path, Fn&& fn) {
  if (path == "-") return fn(std::cin);
  std::ifstream file(path);
  if (!file) {
    std::cerr << "error: cannot open " << path << '\n';
    return oapoly::cli::kInputError;
  }
  return fn(file);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of sums of powers of linear functionals on R^d"};
  app.require_subcommand(1);

  std::string in_path;
  std::string format = "json";
  auto* expand = app.add_subcommand("expand", "Expand a powers_form document into monomials");
  expand->add_option("--in", in_path, "Input file, or - for stdin")->required();
  expand->add_option("--format", format, "json, latex or text")->check(CLI::IsMember({"json", "latex", "text"}));

  auto* check_oa = app.add_subcommand("check-oa", "Decide orthogonal additivity (exit 1 with a witness if not)");
  check_oa->add_option("--in", in_path, "Input file, or - for stdin")->required();

  std::string functional;
  auto* classify = app.add_subcommand("classify", "Classify a functional as a lattice homomorphism");
  classify->add_option("--functional", functional, "Comma-separated coefficients, e.g. \"1,-1/2\"")->required();

  long degree = 0;
  bool verify = false;
  auto* gen_sharp = app.add_subcommand("gen-sharp", "Emit the k = m sharpness example of a given degree");
  gen_sharp->add_option("--degree", degree, "Degree m >= 2")->required();
  gen_sharp->add_flag("--verify", verify, "Re-check every claim and exit 1 on failure");

  oapoly::TrialConfig config;
  long trials = 100;
  std::string k_policy = "below_m";
  auto* verify_theorem = app.add_subcommand("verify-theorem", "Run the seeded property campaigns");
  verify_theorem->add_option("--trials", trials, "Trials per campaign (>= 1)");
  verify_theorem->add_option("--seed", config.seed, "Campaign seed");
  verify_theorem->add_option("--dmax", config.d_max, "Largest lattice dimension");
  verify_theorem->add_option("--mmax", config.m_max, "Largest degree");
  verify_theorem->add_option("--k-policy", k_policy, "below_m, equal_m or any")
      ->check(CLI::IsMember({"below_m", "equal_m", "any"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return oapoly::cli::kInputError;
  }

  try {
    if (*expand)
      return with_input(in_path, [&](std::istream& in) { return oapoly::cli::run_expand(in, format, std::cout, std::cerr); });
    if (*check_oa)
      return with_input(in_path, [&](std::istream& in) { return oapoly::cli::run_check_oa(in, std::cout, std::cerr); });
    if (*classify) return oapoly::cli::run_classify(functional, std::cout, std::cerr);
    if (*gen_sharp) return oapoly::cli::run_gen_sharp(degree, verify, std::cout, std::cerr);
    if (*verify_theorem) {
      if (trials < 1) {
        std::cerr << "error: --trials must be at least 1\n";
        return oapoly::cli::kInputError;
      }
      config.trials = static_cast<std::size_t>(trials);
      config.k_policy = *oapoly::parse_k_policy(k_policy);
      return oapoly::cli::run_verify_theorem(config, std::cout, std::cerr);
    }
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
  return oapoly::cli::kInputError;
}

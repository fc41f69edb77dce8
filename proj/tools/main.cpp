// syzygy: expand generalized-Kronecker-delta contractions into exact
// trace-monomial form and verify the resulting Cayley-Hamilton identities
// numerically. Exit codes: 0 success, 1 verification failure, 2 usage or
// input error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "syzygy/combinatorics.hpp"
#include "syzygy/invariants.hpp"
#include "syzygy/symbolic.hpp"
#include "syzygy/verify.hpp"

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

// All text-mode floats use 17 significant digits so identical invocations
// produce byte-identical stdout.
std::string format_double(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

int dimension_cap() {
  int cap = syzygy::kMaxExpandDimension;
  if (const char* env = std::getenv("SYZYGY_MAX_DIM")) {
    const int raised = std::atoi(env);
    if (raised > cap) cap = raised;
  }
  return cap;
}

syzygy::DenseMatrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw syzygy::domain_error("cannot open matrix file: " + path);
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw syzygy::domain_error("matrix file " + path + " is not valid JSON: " +
                               e.what());
  }
  return syzygy::matrix_from_json(j);
}

struct ExpandArgs {
  int dim = 0;
  std::string basis = "p";
  bool normalize = false;
  std::string format = "text";
  int threads = 0;
};

int run_expand(const ExpandArgs& args) {
  syzygy::SymbolicPolynomial poly =
      syzygy::expand_delta_contraction(args.dim, args.threads, dimension_cap());
  if (args.basis == "sigma") {
    poly = syzygy::to_sigma_basis(poly, args.dim);
  }
  if (args.normalize) {
    poly = syzygy::normalize_ch(poly, args.dim);
  }
  syzygy::RenderFormat format = syzygy::RenderFormat::text;
  if (args.format == "latex") format = syzygy::RenderFormat::latex;
  if (args.format == "json") format = syzygy::RenderFormat::json;
  std::cout << syzygy::render(poly, format) << "\n";
  return 0;
}

struct VerifyArgs {
  int dim = 0;
  int trials = 100;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  int threads = 0;
};

int run_verify(const VerifyArgs& args) {
  syzygy::VerifyOptions options;
  options.tolerance = args.tol;
  options.threads = args.threads;
  options.max_dimension = dimension_cap();
  const auto expansion =
      syzygy::verify_expansion_identity(args.dim, args.trials, args.seed, options);
  const auto residual =
      syzygy::verify_ch_residual(args.dim, args.trials, args.seed, args.tol);
  std::cout << syzygy::report_to_json(expansion).dump() << "\n"
            << syzygy::report_to_json(residual).dump() << "\n";
  return (expansion.passed && residual.passed) ? 0 : kExitVerifyFailed;
}

struct InvariantsArgs {
  std::string matrix_path;
  std::string route = "newton";
};

int run_invariants(const InvariantsArgs& args) {
  const syzygy::DenseMatrix a = load_matrix(args.matrix_path);
  syzygy::InvariantVector sigma;
  sigma.basis = syzygy::Basis::sigma;
  if (args.route == "newton") {
    sigma = syzygy::newton_girard(syzygy::power_sums(a));
  } else if (args.route == "delta") {
    for (int k = 1; k <= a.dim(); ++k) {
      sigma.values.push_back(syzygy::sigma_via_delta(a, k));
    }
  } else {
    for (int k = 1; k <= a.dim(); ++k) {
      sigma.values.push_back(syzygy::principal_minors_sum(a, k));
    }
  }
  std::cout << syzygy::invariants_to_json(sigma).dump() << "\n";
  return 0;
}

int run_pairings(int order, bool list) {
  const auto pairings = syzygy::enumerate_pairings(order);
  std::cout << pairings.size() << "\n";
  if (list) {
    for (const auto& pairing : pairings) {
      std::string line;
      for (const auto& [lo, hi] : pairing.pairs) {
        line += "(" + std::to_string(lo + 1) + "," + std::to_string(hi + 1) + ")";
      }
      std::cout << line << "\n";
    }
  }
  return 0;
}

int run_check_delta(int dim, bool force) {
  const auto report = syzygy::check_delta_vanishes(dim, force);
  std::cout << syzygy::report_to_json(report).dump() << "\n";
  return report.passed ? 0 : kExitVerifyFailed;
}

int run_residual(const std::string& matrix_path) {
  const syzygy::DenseMatrix a = load_matrix(matrix_path);
  std::cout << format_double(syzygy::ch_residual(a)) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized-Kronecker-delta expansion and Cayley-Hamilton verification"};
  app.require_subcommand(1);

  ExpandArgs expand_args;
  auto* expand = app.add_subcommand(
      "expand", "Expand the delta contraction for one dimension");
  expand->add_option("--dim", expand_args.dim, "Matrix dimension m")->required();
  expand->add_option("--basis", expand_args.basis, "Invariant basis")
      ->check(CLI::IsMember({"p", "sigma"}))
      ->default_str("p");
  expand->add_flag("--normalize", expand_args.normalize,
                   "Divide by m! and the leading sign (monic form)");
  expand->add_option("--format", expand_args.format, "Output format")
      ->check(CLI::IsMember({"text", "latex", "json"}))
      ->default_str("text");
  expand->add_option("--threads", expand_args.threads,
                     "Worker threads for the expansion (0 = all cores)");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand(
      "verify", "Numerically verify the expansion and CH residual");
  verify->add_option("--dim", verify_args.dim, "Matrix dimension m")->required();
  verify->add_option("--trials", verify_args.trials, "Number of random trials")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", verify_args.seed, "PRNG seed");
  verify->add_option("--tol", verify_args.tol, "Residual tolerance");
  verify->add_option("--threads", verify_args.threads,
                     "Worker threads for the expansion (0 = all cores)");

  InvariantsArgs invariants_args;
  auto* invariants = app.add_subcommand(
      "invariants", "Principal invariants of a matrix from a JSON file");
  invariants->add_option("--matrix", invariants_args.matrix_path,
                         "Matrix JSON file {\"dim\": m, \"rows\": [[...],...]}")
      ->required();
  invariants->add_option("--route", invariants_args.route, "Computation route")
      ->check(CLI::IsMember({"newton", "delta", "minors"}))
      ->default_str("newton");

  int pairings_order = 0;
  bool pairings_list = false;
  auto* pairings = app.add_subcommand(
      "pairings", "Count (and list) the delta-pairings of an index set");
  pairings->add_option("--order", pairings_order, "Number of indices (even)")
      ->required();
  pairings->add_flag("--list", pairings_list, "Print each pairing, 1-based");

  int check_dim = 0;
  bool check_force = false;
  auto* check_delta = app.add_subcommand(
      "check-delta", "Exhaustively check that the (m+1)-index delta vanishes");
  check_delta->add_option("--dim", check_dim, "Space dimension m")->required();
  check_delta->add_flag("--force", check_force, "Extend the dim cap from 3 to 4");

  std::string residual_matrix;
  auto* residual = app.add_subcommand(
      "residual", "Cayley-Hamilton residual of a matrix from a JSON file");
  residual->add_option("--matrix", residual_matrix, "Matrix JSON file")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (expand->parsed()) return run_expand(expand_args);
    if (verify->parsed()) return run_verify(verify_args);
    if (invariants->parsed()) return run_invariants(invariants_args);
    if (pairings->parsed()) return run_pairings(pairings_order, pairings_list);
    if (check_delta->parsed()) return run_check_delta(check_dim, check_force);
    if (residual->parsed()) return run_residual(residual_matrix);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

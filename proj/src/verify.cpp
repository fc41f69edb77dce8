#include "syzygy/verify.hpp"

#include <algorithm>
#include <cmath>

#include "syzygy/prng.hpp"

namespace syzygy {

namespace {

// Fixed tolerances for the m <= 3 full-enumeration cross-checks: single
// contractions of unit-scale entries stay within 1e-12-ish rounding, so
// these keep an order of magnitude of headroom.
constexpr double kBruteAbsoluteTol = 1e-11;
constexpr double kBruteRelativeTol = 1e-10;

// Odometer increment over index tuples with digits in [0, dim).
bool next_tuple(std::vector<int>& tuple, int dim) {
  for (std::size_t i = tuple.size(); i-- > 0;) {
    if (++tuple[i] < dim) return true;
    tuple[i] = 0;
  }
  return false;
}

double pow_int(double base, int exponent) {
  double out = 1.0;
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

}  // namespace

nlohmann::ordered_json report_to_json(const VerificationReport& report) {
  nlohmann::ordered_json out;
  out["check"] = report.check_name;
  out["dim"] = report.dimension;
  out["trials"] = report.trials;
  out["max_rel_residual"] = report.max_relative_residual;
  out["passed"] = report.passed;
  out["seed"] = std::to_string(report.seed);
  return out;
}

VerificationReport check_delta_vanishes(int dim, bool allow_dim4) {
  if (dim < 1) throw domain_error("dimension must be positive");
  const int cap = allow_dim4 ? 4 : kMaxBruteForceDimension;
  if (dim > cap) {
    throw resource_limit_error(
        "exhaustive delta check capped at dim <= " + std::to_string(cap) +
        " (requested dim = " + std::to_string(dim) + ")");
  }
  const int order = dim + 1;
  std::vector<int> upper(static_cast<std::size_t>(order), 0);
  std::vector<int> lower(static_cast<std::size_t>(order), 0);
  int components = 0;
  int max_component = 0;
  do {
    std::fill(lower.begin(), lower.end(), 0);
    do {
      const int value =
          generalized_delta_component(upper, lower, dim, order);
      max_component = std::max(max_component, std::abs(value));
      ++components;
    } while (next_tuple(lower, dim));
  } while (next_tuple(upper, dim));

  VerificationReport report;
  report.check_name = "delta-vanishes";
  report.dimension = dim;
  report.trials = components;
  report.max_relative_residual = static_cast<double>(max_component);
  report.passed = max_component == 0;  // exact integers, zero tolerance
  report.seed = 0;
  return report;
}

DenseMatrix brute_force_delta_contract(const DenseMatrix& a) {
  const int m = a.dim();
  if (m > kMaxBruteForceDimension) {
    throw resource_limit_error(
        "brute-force contraction capped at dim <= " +
        std::to_string(kMaxBruteForceDimension) + " (matrix dim = " +
        std::to_string(m) + ")");
  }
  const int order = m + 1;
  DenseMatrix out(m);
  std::vector<int> upper(static_cast<std::size_t>(order), 0);
  std::vector<int> lower(static_cast<std::size_t>(order), 0);
  std::vector<int> i_tuple(static_cast<std::size_t>(m), 0);
  std::vector<int> j_tuple(static_cast<std::size_t>(m), 0);
  for (int p = 0; p < m; ++p) {
    for (int q = 0; q < m; ++q) {
      double sum = 0.0;
      std::fill(i_tuple.begin(), i_tuple.end(), 0);
      do {
        std::fill(j_tuple.begin(), j_tuple.end(), 0);
        do {
          upper[0] = p;
          lower[0] = q;
          for (int t = 0; t < m; ++t) {
            upper[static_cast<std::size_t>(t) + 1] = j_tuple[static_cast<std::size_t>(t)];
            lower[static_cast<std::size_t>(t) + 1] = i_tuple[static_cast<std::size_t>(t)];
          }
          const int delta = generalized_delta_component(upper, lower, m, order);
          if (delta == 0) continue;
          double product = delta;
          for (int t = 0; t < m; ++t) {
            product *= a(i_tuple[static_cast<std::size_t>(t)],
                         j_tuple[static_cast<std::size_t>(t)]);
          }
          sum += product;
        } while (next_tuple(j_tuple, m));
      } while (next_tuple(i_tuple, m));
      out(p, q) = sum;
    }
  }
  return out;
}

double ch_residual(const DenseMatrix& a) {
  const int m = a.dim();
  const auto powers = matrix_powers(a, m);
  const InvariantVector sigma = newton_girard(power_sums(a));
  DenseMatrix residual = powers[static_cast<std::size_t>(m)];
  for (int k = 1; k <= m; ++k) {
    const double coeff =
        (k % 2 == 0 ? 1.0 : -1.0) * sigma.values[static_cast<std::size_t>(k) - 1];
    residual = residual + powers[static_cast<std::size_t>(m - k)].scaled(coeff);
  }
  return residual.frobenius_norm() / std::max(1.0, pow_int(a.frobenius_norm(), m));
}

DenseMatrix random_matrix(int dim, std::uint64_t seed,
                          std::uint64_t trial_index) {
  if (dim < 1) throw domain_error("matrix dimension must be positive");
  SplitMix64 rng = SplitMix64::for_stream(seed, trial_index);
  std::vector<double> entries(static_cast<std::size_t>(dim) *
                              static_cast<std::size_t>(dim));
  for (double& v : entries) v = rng.uniform_pm1();
  return DenseMatrix(dim, std::move(entries));
}

DenseMatrix evaluate_polynomial(const SymbolicPolynomial& poly,
                                const DenseMatrix& a) {
  int max_power = 0;
  int max_order = 0;
  for (const auto& [mono, coeff] : poly.terms()) {
    max_power = std::max(max_power, mono.power);
    if (!mono.cycles.empty()) max_order = std::max(max_order, mono.cycles.front());
  }
  const auto powers = matrix_powers(a, std::max(max_power, max_order));

  std::vector<double> invariant(static_cast<std::size_t>(max_order) + 1, 0.0);
  if (poly.basis() == Basis::power_sum) {
    for (int l = 1; l <= max_order; ++l) {
      invariant[static_cast<std::size_t>(l)] = powers[static_cast<std::size_t>(l)].trace();
    }
  } else {
    if (max_order > a.dim()) {
      throw domain_error("sigma order " + std::to_string(max_order) +
                         " undefined for a " + std::to_string(a.dim()) +
                         "-dimensional matrix");
    }
    const InvariantVector sigma = newton_girard(power_sums(a));
    for (int l = 1; l <= max_order; ++l) {
      invariant[static_cast<std::size_t>(l)] = sigma.values[static_cast<std::size_t>(l) - 1];
    }
  }

  DenseMatrix out(a.dim());
  for (const auto& [mono, coeff] : poly.terms()) {
    double value = coeff.get_d();
    for (int l : mono.cycles) value *= invariant[static_cast<std::size_t>(l)];
    out = out + powers[static_cast<std::size_t>(mono.power)].scaled(value);
  }
  return out;
}

VerificationReport verify_expansion_identity(int dim, int trials,
                                             std::uint64_t seed,
                                             const VerifyOptions& options) {
  if (trials < 1) throw domain_error("trial count must be >= 1");
  const SymbolicPolynomial poly =
      expand_delta_contraction(dim, options.threads, options.max_dimension);

  BigInt factorial = 1;
  for (int i = 2; i <= dim; ++i) factorial *= i;
  const double m_factorial = factorial.get_d();

  double max_residual = 0.0;
  bool brute_ok = true;
  for (int trial = 0; trial < trials; ++trial) {
    const DenseMatrix a = random_matrix(dim, seed, static_cast<std::uint64_t>(trial));
    const DenseMatrix evaluated = evaluate_polynomial(poly, a);

    const auto powers = matrix_powers(a, dim);
    const InvariantVector sigma = newton_girard(power_sums(a));
    DenseMatrix reference(dim);
    for (int k = 0; k <= dim; ++k) {
      const double sigma_k =
          k == 0 ? 1.0 : sigma.values[static_cast<std::size_t>(k) - 1];
      const double coeff =
          m_factorial * ((dim - k) % 2 == 0 ? 1.0 : -1.0) * sigma_k;
      reference = reference + powers[static_cast<std::size_t>(dim - k)].scaled(coeff);
    }

    const double scale = std::max(1.0, pow_int(a.frobenius_norm(), dim));
    max_residual =
        std::max(max_residual, (evaluated - reference).frobenius_norm() / scale);

    if (dim <= kMaxBruteForceDimension) {
      const DenseMatrix brute = brute_force_delta_contract(a);
      if (brute.max_abs() > kBruteAbsoluteTol) brute_ok = false;
      for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
          const double diff = std::fabs(evaluated(i, j) - brute(i, j));
          const double rel = diff / std::max(1.0, std::fabs(brute(i, j)));
          max_residual = std::max(max_residual, rel);
          if (rel > kBruteRelativeTol) brute_ok = false;
        }
      }
    }
  }

  VerificationReport report;
  report.check_name = "expansion-identity";
  report.dimension = dim;
  report.trials = trials;
  report.max_relative_residual = max_residual;
  report.passed = brute_ok && max_residual <= options.tolerance;
  report.seed = seed;
  return report;
}

VerificationReport verify_ch_residual(int dim, int trials, std::uint64_t seed,
                                      double tolerance) {
  if (dim < 1) throw domain_error("dimension must be positive");
  if (trials < 1) throw domain_error("trial count must be >= 1");
  double max_residual = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    const DenseMatrix a = random_matrix(dim, seed, static_cast<std::uint64_t>(trial));
    max_residual = std::max(max_residual, ch_residual(a));
  }
  VerificationReport report;
  report.check_name = "ch-residual";
  report.dimension = dim;
  report.trials = trials;
  report.max_relative_residual = max_residual;
  report.passed = max_residual <= tolerance;
  report.seed = seed;
  return report;
}

}  // namespace syzygy

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "syzygy/verify.hpp"

using namespace syzygy;

TEST_CASE("delta vanishes exhaustively for dim 1..3") {
  const std::vector<int> expected_components = {1, 64, 6561};
  for (int dim = 1; dim <= 3; ++dim) {
    const auto report = check_delta_vanishes(dim);
    CHECK(report.check_name == "delta-vanishes");
    CHECK(report.dimension == dim);
    CHECK(report.trials == expected_components[static_cast<std::size_t>(dim) - 1]);
    CHECK(report.max_relative_residual == 0.0);
    CHECK(report.passed);
  }
  CHECK_THROWS_WITH_AS(check_delta_vanishes(4),
                       doctest::Contains("capped at dim <= 3"),
                       resource_limit_error);
  CHECK_THROWS_AS(check_delta_vanishes(5, true), resource_limit_error);
}

TEST_CASE("delta vanishes for dim 4 behind the force flag") {
  const auto report = check_delta_vanishes(4, true);
  CHECK(report.trials == 1048576);  // 4^10
  CHECK(report.passed);
}

TEST_CASE("brute-force contraction yields the zero matrix in dimension m") {
  const DenseMatrix fixed(2, {1.0, 2.0, 3.0, 4.0});
  CHECK(brute_force_delta_contract(fixed).max_abs() <= 1e-12);

  CHECK(brute_force_delta_contract(DenseMatrix::identity(2)).max_abs() <= 1e-15);

  for (int trial = 0; trial < 5; ++trial) {
    const auto a = random_matrix(3, 2024, static_cast<std::uint64_t>(trial));
    CHECK(brute_force_delta_contract(a).max_abs() <= 1e-11);
  }

  CHECK_THROWS_AS(brute_force_delta_contract(DenseMatrix::identity(4)),
                  resource_limit_error);
}

TEST_CASE("ch_residual hand-checked 2x2 case") {
  // A = [[1,2],[3,4]]: sigma_1 = 5, sigma_2 = det = -2, so A^2 - 5A - 2I = 0.
  const DenseMatrix a(2, {1.0, 2.0, 3.0, 4.0});
  const DenseMatrix residual =
      a * a - a.scaled(5.0) - DenseMatrix::identity(2).scaled(2.0);
  CHECK(residual.max_abs() <= 1e-12);
  CHECK(ch_residual(a) <= 1e-12);
}

TEST_CASE("ch_residual vanishes for the identity in every dimension") {
  for (int m = 1; m <= 8; ++m) {
    CHECK(ch_residual(DenseMatrix::identity(m)) <= 1e-12);
  }
}

TEST_CASE("ch_residual stays below 1e-9 for random m = 8") {
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_matrix(8, 5150, static_cast<std::uint64_t>(trial));
    CHECK(ch_residual(a) <= 1e-9);
  }
}

TEST_CASE("random_matrix is reproducible and in range") {
  const auto a = random_matrix(4, 42, 7);
  const auto b = random_matrix(4, 42, 7);
  CHECK(a.entries() == b.entries());
  const auto c = random_matrix(4, 42, 8);
  CHECK(a.entries() != c.entries());
  const auto d = random_matrix(4, 43, 7);
  CHECK(a.entries() != d.entries());
  for (double v : a.entries()) {
    CHECK(v >= -1.0);
    CHECK(v < 1.0);
  }
  // Consecutive trial streams must not be shifted copies of each other.
  const auto t0 = random_matrix(2, 1, 0).entries();
  const auto t1 = random_matrix(2, 1, 1).entries();
  CHECK(std::vector<double>(t0.begin() + 1, t0.end()) !=
        std::vector<double>(t1.begin(), t1.end() - 1));
}

TEST_CASE("evaluate_polynomial matches a hand-built value") {
  // p(A) = 2 tr(A) A - tr(A^2) I on a diagonal matrix
  SymbolicPolynomial poly(Basis::power_sum);
  poly.add(TraceMonomial(1, {1}), Rational(2));
  poly.add(TraceMonomial(0, {2}), Rational(-1));
  const DenseMatrix diag(2, {2.0, 0.0, 0.0, 3.0});
  const auto value = evaluate_polynomial(poly, diag);
  CHECK(value(0, 0) == doctest::Approx(2 * 5.0 * 2.0 - 13.0));
  CHECK(value(1, 1) == doctest::Approx(2 * 5.0 * 3.0 - 13.0));
  CHECK(value(0, 1) == 0.0);

  // sigma basis: s2 I on diag(2,3) is det = 6
  SymbolicPolynomial sig(Basis::sigma);
  sig.add(TraceMonomial(0, {2}), Rational(1));
  CHECK(evaluate_polynomial(sig, diag)(0, 0) == doctest::Approx(6.0));

  SymbolicPolynomial high(Basis::sigma);
  high.add(TraceMonomial(0, {3}), Rational(1));
  CHECK_THROWS_AS(evaluate_polynomial(high, diag), domain_error);
}

TEST_CASE("symbolic evaluation equals the brute-force contraction (m <= 3)") {
  for (int m = 2; m <= 3; ++m) {
    const auto poly = expand_delta_contraction(m);
    for (int trial = 0; trial < 10; ++trial) {
      const auto a = random_matrix(m, 314, static_cast<std::uint64_t>(trial));
      const auto symbolic = evaluate_polynomial(poly, a);
      const auto brute = brute_force_delta_contract(a);
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
          const double rel = std::fabs(symbolic(i, j) - brute(i, j)) /
                             std::max(1.0, std::fabs(brute(i, j)));
          CHECK(rel <= 1e-10);
        }
      }
    }
  }
}

TEST_CASE("sigma-basis and power-basis evaluations agree numerically") {
  // The symbolic rewrite table and the numeric Newton-Girard recursion are
  // independent code paths; substituting a random matrix must give the same
  // value through either basis.
  for (int m = 1; m <= 6; ++m) {
    const auto poly = expand_delta_contraction(m);
    const auto sigma = to_sigma_basis(poly, m);
    for (int trial = 0; trial < 10; ++trial) {
      const auto a = random_matrix(m, 2718, static_cast<std::uint64_t>(trial));
      const auto via_p = evaluate_polynomial(poly, a);
      const auto via_sigma = evaluate_polynomial(sigma, a);
      const double scale = std::max(1.0, a.frobenius_norm());
      double scale_m = 1.0;
      for (int e = 0; e < m; ++e) scale_m *= scale;
      CHECK((via_p - via_sigma).frobenius_norm() / scale_m <= 1e-9);
    }
  }
}

TEST_CASE("expansion identity verifies across dimensions") {
  CHECK(verify_expansion_identity(1, 10, 0).passed);
  CHECK(verify_expansion_identity(2, 100, 42).passed);
  CHECK(verify_expansion_identity(3, 100, 42).passed);
  const auto seven = verify_expansion_identity(7, 10, 7);
  CHECK(seven.passed);
  CHECK(seven.check_name == "expansion-identity");
  CHECK(seven.trials == 10);
  CHECK(seven.seed == 7);
}

TEST_CASE("verification reports are reproducible and seed-sensitive") {
  const auto first = verify_expansion_identity(3, 25, 123);
  const auto second = verify_expansion_identity(3, 25, 123);
  CHECK(first.max_relative_residual == second.max_relative_residual);
  const auto other = verify_expansion_identity(3, 25, 124);
  CHECK(other.max_relative_residual != first.max_relative_residual);
}

TEST_CASE("verify_ch_residual reports over the trial stream") {
  const auto report = verify_ch_residual(5, 50, 99);
  CHECK(report.passed);
  CHECK(report.check_name == "ch-residual");
  CHECK(report.max_relative_residual <= 1e-9);
  CHECK(report.max_relative_residual > 0.0);

  // an impossible tolerance fails honestly
  const auto failing = verify_ch_residual(5, 50, 99, 0.0);
  CHECK(!failing.passed);
}

TEST_CASE("report JSON carries the full schema") {
  const auto report = verify_expansion_identity(2, 5, 11);
  const auto j = report_to_json(report);
  CHECK(j["check"] == "expansion-identity");
  CHECK(j["dim"] == 2);
  CHECK(j["trials"] == 5);
  CHECK(j["passed"] == true);
  CHECK(j["seed"] == "11");
  CHECK(j["max_rel_residual"].is_number());
}

TEST_CASE("verify argument validation") {
  CHECK_THROWS_AS(verify_expansion_identity(2, 0, 0), domain_error);
  CHECK_THROWS_AS(verify_expansion_identity(0, 1, 0), domain_error);
  CHECK_THROWS_AS(verify_ch_residual(3, 0, 0), domain_error);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "syzygy/combinatorics.hpp"
#include "syzygy/invariants.hpp"
#include "syzygy/prng.hpp"

using namespace syzygy;

namespace {

constexpr double kRelTol = 1e-9;

bool close_rel(double a, double b, double tol = kRelTol) {
  return std::fabs(a - b) <= tol * std::max({1.0, std::fabs(a), std::fabs(b)});
}

DenseMatrix random_unit_matrix(int dim, std::uint64_t stream) {
  SplitMix64 rng = SplitMix64::for_stream(99, stream);
  std::vector<double> entries(static_cast<std::size_t>(dim) *
                              static_cast<std::size_t>(dim));
  for (double& v : entries) v = rng.uniform_pm1();
  return DenseMatrix(dim, std::move(entries));
}

double binomial(int n, int k) {
  double out = 1.0;
  for (int i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
  return out;
}

}  // namespace

TEST_CASE("matrix construction validates shape and finiteness") {
  CHECK_THROWS_AS(DenseMatrix(0), domain_error);
  CHECK_THROWS_AS(DenseMatrix(2, {1.0, 2.0, 3.0}), domain_error);
  CHECK_THROWS_AS(DenseMatrix(1, {std::nan("")}), domain_error);
  const auto eye = DenseMatrix::identity(3);
  CHECK(eye.trace() == 3.0);
  CHECK(eye.frobenius_norm() == doctest::Approx(std::sqrt(3.0)));
}

TEST_CASE("power sums of simple matrices") {
  const auto eye = DenseMatrix::identity(3);
  CHECK(power_sums(eye).values == std::vector<double>{3.0, 3.0, 3.0});

  const DenseMatrix diag(2, {2.0, 0.0, 0.0, 3.0});
  CHECK(power_sums(diag).values == std::vector<double>{5.0, 13.0});

  const DenseMatrix nilpotent(2, {0.0, 1.0, 0.0, 0.0});
  CHECK(power_sums(nilpotent).values == std::vector<double>{0.0, 0.0});
}

TEST_CASE("newton_girard recovers elementary symmetric functions") {
  InvariantVector p;
  p.basis = Basis::power_sum;
  p.values = {5.0, 13.0};
  const auto sigma = newton_girard(p);
  CHECK(sigma.basis == Basis::sigma);
  // sigma_2 = (p1^2 - p2)/2 = (25 - 13)/2 = 6 = det diag(2,3)
  CHECK(sigma.values == std::vector<double>{5.0, 6.0});

  InvariantVector zero;
  zero.basis = Basis::power_sum;
  zero.values = {0.0, 0.0};
  CHECK(newton_girard(zero).values == std::vector<double>{0.0, 0.0});

  for (int m = 2; m <= 6; ++m) {
    const auto sig = newton_girard(power_sums(DenseMatrix::identity(m)));
    for (int k = 1; k <= m; ++k) {
      CHECK(sig.values[static_cast<std::size_t>(k) - 1] ==
            doctest::Approx(binomial(m, k)).epsilon(1e-12));
    }
  }

  InvariantVector wrong;
  wrong.basis = Basis::sigma;
  wrong.values = {1.0};
  CHECK_THROWS_AS(newton_girard(wrong), domain_error);
}

TEST_CASE("sigma_via_delta fundamentals") {
  const DenseMatrix diag(2, {2.0, 0.0, 0.0, 3.0});
  CHECK(sigma_via_delta(diag, 1) == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(sigma_via_delta(diag, 2) == doctest::Approx(6.0).epsilon(1e-12));

  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_unit_matrix(4, static_cast<std::uint64_t>(trial));
    CHECK(close_rel(sigma_via_delta(a, 1), a.trace()));
    CHECK(close_rel(sigma_via_delta(a, 2), principal_minors_sum(a, 2), 1e-10));
  }

  CHECK_THROWS_AS(sigma_via_delta(diag, 0), domain_error);
  CHECK_THROWS_AS(sigma_via_delta(diag, 3), domain_error);
  CHECK_THROWS_WITH_AS(sigma_via_delta(random_unit_matrix(7, 0), 2),
                       doctest::Contains("capped at dim <= 6"),
                       resource_limit_error);
}

TEST_CASE("principal minors sum: determinant and binomial cases") {
  const DenseMatrix diag(2, {2.0, 0.0, 0.0, 3.0});
  CHECK(principal_minors_sum(diag, 2) == doctest::Approx(6.0));

  for (int m = 2; m <= 8; ++m) {
    const auto eye = DenseMatrix::identity(m);
    for (int k = 1; k <= m; ++k) {
      CHECK(principal_minors_sum(eye, k) == doctest::Approx(binomial(m, k)));
    }
  }

  // k = m is a single subset: the full determinant (checked against LU; for
  // m > 6 the minor itself is computed by LU, for m <= 6 by permutations)
  for (int m = 2; m <= 8; ++m) {
    const auto a = random_unit_matrix(m, static_cast<std::uint64_t>(m));
    CHECK(close_rel(principal_minors_sum(a, m), determinant_lu(a)));
  }

  CHECK_THROWS_AS(principal_minors_sum(diag, 0), domain_error);
  CHECK_THROWS_AS(principal_minors_sum(diag, 3), domain_error);
}

TEST_CASE("three sigma routes agree on random matrices (m <= 6)") {
  for (int m = 2; m <= 6; ++m) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto a = random_unit_matrix(m, static_cast<std::uint64_t>(10 * m + trial));
      const auto ng = newton_girard(power_sums(a));
      for (int k = 1; k <= m; ++k) {
        const double delta_route = sigma_via_delta(a, k);
        const double minors_route = principal_minors_sum(a, k);
        const double ng_route = ng.values[static_cast<std::size_t>(k) - 1];
        CHECK(close_rel(delta_route, minors_route));
        CHECK(close_rel(delta_route, ng_route));
        CHECK(close_rel(minors_route, ng_route));
      }
    }
  }
}

TEST_CASE("sigma_m equals the LU determinant up to m = 10") {
  for (int m = 2; m <= 10; ++m) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto a = random_unit_matrix(m, static_cast<std::uint64_t>(100 * m + trial));
      const auto sigma = newton_girard(power_sums(a));
      CHECK(close_rel(sigma.values.back(), determinant_lu(a)));
    }
  }
}

TEST_CASE("generalized delta components: identity, transposition, pigeonhole") {
  const std::vector<int> up01 = {0, 1};
  const std::vector<int> lo01 = {0, 1};
  const std::vector<int> lo10 = {1, 0};
  CHECK(generalized_delta_component(up01, lo01, 2) == 1);
  CHECK(generalized_delta_component(up01, lo10, 2) == -1);
  const std::vector<int> repeat = {0, 1, 0};
  CHECK(generalized_delta_component(repeat, repeat, 2) == 0);
}

TEST_CASE("generalized delta is antisymmetric in upper and lower indices") {
  for (int dim = 1; dim <= 3; ++dim) {
    for (int k = 2; k <= 3; ++k) {
      std::vector<int> upper(static_cast<std::size_t>(k), 0);
      bool more_u = true;
      while (more_u) {
        std::vector<int> lower(static_cast<std::size_t>(k), 0);
        bool more_l = true;
        while (more_l) {
          const int base = generalized_delta_component(upper, lower, dim);
          auto u2 = upper;
          std::swap(u2[0], u2[1]);
          CHECK(generalized_delta_component(u2, lower, dim) == -base);
          auto l2 = lower;
          std::swap(l2[0], l2[1]);
          CHECK(generalized_delta_component(upper, l2, dim) == -base);

          more_l = false;
          for (std::size_t i = lower.size(); i-- > 0;) {
            if (++lower[i] < dim) {
              more_l = true;
              break;
            }
            lower[i] = 0;
          }
        }
        more_u = false;
        for (std::size_t i = upper.size(); i-- > 0;) {
          if (++upper[i] < dim) {
            more_u = true;
            break;
          }
          upper[i] = 0;
        }
      }
    }
  }
}

TEST_CASE("order-m delta equals the product of two Levi-Civita symbols") {
  for (int dim = 1; dim <= 3; ++dim) {
    std::vector<int> upper(static_cast<std::size_t>(dim), 0);
    bool more_u = true;
    while (more_u) {
      std::vector<int> lower(static_cast<std::size_t>(dim), 0);
      bool more_l = true;
      while (more_l) {
        CHECK(generalized_delta_component(upper, lower, dim) ==
              levi_civita(upper, dim) * levi_civita(lower, dim));
        more_l = false;
        for (std::size_t i = lower.size(); i-- > 0;) {
          if (++lower[i] < dim) {
            more_l = true;
            break;
          }
          lower[i] = 0;
        }
      }
      more_u = false;
      for (std::size_t i = upper.size(); i-- > 0;) {
        if (++upper[i] < dim) {
          more_u = true;
          break;
        }
        upper[i] = 0;
      }
    }
  }
}

TEST_CASE("generalized delta error contract") {
  const std::vector<int> ok = {0, 1};
  const std::vector<int> bad = {0, 5};
  const std::vector<int> shorter = {0};
  CHECK_THROWS_AS(generalized_delta_component(ok, bad, 2), domain_error);
  CHECK_THROWS_AS(generalized_delta_component(bad, ok, 2), domain_error);
  CHECK_THROWS_AS(generalized_delta_component(ok, shorter, 2), domain_error);
  const std::vector<int> nine(9, 0);
  CHECK_THROWS_WITH_AS(generalized_delta_component(nine, nine, 1),
                       doctest::Contains("capped at order <= 8"),
                       resource_limit_error);
}

TEST_CASE("matrix JSON round-trip and validation") {
  const DenseMatrix diag(2, {2.0, 0.0, 0.0, 3.0});
  const auto j = matrix_to_json(diag);
  CHECK(j["dim"] == 2);
  const auto back = matrix_from_json(j);
  CHECK(back.dim() == 2);
  CHECK(back.entries() == diag.entries());

  CHECK_THROWS_AS(matrix_from_json(nlohmann::json::parse("{}")), domain_error);
  CHECK_THROWS_AS(matrix_from_json(nlohmann::json::parse(R"({"dim":2,"rows":[[1,2],[3]]})")),
                  domain_error);
  CHECK_THROWS_AS(matrix_from_json(nlohmann::json::parse(R"({"dim":0,"rows":[]})")),
                  domain_error);
  CHECK_THROWS_AS(matrix_from_json(nlohmann::json::parse(R"({"dim":1,"rows":[["x"]]})")),
                  domain_error);
}

TEST_CASE("invariant vector JSON shape") {
  InvariantVector v;
  v.basis = Basis::sigma;
  v.values = {5.0, 6.0};
  const auto j = invariants_to_json(v);
  CHECK(j["basis"] == "sigma");
  CHECK(j["dim"] == 2);
  CHECK(j["values"] == nlohmann::ordered_json::array({5.0, 6.0}));
}

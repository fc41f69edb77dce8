#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"
#include "syzygy/invariants.hpp"
#include "syzygy/symbolic.hpp"

namespace syzygy {

/// Default cap for the full-enumeration oracles (m^{2(m+1)} components).
inline constexpr int kMaxBruteForceDimension = 3;

struct VerificationReport {
  std::string check_name;
  int dimension = 0;
  int trials = 0;
  double max_relative_residual = 0.0;
  bool passed = false;
  std::uint64_t seed = 0;
};

/// {"check", "dim", "trials", "max_rel_residual", "passed", "seed"} with the
/// seed serialized as a decimal string.
nlohmann::ordered_json report_to_json(const VerificationReport& report);

/// Exhaustively evaluates every component of the (dim+1)-index generalized
/// delta over indices in [0, dim) — dim^{2(dim+1)} exact integer determinants
/// — and checks each is exactly zero. `allow_dim4` extends the default dim<=3
/// cap to 4.
VerificationReport check_delta_vanishes(int dim, bool allow_dim4 = false);

/// Full-index-enumeration oracle: contracts the (dim+1)-index delta (free
/// pair in the first slots) against dim copies of A by summing the exact
/// delta component times the product of A entries over every contracted index
/// tuple. Identically zero in exact arithmetic; numerically ~1e-12 for
/// unit-scale entries. Capped at dim <= 3.
DenseMatrix brute_force_delta_contract(const DenseMatrix& a);

/// || sum_k (-1)^k sigma_k A^{m-k} ||_F / max(1, ||A||_F^m), sigma via
/// Newton-Girard from power sums.
double ch_residual(const DenseMatrix& a);

/// The documented trial matrix: dim x dim with i.i.d. entries uniform on
/// [-1, 1), drawn row-major from SplitMix64::for_stream(seed, trial_index).
DenseMatrix random_matrix(int dim, std::uint64_t seed, std::uint64_t trial_index);

/// Numeric substitution: coefficients to double, cycles to tr(A^l) (power-sum
/// basis) or sigma_l (sigma basis, orders <= dim(A)), powers by iterated
/// multiplication.
DenseMatrix evaluate_polynomial(const SymbolicPolynomial& poly,
                                const DenseMatrix& a);

struct VerifyOptions {
  double tolerance = 1e-9;
  int threads = 1;
  int max_dimension = kMaxExpandDimension;
};

/// Draws `trials` seeded random matrices and checks that the numeric value of
/// expand_delta_contraction(dim) equals m! sum_k (-1)^{m-k} sigma_k A^{m-k};
/// the reported residual is ||E - Ref||_F / max(1, ||A||_F^m). For dim <= 3
/// the brute-force contraction is also cross-checked (entrywise <= 1e-11
/// absolute against zero, <= 1e-10 relative against the symbolic value) and
/// folded into the residual.
VerificationReport verify_expansion_identity(int dim, int trials,
                                             std::uint64_t seed,
                                             const VerifyOptions& options = {});

/// ch_residual over the same seeded trial stream, reported against
/// `tolerance`.
VerificationReport verify_ch_residual(int dim, int trials, std::uint64_t seed,
                                      double tolerance = 1e-9);

}  // namespace syzygy

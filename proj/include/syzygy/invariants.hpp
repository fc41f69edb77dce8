#pragma once

#include <span>
#include <vector>

#include "json.hpp"
#include "syzygy/basis.hpp"
#include "syzygy/errors.hpp"

namespace syzygy {

/// Default cap on the dimension for the permutation-sum sigma route.
inline constexpr int kMaxDeltaRouteDimension = 6;
/// Default cap on the order of an exact generalized-delta component.
inline constexpr int kMaxGeneralizedDeltaOrder = 8;

/// Square matrix of doubles, row-major. Entries must be finite.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(int dim);  // zero-filled
  DenseMatrix(int dim, std::vector<double> entries);

  static DenseMatrix identity(int dim);

  int dim() const { return dim_; }
  double operator()(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) +
                    static_cast<std::size_t>(j)];
  }
  double& operator()(int i, int j) {
    return entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) +
                    static_cast<std::size_t>(j)];
  }
  const std::vector<double>& entries() const { return entries_; }

  DenseMatrix operator*(const DenseMatrix& rhs) const;
  DenseMatrix operator+(const DenseMatrix& rhs) const;
  DenseMatrix operator-(const DenseMatrix& rhs) const;
  DenseMatrix scaled(double factor) const;

  double trace() const;
  double frobenius_norm() const;
  double max_abs() const;

 private:
  int dim_ = 0;
  std::vector<double> entries_;
};

/// [I, A, A^2, ..., A^max_exponent] by iterated multiplication.
std::vector<DenseMatrix> matrix_powers(const DenseMatrix& a, int max_exponent);

/// Determinant via LU with partial pivoting.
double determinant_lu(const DenseMatrix& a);

/// p_k = tr(A^k) or sigma_k for k = 1..dim; values[k-1] holds order k.
struct InvariantVector {
  Basis basis = Basis::power_sum;
  std::vector<double> values;

  int dim() const { return static_cast<int>(values.size()); }
  bool operator==(const InvariantVector&) const = default;
};

/// Power sums tr(A^k), k = 1..dim, by repeated multiplication.
InvariantVector power_sums(const DenseMatrix& a);

/// sigma_k from power sums by the recursion
/// k sigma_k = sum_{i=1..k} (-1)^{i-1} sigma_{k-i} p_i, sigma_0 = 1.
InvariantVector newton_girard(const InvariantVector& psums);

/// sigma_k as (1/k!) times the generalized-delta contraction with k copies of
/// A, evaluated as a signed sum over S_k with each permutation contributing
/// the product of tr(A^l) over its cycles. Capped at dim <= max_dimension.
double sigma_via_delta(const DenseMatrix& a, int k,
                       int max_dimension = kMaxDeltaRouteDimension);

/// Brute-force sigma_k: the sum of all C(dim, k) principal k x k minors
/// (determinants by permutation expansion for k <= 6, LU beyond).
double principal_minors_sum(const DenseMatrix& a, int k);

/// Exact component of the order-k generalized Kronecker delta: the
/// determinant of the k x k matrix of ordinary deltas, entry (r, c) =
/// [upper[c] == lower[r]], by integer permutation expansion. Equals the
/// product of two Levi-Civita symbols when k == dim.
int generalized_delta_component(std::span<const int> upper,
                                std::span<const int> lower, int dim,
                                int max_order = kMaxGeneralizedDeltaOrder);

/// Matrix JSON schema: {"dim": m, "rows": [[...], ...]}, row-major doubles.
DenseMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::ordered_json matrix_to_json(const DenseMatrix& a);

/// {"basis": "p"|"sigma", "dim": m, "values": [...]}.
nlohmann::ordered_json invariants_to_json(const InvariantVector& v);

}  // namespace syzygy

#include "syzygy/invariants.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>

#include "syzygy/combinatorics.hpp"

namespace syzygy {

namespace {

void require_finite(const std::vector<double>& entries) {
  for (double v : entries) {
    if (!std::isfinite(v)) {
      throw domain_error("matrix entries must be finite");
    }
  }
}

}  // namespace

DenseMatrix::DenseMatrix(int dim) : dim_(dim) {
  if (dim < 1) throw domain_error("matrix dimension must be positive");
  entries_.assign(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim),
                  0.0);
}

DenseMatrix::DenseMatrix(int dim, std::vector<double> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim < 1) throw domain_error("matrix dimension must be positive");
  if (entries_.size() !=
      static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim)) {
    throw domain_error("matrix entry count does not match dimension");
  }
  require_finite(entries_);
}

DenseMatrix DenseMatrix::identity(int dim) {
  DenseMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& rhs) const {
  if (dim_ != rhs.dim_) throw domain_error("matrix dimensions differ");
  DenseMatrix out(dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int k = 0; k < dim_; ++k) {
      const double aik = (*this)(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < dim_; ++j) {
        out(i, j) += aik * rhs(k, j);
      }
    }
  }
  return out;
}

DenseMatrix DenseMatrix::operator+(const DenseMatrix& rhs) const {
  if (dim_ != rhs.dim_) throw domain_error("matrix dimensions differ");
  DenseMatrix out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    out.entries_[i] += rhs.entries_[i];
  }
  return out;
}

DenseMatrix DenseMatrix::operator-(const DenseMatrix& rhs) const {
  if (dim_ != rhs.dim_) throw domain_error("matrix dimensions differ");
  DenseMatrix out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    out.entries_[i] -= rhs.entries_[i];
  }
  return out;
}

DenseMatrix DenseMatrix::scaled(double factor) const {
  DenseMatrix out = *this;
  for (double& v : out.entries_) v *= factor;
  return out;
}

double DenseMatrix::trace() const {
  double t = 0.0;
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double DenseMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double v : entries_) s += v * v;
  return std::sqrt(s);
}

double DenseMatrix::max_abs() const {
  double m = 0.0;
  for (double v : entries_) m = std::max(m, std::fabs(v));
  return m;
}

std::vector<DenseMatrix> matrix_powers(const DenseMatrix& a, int max_exponent) {
  if (max_exponent < 0) throw domain_error("max exponent must be >= 0");
  std::vector<DenseMatrix> powers;
  powers.reserve(static_cast<std::size_t>(max_exponent) + 1);
  powers.push_back(DenseMatrix::identity(a.dim()));
  for (int e = 1; e <= max_exponent; ++e) {
    powers.push_back(powers.back() * a);
  }
  return powers;
}

double determinant_lu(const DenseMatrix& a) {
  const int n = a.dim();
  DenseMatrix lu = a;
  double det = 1.0;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::fabs(lu(r, col)) > std::fabs(lu(pivot, col))) pivot = r;
    }
    if (lu(pivot, col) == 0.0) return 0.0;
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(lu(pivot, j), lu(col, j));
      det = -det;
    }
    det *= lu(col, col);
    for (int r = col + 1; r < n; ++r) {
      const double f = lu(r, col) / lu(col, col);
      for (int j = col; j < n; ++j) lu(r, j) -= f * lu(col, j);
    }
  }
  return det;
}

InvariantVector power_sums(const DenseMatrix& a) {
  const int m = a.dim();
  InvariantVector out;
  out.basis = Basis::power_sum;
  out.values.reserve(static_cast<std::size_t>(m));
  DenseMatrix power = a;
  for (int k = 1; k <= m; ++k) {
    out.values.push_back(power.trace());
    if (k < m) power = power * a;
  }
  return out;
}

InvariantVector newton_girard(const InvariantVector& psums) {
  if (psums.basis != Basis::power_sum) {
    throw domain_error("newton_girard expects a power-sum vector");
  }
  const int m = psums.dim();
  std::vector<double> sigma(static_cast<std::size_t>(m) + 1, 0.0);
  sigma[0] = 1.0;
  for (int k = 1; k <= m; ++k) {
    double s = 0.0;
    for (int i = 1; i <= k; ++i) {
      const double term = sigma[static_cast<std::size_t>(k - i)] *
                          psums.values[static_cast<std::size_t>(i) - 1];
      s += (i % 2 == 1) ? term : -term;
    }
    sigma[static_cast<std::size_t>(k)] = s / k;
  }
  InvariantVector out;
  out.basis = Basis::sigma;
  out.values.assign(sigma.begin() + 1, sigma.end());
  return out;
}

double sigma_via_delta(const DenseMatrix& a, int k, int max_dimension) {
  const int m = a.dim();
  if (m > max_dimension) {
    throw resource_limit_error(
        "delta-route invariants capped at dim <= " +
        std::to_string(max_dimension) + " (matrix dim = " + std::to_string(m) +
        ")");
  }
  if (k < 1 || k > m) {
    throw domain_error("invariant order k = " + std::to_string(k) +
                       " out of range [1, " + std::to_string(m) + "]");
  }
  // tr(A^l) for l <= k; each permutation of S_k then contributes
  // sign * prod over its cycles of tr(A^length).
  std::vector<double> traces(static_cast<std::size_t>(k) + 1, 0.0);
  {
    DenseMatrix power = a;
    for (int l = 1; l <= k; ++l) {
      traces[static_cast<std::size_t>(l)] = power.trace();
      if (l < k) power = power * a;
    }
  }
  double sum = 0.0;
  double factorial = 1.0;
  for (int i = 2; i <= k; ++i) factorial *= i;
  for (PermutationStream stream(k); stream; ++stream) {
    const auto images = stream.images();
    std::uint32_t seen = 0;
    double term = 1.0;
    int cycles = 0;
    for (int i = 0; i < k; ++i) {
      if (seen & (1u << i)) continue;
      ++cycles;
      int length = 0;
      int j = i;
      do {
        seen |= 1u << j;
        j = images[static_cast<std::size_t>(j)];
        ++length;
      } while (j != i);
      term *= traces[static_cast<std::size_t>(length)];
    }
    sum += ((k - cycles) % 2 == 0) ? term : -term;
  }
  return sum / factorial;
}

namespace {

double minor_determinant(const DenseMatrix& a, const std::vector<int>& rows) {
  const int k = static_cast<int>(rows.size());
  if (k > 6) {
    DenseMatrix sub(k);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        sub(i, j) = a(rows[static_cast<std::size_t>(i)],
                      rows[static_cast<std::size_t>(j)]);
      }
    }
    return determinant_lu(sub);
  }
  double det = 0.0;
  for (PermutationStream stream(k); stream; ++stream) {
    const auto images = stream.images();
    double term = stream.sign();
    for (int i = 0; i < k; ++i) {
      term *= a(rows[static_cast<std::size_t>(i)],
                rows[static_cast<std::size_t>(images[static_cast<std::size_t>(i)])]);
    }
    det += term;
  }
  return det;
}

}  // namespace

double principal_minors_sum(const DenseMatrix& a, int k) {
  const int m = a.dim();
  if (k < 1 || k > m) {
    throw domain_error("invariant order k = " + std::to_string(k) +
                       " out of range [1, " + std::to_string(m) + "]");
  }
  // Enumerate k-subsets of {0..m-1} in lexicographic order.
  std::vector<int> subset(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) subset[static_cast<std::size_t>(i)] = i;
  double sum = 0.0;
  while (true) {
    sum += minor_determinant(a, subset);
    int i = k - 1;
    while (i >= 0 && subset[static_cast<std::size_t>(i)] == m - k + i) --i;
    if (i < 0) break;
    ++subset[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return sum;
}

namespace {

// Signed count of row->column assignments: expanding the 0/1 delta matrix
// along rows, the parity increment for choosing column c is the number of
// already-used columns above c.
std::int64_t delta_det_rec(int k, int row, std::uint32_t used,
                           std::span<const int> upper,
                           std::span<const int> lower) {
  if (row == k) return 1;
  std::int64_t total = 0;
  for (int c = 0; c < k; ++c) {
    if (used & (1u << c)) continue;
    if (upper[static_cast<std::size_t>(c)] != lower[static_cast<std::size_t>(row)]) {
      continue;
    }
    const int inversions = std::popcount(used >> (c + 1));
    const std::int64_t sub =
        delta_det_rec(k, row + 1, used | (1u << c), upper, lower);
    total += (inversions % 2 == 0) ? sub : -sub;
  }
  return total;
}

}  // namespace

int generalized_delta_component(std::span<const int> upper,
                                std::span<const int> lower, int dim,
                                int max_order) {
  if (upper.size() != lower.size()) {
    throw domain_error("generalized delta needs equally many upper and lower indices");
  }
  const int k = static_cast<int>(upper.size());
  if (k < 1) throw domain_error("generalized delta needs at least one index pair");
  if (k > max_order) {
    throw resource_limit_error(
        "generalized delta capped at order <= " + std::to_string(max_order) +
        " (requested order " + std::to_string(k) + ")");
  }
  if (dim < 1) throw domain_error("dimension must be positive");
  for (int v : upper) {
    if (v < 0 || v >= dim) {
      throw domain_error("upper index " + std::to_string(v) +
                         " out of range [0, " + std::to_string(dim) + ")");
    }
  }
  for (int v : lower) {
    if (v < 0 || v >= dim) {
      throw domain_error("lower index " + std::to_string(v) +
                         " out of range [0, " + std::to_string(dim) + ")");
    }
  }
  return static_cast<int>(delta_det_rec(k, 0, 0, upper, lower));
}

DenseMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("rows")) {
    throw domain_error("matrix JSON must be an object with \"dim\" and \"rows\"");
  }
  if (!j["dim"].is_number_integer()) {
    throw domain_error("matrix JSON \"dim\" must be an integer");
  }
  const int dim = j["dim"].get<int>();
  if (dim < 1) throw domain_error("matrix JSON \"dim\" must be positive");
  const auto& rows = j["rows"];
  if (!rows.is_array() || static_cast<int>(rows.size()) != dim) {
    throw domain_error("matrix JSON \"rows\" must hold exactly dim rows");
  }
  std::vector<double> entries;
  entries.reserve(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim));
  for (const auto& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != dim) {
      throw domain_error("matrix JSON rows must each hold exactly dim numbers");
    }
    for (const auto& v : row) {
      if (!v.is_number()) throw domain_error("matrix JSON entries must be numbers");
      entries.push_back(v.get<double>());
    }
  }
  return DenseMatrix(dim, std::move(entries));
}

nlohmann::ordered_json matrix_to_json(const DenseMatrix& a) {
  nlohmann::ordered_json out;
  out["dim"] = a.dim();
  auto& rows = out["rows"] = nlohmann::ordered_json::array();
  for (int i = 0; i < a.dim(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int j = 0; j < a.dim(); ++j) row.push_back(a(i, j));
    rows.push_back(std::move(row));
  }
  return out;
}

nlohmann::ordered_json invariants_to_json(const InvariantVector& v) {
  nlohmann::ordered_json out;
  out["basis"] = basis_tag(v.basis);
  out["dim"] = v.dim();
  out["values"] = v.values;
  return out;
}

}  // namespace syzygy

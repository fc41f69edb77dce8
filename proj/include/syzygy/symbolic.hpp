#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "syzygy/basis.hpp"
#include "syzygy/errors.hpp"

namespace syzygy {

/// Exact arithmetic for symbolic coefficients. Collected expansion
/// coefficients are integers (up to (m+1)! in magnitude); rationals appear
/// once Newton-Girard divisions enter.
using BigInt = mpz_class;
using Rational = mpq_class;

/// Default cap for the (m+1)! expansion ((10+1)! ~ 4e7 permutations).
inline constexpr int kMaxExpandDimension = 10;

/// One invariant factor: p_k = tr(A^k) or sigma_k, k >= 1.
struct InvariantSymbol {
  Basis kind = Basis::power_sum;
  int order = 1;
};

/// Canonical term "(coefficient) * prod_i f(cycles[i]) * A^power" where f is
/// tr(A^k) in the power-sum basis and sigma_k in the sigma basis. power == 0
/// denotes the identity factor. The canonical key is (power, cycles sorted
/// descending); the total degree power + sum(cycles) is invariant across one
/// expansion of dimension m (every monomial has degree exactly m).
struct TraceMonomial {
  int power = 0;
  std::vector<int> cycles;  // sorted descending

  TraceMonomial() = default;
  TraceMonomial(int power_in, std::vector<int> cycles_in);

  int degree() const;

  /// Map order doubles as render order: descending power, then
  /// lexicographic on the descending-sorted cycles.
  friend bool operator<(const TraceMonomial& a, const TraceMonomial& b) {
    if (a.power != b.power) return a.power > b.power;
    return a.cycles < b.cycles;
  }
  bool operator==(const TraceMonomial&) const = default;
};

/// Exact-coefficient multiset of trace monomials with a basis tag. Zero
/// coefficients are never stored.
class SymbolicPolynomial {
 public:
  explicit SymbolicPolynomial(Basis basis) : basis_(basis) {}

  Basis basis() const { return basis_; }
  const std::map<TraceMonomial, Rational>& terms() const { return terms_; }

  void add(const TraceMonomial& monomial, const Rational& coefficient);
  /// Zero if the monomial is absent.
  Rational coefficient(const TraceMonomial& monomial) const;
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  SymbolicPolynomial& operator*=(const Rational& scale);

  bool operator==(const SymbolicPolynomial& other) const;

 private:
  Basis basis_;
  std::map<TraceMonomial, Rational> terms_;
};

/// Expands the (m+1)-index generalized Kronecker delta (free pair in the
/// first upper/lower slots) contracted against m copies of A into collected
/// trace-monomial form, power-sum basis. The sum runs over all (m+1)!
/// lower-index images with permutation-parity signs: the cycle through the
/// free slot of length c contributes the open factor A^{c-1}, every other
/// cycle of length l contributes tr(A^l). The collected result equals
/// m! * sum_k (-1)^(m-k) sigma_k A^{m-k}.
///
/// `threads` <= 0 selects the hardware concurrency; the collected result is
/// independent of the partitioning.
SymbolicPolynomial expand_delta_contraction(int dim, int threads = 1,
                                            int max_dimension = kMaxExpandDimension);

/// Rewrites a power-sum-basis polynomial into the sigma basis by substituting
/// the Newton-Girard expression of each p_k (k <= dim) and expanding. Exact;
/// trace orders above dim are a domain_error (sigma_k is undefined there).
SymbolicPolynomial to_sigma_basis(const SymbolicPolynomial& poly, int dim);

/// Inverse rewrite: sigma basis back to power sums (Newton-Girard solved for
/// sigma_k, which introduces the 1/k! rationals). Exact.
SymbolicPolynomial to_power_sum_basis(const SymbolicPolynomial& poly, int dim);

/// Divides by dim! and by the sign of the A^dim coefficient, turning a
/// dimension-dim expansion into the monic form
/// A^m - s1 A^{m-1} + ... + (-1)^m s_m I. A missing A^dim term signals a
/// broken expansion and raises inconsistency_error.
SymbolicPolynomial normalize_ch(const SymbolicPolynomial& poly, int dim);

enum class RenderFormat { text, latex, json };

struct RenderOptions {
  RenderFormat format = RenderFormat::text;
  /// Render the top-order sigma (order == dim) as det.
  bool det_alias = false;
  int dim = 0;
};

/// Deterministic rendering; terms sorted by descending power then canonical
/// trace key. The zero polynomial renders as "0".
std::string render(const SymbolicPolynomial& poly, RenderFormat format);
std::string render(const SymbolicPolynomial& poly, const RenderOptions& options);

/// {"basis": "p"|"sigma", "terms": [{"coeff_num": "...", "coeff_den": "...",
///  "power": int, "cycles": [int,...]}]} with coefficients as decimal strings.
nlohmann::ordered_json to_json(const SymbolicPolynomial& poly);

}  // namespace syzygy

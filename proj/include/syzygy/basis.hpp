#pragma once

namespace syzygy {

/// Which family of invariants a polynomial's trace entries (or a numeric
/// invariant vector) refer to: power sums p_k = tr(A^k) or elementary
/// symmetric functions sigma_k.
enum class Basis { power_sum, sigma };

inline const char* basis_tag(Basis b) {
  return b == Basis::power_sum ? "p" : "sigma";
}

}  // namespace syzygy

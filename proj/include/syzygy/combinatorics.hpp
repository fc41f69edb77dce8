#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "syzygy/errors.hpp"

namespace syzygy {

/// Default cap on n for n! enumerations (11! ~ 4e7 is the desk-scale frontier).
inline constexpr int kMaxStreamElements = 11;
/// Default cap on the pairing order 2p ((2p-1)!! enumeration).
inline constexpr int kMaxPairingIndices = 12;

/// A bijection on {0..n-1}: position i maps to images[i].
struct Permutation {
  std::vector<int> images;

  Permutation() = default;
  /// Validates that `images` is a bijection; throws domain_error otherwise.
  explicit Permutation(std::vector<int> images_in);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(images.size()); }
  int operator()(int i) const { return images[static_cast<std::size_t>(i)]; }

  /// (*this) after `inner`: result(i) = (*this)(inner(i)). Sizes must match.
  Permutation compose(const Permutation& inner) const;

  /// (-1)^(n - number of cycles).
  int sign() const;

  bool operator==(const Permutation&) const = default;
};

/// Cycles partition {0..n-1}; fixed points appear as length-1 cycles; each
/// cycle starts at its minimum element and cycles are sorted by first element.
std::vector<std::vector<int>> cycle_decomposition(const Permutation& p);

/// Levi-Civita symbol component in `dim` dimensions for 0-based indices.
/// Returns 0 on any repeated index (forced whenever indices.size() > dim),
/// otherwise the parity of the permutation sorting the indices. Defined only
/// for indices.size() == dim; fewer distinct indices than dim is rejected
/// with undefined_symbol_error, out-of-range indices with domain_error.
int levi_civita(std::span<const int> indices, int dim);

/// Lexicographic enumeration of S_n with signs. A stream can be restricted to
/// a half-open rank range [begin, end) of the lexicographic order, so callers
/// may split the full range into disjoint slices and consume them in
/// parallel; the slices together visit each permutation exactly once.
class PermutationStream {
 public:
  explicit PermutationStream(int n, int max_elements = kMaxStreamElements);
  PermutationStream(int n, std::uint64_t begin_rank, std::uint64_t end_rank,
                    int max_elements = kMaxStreamElements);

  /// True while a current permutation is available.
  explicit operator bool() const { return rank_ < end_rank_; }

  /// Step to the next permutation in lexicographic order.
  PermutationStream& operator++();

  std::span<const int> images() const { return images_; }
  int sign() const;
  Permutation current() const { return Permutation(images_); }
  std::uint64_t rank() const { return rank_; }

  /// n! (requires 0 <= n <= 20 so the count fits in 64 bits).
  static std::uint64_t count(int n);

 private:
  int n_ = 0;
  std::uint64_t rank_ = 0;
  std::uint64_t end_rank_ = 0;
  std::vector<int> images_;
};

/// The full S_n stream; each advance yields a (permutation, sign) pair
/// through images()/sign()/current().
PermutationStream permutations_with_sign(int n,
                                         int max_elements = kMaxStreamElements);

/// A perfect matching on {0..2p-1}. Each pair is stored (low, high) and the
/// pairs are sorted by first element.
struct Pairing {
  std::vector<std::pair<int, int>> pairs;
  bool operator==(const Pairing&) const = default;
};

/// All (2p-1)!! pairings of {0..index_count-1}, lexicographically ordered.
/// Odd index_count is a domain_error; counts above the cap are rejected.
std::vector<Pairing> enumerate_pairings(int index_count,
                                        int max_indices = kMaxPairingIndices);

}  // namespace syzygy

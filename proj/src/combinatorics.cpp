#include "syzygy/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace syzygy {

namespace {

void require_valid_images(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  std::vector<char> seen(images.size(), 0);
  for (int v : images) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
      throw domain_error("permutation images must be a bijection on {0..n-1}");
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

int cycle_count(std::span<const int> images) {
  const int n = static_cast<int>(images.size());
  std::vector<char> seen(images.size(), 0);
  int cycles = 0;
  for (int i = 0; i < n; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    ++cycles;
    int j = i;
    while (!seen[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = 1;
      j = images[static_cast<std::size_t>(j)];
    }
  }
  return cycles;
}

int sign_from_cycles(std::span<const int> images) {
  const int n = static_cast<int>(images.size());
  return (n - cycle_count(images)) % 2 == 0 ? 1 : -1;
}

}  // namespace

Permutation::Permutation(std::vector<int> images_in)
    : images(std::move(images_in)) {
  require_valid_images(images);
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw domain_error("permutation size must be non-negative");
  Permutation p;
  p.images.resize(static_cast<std::size_t>(n));
  std::iota(p.images.begin(), p.images.end(), 0);
  return p;
}

Permutation Permutation::compose(const Permutation& inner) const {
  if (size() != inner.size()) {
    throw domain_error("cannot compose permutations of different sizes");
  }
  Permutation out;
  out.images.resize(images.size());
  for (int i = 0; i < size(); ++i) {
    out.images[static_cast<std::size_t>(i)] = (*this)(inner(i));
  }
  return out;
}

int Permutation::sign() const { return sign_from_cycles(images); }

std::vector<std::vector<int>> cycle_decomposition(const Permutation& p) {
  const int n = p.size();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> cycles;
  // Scanning positions in increasing order makes every cycle start at its
  // minimum and sorts cycles by first element.
  for (int i = 0; i < n; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    std::vector<int> cycle;
    int j = i;
    while (!seen[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = 1;
      cycle.push_back(j);
      j = p(j);
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

int levi_civita(std::span<const int> indices, int dim) {
  if (dim < 1) throw domain_error("levi_civita: dimension must be positive");
  for (int v : indices) {
    if (v < 0 || v >= dim) {
      throw domain_error("levi_civita: index " + std::to_string(v) +
                         " out of range [0, " + std::to_string(dim) + ")");
    }
  }
  std::vector<char> seen(static_cast<std::size_t>(dim), 0);
  for (int v : indices) {
    if (seen[static_cast<std::size_t>(v)]) return 0;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  const int k = static_cast<int>(indices.size());
  if (k != dim) {
    // k > dim always hits a repeat above; only k < dim distinct reaches here.
    throw undefined_symbol_error(
        "levi_civita: " + std::to_string(k) + " distinct indices in " +
        std::to_string(dim) + "-dimensional space leave the symbol undefined");
  }
  int sign = 1;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (indices[static_cast<std::size_t>(i)] >
          indices[static_cast<std::size_t>(j)]) {
        sign = -sign;
      }
    }
  }
  return sign;
}

std::uint64_t PermutationStream::count(int n) {
  if (n < 0 || n > 20) {
    throw domain_error("factorial count only supported for 0 <= n <= 20");
  }
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

namespace {

// Bounds come first so an over-cap n reports the cap instead of tripping the
// 64-bit factorial guard inside count().
int checked_stream_size(int n, int max_elements) {
  if (n < 1) throw domain_error("permutation enumeration requires n >= 1");
  if (n > max_elements) {
    throw resource_limit_error(
        "permutation enumeration capped at n <= " +
        std::to_string(max_elements) + " (requested n = " + std::to_string(n) +
        ")");
  }
  return n;
}

}  // namespace

PermutationStream::PermutationStream(int n, int max_elements)
    : PermutationStream(checked_stream_size(n, max_elements), 0,
                        count(checked_stream_size(n, max_elements)),
                        max_elements) {}

PermutationStream::PermutationStream(int n, std::uint64_t begin_rank,
                                     std::uint64_t end_rank, int max_elements)
    : n_(checked_stream_size(n, max_elements)),
      rank_(begin_rank),
      end_rank_(end_rank) {
  const std::uint64_t total = count(n);
  if (begin_rank > end_rank || end_rank > total) {
    throw domain_error("permutation rank range out of bounds");
  }
  if (rank_ >= end_rank_) return;

  // Unrank: factoradic digits of begin_rank select from the sorted pool.
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 0);
  images_.resize(static_cast<std::size_t>(n));
  std::uint64_t r = begin_rank;
  std::uint64_t f = total;
  for (int i = 0; i < n; ++i) {
    f /= static_cast<std::uint64_t>(n - i);
    const auto d = static_cast<std::ptrdiff_t>(r / f);
    r %= f;
    images_[static_cast<std::size_t>(i)] = pool[static_cast<std::size_t>(d)];
    pool.erase(pool.begin() + d);
  }
}

PermutationStream& PermutationStream::operator++() {
  ++rank_;
  if (rank_ < end_rank_) {
    std::next_permutation(images_.begin(), images_.end());
  }
  return *this;
}

int PermutationStream::sign() const { return sign_from_cycles(images_); }

PermutationStream permutations_with_sign(int n, int max_elements) {
  return PermutationStream(n, max_elements);
}

namespace {

void build_pairings(std::vector<int>& free_indices,
                    std::vector<std::pair<int, int>>& current,
                    std::vector<Pairing>& out) {
  if (free_indices.empty()) {
    out.push_back(Pairing{current});
    return;
  }
  // Always pair off the smallest free index; iterating partners in
  // increasing order yields lexicographic output.
  const int first = free_indices.front();
  for (std::size_t j = 1; j < free_indices.size(); ++j) {
    const int partner = free_indices[j];
    std::vector<int> rest;
    rest.reserve(free_indices.size() - 2);
    for (std::size_t t = 1; t < free_indices.size(); ++t) {
      if (t != j) rest.push_back(free_indices[t]);
    }
    current.emplace_back(first, partner);
    build_pairings(rest, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Pairing> enumerate_pairings(int index_count, int max_indices) {
  if (index_count < 2) {
    throw domain_error("pairing enumeration requires at least 2 indices");
  }
  if (index_count % 2 != 0) {
    throw domain_error("cannot pair an odd number of indices (" +
                       std::to_string(index_count) + ")");
  }
  if (index_count > max_indices) {
    throw resource_limit_error(
        "pairing enumeration capped at " + std::to_string(max_indices) +
        " indices (requested " + std::to_string(index_count) + ")");
  }
  std::vector<int> all(static_cast<std::size_t>(index_count));
  std::iota(all.begin(), all.end(), 0);
  std::vector<std::pair<int, int>> current;
  std::vector<Pairing> out;
  build_pairings(all, current, out);
  return out;
}

}  // namespace syzygy

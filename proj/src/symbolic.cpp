#include "syzygy/symbolic.hpp"

#include <algorithm>
#include <cstdint>
#include <thread>
#include <unordered_map>
#include <utility>

#include "syzygy/combinatorics.hpp"

namespace syzygy {

TraceMonomial::TraceMonomial(int power_in, std::vector<int> cycles_in)
    : power(power_in), cycles(std::move(cycles_in)) {
  if (power < 0) throw domain_error("monomial power must be >= 0");
  for (int l : cycles) {
    if (l < 1) throw domain_error("trace cycle lengths must be >= 1");
  }
  std::sort(cycles.begin(), cycles.end(), std::greater<int>());
}

int TraceMonomial::degree() const {
  int d = power;
  for (int l : cycles) d += l;
  return d;
}

void SymbolicPolynomial::add(const TraceMonomial& monomial,
                             const Rational& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.emplace(monomial, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational SymbolicPolynomial::coefficient(const TraceMonomial& monomial) const {
  auto it = terms_.find(monomial);
  return it == terms_.end() ? Rational(0) : it->second;
}

SymbolicPolynomial& SymbolicPolynomial::operator*=(const Rational& scale) {
  if (scale == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, coeff] : terms_) coeff *= scale;
  return *this;
}

bool SymbolicPolynomial::operator==(const SymbolicPolynomial& other) const {
  return basis_ == other.basis_ && terms_ == other.terms_;
}

// ---------------------------------------------------------------------------
// Expansion kernel
// ---------------------------------------------------------------------------

namespace {

// Packed monomial key for the hot accumulation loop: the open exponent and
// the descending cycle lengths, one nibble each. Holds for dim + 1 <= 15.
constexpr int kMaxKernelDimension = 14;

std::uint64_t encode_key(int open_exponent, const int* lens, int n_lens) {
  std::uint64_t key = static_cast<std::uint64_t>(open_exponent);
  for (int i = 0; i < n_lens; ++i) {
    key = (key << 4) | static_cast<std::uint64_t>(lens[i]);
  }
  // Length marker keeps {exp 1, cycles {1}} distinct from {exp 0x11, {}}.
  return (key << 4) | static_cast<std::uint64_t>(n_lens);
}

TraceMonomial decode_key(std::uint64_t key) {
  const int n_lens = static_cast<int>(key & 0xF);
  key >>= 4;
  std::vector<int> cycles(static_cast<std::size_t>(n_lens));
  for (int i = n_lens - 1; i >= 0; --i) {
    cycles[static_cast<std::size_t>(i)] = static_cast<int>(key & 0xF);
    key >>= 4;
  }
  return TraceMonomial(static_cast<int>(key), std::move(cycles));
}

using MonomialCounts = std::unordered_map<std::uint64_t, std::int64_t>;

// Walk one rank slice of S_{dim+1}, reading each permutation's cycle
// structure off in place: the cycle through slot 0 of length c becomes the
// open factor A^{c-1}, every other cycle of length l becomes tr(A^l), and
// the sign is (-1)^(n - #cycles).
void accumulate_slice(int n, std::uint64_t begin_rank, std::uint64_t end_rank,
                      MonomialCounts& acc) {
  int lens[16];
  for (PermutationStream stream(n, begin_rank, end_rank, kMaxKernelDimension + 1);
       stream; ++stream) {
    const std::span<const int> images = stream.images();
    std::uint32_t seen = 0;
    int n_lens = 0;
    int open_exponent = 0;
    int cycles = 0;
    for (int i = 0; i < n; ++i) {
      if (seen & (1u << i)) continue;
      ++cycles;
      int length = 0;
      int j = i;
      do {
        seen |= 1u << j;
        j = images[static_cast<std::size_t>(j)];
        ++length;
      } while (j != i);
      if (i == 0) {
        open_exponent = length - 1;
      } else {
        lens[n_lens++] = length;
      }
    }
    // Insertion sort, descending; at most n-1 entries.
    for (int i = 1; i < n_lens; ++i) {
      const int v = lens[i];
      int j = i - 1;
      while (j >= 0 && lens[j] < v) {
        lens[j + 1] = lens[j];
        --j;
      }
      lens[j + 1] = v;
    }
    const std::int64_t sign = ((n - cycles) % 2 == 0) ? 1 : -1;
    acc[encode_key(open_exponent, lens, n_lens)] += sign;
  }
}

}  // namespace

SymbolicPolynomial expand_delta_contraction(int dim, int threads,
                                            int max_dimension) {
  if (dim < 1) throw domain_error("expansion dimension must be positive");
  if (dim > max_dimension) {
    throw resource_limit_error(
        "expansion capped at dim <= " + std::to_string(max_dimension) +
        " (requested dim = " + std::to_string(dim) + ")");
  }
  if (dim > kMaxKernelDimension) {
    throw resource_limit_error(
        "expansion kernel supports dim <= " +
        std::to_string(kMaxKernelDimension) + " (requested dim = " +
        std::to_string(dim) + ")");
  }

  const int n = dim + 1;
  const std::uint64_t total = PermutationStream::count(n);
  if (threads <= 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
  }
  const auto workers =
      static_cast<std::uint64_t>(std::min<std::uint64_t>(
          static_cast<std::uint64_t>(threads), total));

  MonomialCounts merged;
  if (workers <= 1) {
    accumulate_slice(n, 0, total, merged);
  } else {
    std::vector<MonomialCounts> partials(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::uint64_t w = 0; w < workers; ++w) {
      const std::uint64_t begin = total * w / workers;
      const std::uint64_t end = total * (w + 1) / workers;
      pool.emplace_back(accumulate_slice, n, begin, end, std::ref(partials[w]));
    }
    for (auto& t : pool) t.join();
    for (auto& part : partials) {
      for (const auto& [key, count] : part) merged[key] += count;
    }
  }

  SymbolicPolynomial poly(Basis::power_sum);
  for (const auto& [key, count] : merged) {
    if (count == 0) continue;
    poly.add(decode_key(key), Rational(static_cast<long>(count)));
  }
  return poly;
}

// ---------------------------------------------------------------------------
// Newton-Girard rewriting
// ---------------------------------------------------------------------------

namespace {

// Polynomial in invariant symbols alone: descending cycle multiset -> coeff.
using InvariantPoly = std::map<std::vector<int>, Rational>;

void add_to(InvariantPoly& poly, const std::vector<int>& key,
            const Rational& coeff) {
  auto [it, inserted] = poly.emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) poly.erase(it);
  }
}

std::vector<int> merged_multiset(const std::vector<int>& a,
                                 const std::vector<int>& b) {
  std::vector<int> out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end(), std::greater<int>());
  return out;
}

InvariantPoly multiply(const InvariantPoly& a, const InvariantPoly& b) {
  InvariantPoly out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      add_to(out, merged_multiset(ka, kb), ca * cb);
    }
  }
  return out;
}

// table[k] = p_k written in sigma monomials, via
// p_k = s1 p_{k-1} - s2 p_{k-2} + ... + (-1)^{k-2} s_{k-1} p_1 + (-1)^{k-1} k s_k.
std::vector<InvariantPoly> power_to_sigma_table(int max_order) {
  std::vector<InvariantPoly> table(static_cast<std::size_t>(max_order) + 1);
  for (int k = 1; k <= max_order; ++k) {
    InvariantPoly pk;
    add_to(pk, {k}, Rational((k % 2 == 1) ? k : -k));
    for (int i = 1; i < k; ++i) {
      const Rational sign((i % 2 == 1) ? 1 : -1);
      for (const auto& [key, coeff] : table[static_cast<std::size_t>(k - i)]) {
        add_to(pk, merged_multiset(key, {i}), sign * coeff);
      }
    }
    table[static_cast<std::size_t>(k)] = std::move(pk);
  }
  return table;
}

// table[k] = sigma_k written in power-sum monomials, via
// sigma_k = (1/k) sum_{i=1..k} (-1)^{i-1} sigma_{k-i} p_i.
std::vector<InvariantPoly> sigma_to_power_table(int max_order) {
  std::vector<InvariantPoly> table(static_cast<std::size_t>(max_order) + 1);
  table[0] = InvariantPoly{{{}, Rational(1)}};
  for (int k = 1; k <= max_order; ++k) {
    InvariantPoly sk;
    for (int i = 1; i <= k; ++i) {
      const Rational sign((i % 2 == 1) ? 1 : -1);
      for (const auto& [key, coeff] : table[static_cast<std::size_t>(k - i)]) {
        add_to(sk, merged_multiset(key, {i}), sign * coeff / k);
      }
    }
    table[static_cast<std::size_t>(k)] = std::move(sk);
  }
  return table;
}

SymbolicPolynomial rewrite(const SymbolicPolynomial& poly, int dim,
                           Basis from, Basis to,
                           const std::vector<InvariantPoly>& table) {
  if (poly.basis() != from) {
    throw domain_error(std::string("basis rewrite expects a ") +
                       basis_tag(from) + "-basis polynomial");
  }
  SymbolicPolynomial out(to);
  for (const auto& [monomial, coeff] : poly.terms()) {
    InvariantPoly product{{{}, coeff}};
    for (int l : monomial.cycles) {
      if (l > dim) {
        throw domain_error("invariant order " + std::to_string(l) +
                           " exceeds dimension " + std::to_string(dim));
      }
      product = multiply(product, table[static_cast<std::size_t>(l)]);
    }
    for (const auto& [cycles, c] : product) {
      out.add(TraceMonomial(monomial.power, cycles), c);
    }
  }
  return out;
}

}  // namespace

SymbolicPolynomial to_sigma_basis(const SymbolicPolynomial& poly, int dim) {
  if (dim < 1) throw domain_error("dimension must be positive");
  return rewrite(poly, dim, Basis::power_sum, Basis::sigma,
                 power_to_sigma_table(dim));
}

SymbolicPolynomial to_power_sum_basis(const SymbolicPolynomial& poly, int dim) {
  if (dim < 1) throw domain_error("dimension must be positive");
  return rewrite(poly, dim, Basis::sigma, Basis::power_sum,
                 sigma_to_power_table(dim));
}

SymbolicPolynomial normalize_ch(const SymbolicPolynomial& poly, int dim) {
  if (dim < 1) throw domain_error("dimension must be positive");
  const Rational lead = poly.coefficient(TraceMonomial(dim, {}));
  if (lead == 0) {
    throw inconsistency_error(
        "normalize_ch: the A^" + std::to_string(dim) +
        " coefficient is absent; the input is not a dimension-" +
        std::to_string(dim) + " expansion");
  }
  BigInt factorial = 1;
  for (int i = 2; i <= dim; ++i) factorial *= i;
  Rational divisor(factorial);
  if (sgn(lead) < 0) divisor = -divisor;
  SymbolicPolynomial out = poly;
  out *= Rational(1) / divisor;
  return out;
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

namespace {

std::string coeff_string(const Rational& abs_coeff) {
  std::string s = abs_coeff.get_num().get_str();
  if (abs_coeff.get_den() != 1) s += "/" + abs_coeff.get_den().get_str();
  return s;
}

std::string coeff_latex(const Rational& abs_coeff) {
  if (abs_coeff.get_den() == 1) return abs_coeff.get_num().get_str();
  return "\\tfrac{" + abs_coeff.get_num().get_str() + "}{" +
         abs_coeff.get_den().get_str() + "}";
}

std::string symbol_text(const InvariantSymbol& sym, const RenderOptions& opt) {
  if (sym.kind == Basis::sigma) {
    if (opt.det_alias && sym.order == opt.dim) return "det";
    return "s" + std::to_string(sym.order);
  }
  return "p" + std::to_string(sym.order);
}

std::string symbol_latex(const InvariantSymbol& sym, const RenderOptions& opt) {
  if (sym.kind == Basis::sigma) {
    if (opt.det_alias && sym.order == opt.dim) return "\\det(A)";
    return "\\sigma_{" + std::to_string(sym.order) + "}";
  }
  if (sym.order == 1) return "\\mathrm{tr}(A)";
  return "\\mathrm{tr}(A^{" + std::to_string(sym.order) + "})";
}

std::string power_text(int e) {
  if (e == 0) return "I";
  if (e == 1) return "A";
  return "A^" + std::to_string(e);
}

std::string power_latex(int e) {
  if (e == 0) return "\\mathbf{I}";
  if (e == 1) return "A";
  return "A^{" + std::to_string(e) + "}";
}

// Invariant factors with exponents grouped, ascending order: [2,1,1] in the
// p basis becomes "p1^2*p2" (text) or "\mathrm{tr}(A)^{2} \mathrm{tr}(A^{2})".
std::vector<std::string> factor_strings(const TraceMonomial& m, Basis basis,
                                        const RenderOptions& opt, bool latex) {
  std::vector<std::string> out;
  std::vector<int> cycles = m.cycles;
  std::sort(cycles.begin(), cycles.end());
  for (std::size_t i = 0; i < cycles.size();) {
    std::size_t j = i;
    while (j < cycles.size() && cycles[j] == cycles[i]) ++j;
    const auto exponent = static_cast<int>(j - i);
    const InvariantSymbol sym{basis, cycles[i]};
    std::string s = latex ? symbol_latex(sym, opt) : symbol_text(sym, opt);
    if (exponent > 1) {
      s += latex ? "^{" + std::to_string(exponent) + "}"
                 : "^" + std::to_string(exponent);
    }
    out.push_back(std::move(s));
    i = j;
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

// Body of one monomial without its sign and without the A-power factor.
// Empty when the monomial is just "+/-1 times the power factor".
std::string monomial_body(const TraceMonomial& m, const Rational& coeff,
                          Basis basis, const RenderOptions& opt, bool latex) {
  std::vector<std::string> parts;
  const Rational a = abs(coeff);
  if (a != 1) parts.push_back(latex ? coeff_latex(a) : coeff_string(a));
  auto factors = factor_strings(m, basis, opt, latex);
  parts.insert(parts.end(), factors.begin(), factors.end());
  return join(parts, latex ? " " : "*");
}

struct Piece {
  bool negative = false;
  std::string body;
};

std::string join_pieces(const std::vector<Piece>& pieces) {
  std::string out;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (i == 0) {
      if (pieces[i].negative) out += "-";
    } else {
      out += pieces[i].negative ? " - " : " + ";
    }
    out += pieces[i].body;
  }
  return out;
}

std::string render_grouped(const SymbolicPolynomial& poly,
                           const RenderOptions& opt, bool latex) {
  if (poly.is_zero()) return "0";
  const char* mult = latex ? " " : "*";

  std::vector<Piece> groups;
  auto it = poly.terms().begin();
  while (it != poly.terms().end()) {
    const int power = it->first.power;
    auto end = it;
    while (end != poly.terms().end() && end->first.power == power) ++end;
    const auto count = std::distance(it, end);
    const std::string psym = latex ? power_latex(power) : power_text(power);

    if (count == 1) {
      const auto& [mono, coeff] = *it;
      std::string body = monomial_body(mono, coeff, poly.basis(), opt, latex);
      if (body.empty()) {
        body = psym;
      } else {
        body += mult;
        body += psym;
      }
      groups.push_back(Piece{sgn(coeff) < 0, std::move(body)});
    } else {
      // Several trace structures share this power: parenthesize the
      // invariant polynomial, e.g. "(p1^2 - p2)*I".
      std::vector<Piece> inner;
      for (auto t = it; t != end; ++t) {
        std::string body = monomial_body(t->first, t->second, poly.basis(),
                                         opt, latex);
        if (body.empty()) body = "1";
        inner.push_back(Piece{sgn(t->second) < 0, std::move(body)});
      }
      std::string body = latex ? "\\left(" + join_pieces(inner) + "\\right)"
                               : "(" + join_pieces(inner) + ")";
      body += mult;
      body += psym;
      groups.push_back(Piece{false, std::move(body)});
    }
    it = end;
  }
  return join_pieces(groups);
}

}  // namespace

nlohmann::ordered_json to_json(const SymbolicPolynomial& poly) {
  nlohmann::ordered_json out;
  out["basis"] = basis_tag(poly.basis());
  auto& terms = out["terms"] = nlohmann::ordered_json::array();
  for (const auto& [mono, coeff] : poly.terms()) {
    nlohmann::ordered_json term;
    term["coeff_num"] = coeff.get_num().get_str();
    term["coeff_den"] = coeff.get_den().get_str();
    term["power"] = mono.power;
    term["cycles"] = mono.cycles;
    terms.push_back(std::move(term));
  }
  return out;
}

std::string render(const SymbolicPolynomial& poly, const RenderOptions& options) {
  switch (options.format) {
    case RenderFormat::text:
      return render_grouped(poly, options, /*latex=*/false);
    case RenderFormat::latex:
      return render_grouped(poly, options, /*latex=*/true);
    case RenderFormat::json:
      return to_json(poly).dump();
  }
  throw domain_error("unknown render format");
}

std::string render(const SymbolicPolynomial& poly, RenderFormat format) {
  RenderOptions options;
  options.format = format;
  return render(poly, options);
}

}  // namespace syzygy

#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace landau {

using BigInt = boost::multiprecision::cpp_int;

enum class BoundSource {
  theorem_a,      // s non-central G-classes in N
  one_class,      // exactly one non-central G-class
  two_coprime,    // two non-central G-classes of coprime sizes
  kpp_gamma,      // solvable G with kpp(G) = k
  kpp_index,      // solvable G, normal N of index n with kpp_G(N) = k
};

std::string_view to_string(BoundSource source);

struct BoundReport {
  BoundSource source = BoundSource::theorem_a;
  std::uint64_t n = 1;        // index |G:N|
  std::uint64_t param = 1;    // s, or k for the kpp bounds
  BigInt bound_g;
  BigInt bound_n;
  bool strict = false;        // |G| < bound_g rather than |G| <= bound_g

  bool admits(const BigInt& order) const { return strict ? order < bound_g : order <= bound_g; }
};

/// [b_1, ..., b_{s+1}]: upper bounds for the parts n_1 <= ... <= n_{s+1} of
/// 1/n = 1/n_1 + ... + 1/n_{s+1}, with b_1 = n(s+1) and
/// b_k = n^(2^(k-1)) (s+2-k) prod_{i=0}^{k-2} (s+1-i)^(2^(k-2-i)).
/// Errors: domain_error if n < 1 or s < 1.
std::vector<BigInt> lemma21_bounds(std::uint64_t n, std::uint64_t s);

/// |G| < n^(2^s+1) (s+1) prod_{i=0}^{s-1} (s+1-i)^(2^(s-1-i)) when N has s
/// non-central G-classes; bound_n = bound_g / n.
BoundReport theoremA_bounds(std::uint64_t n, std::uint64_t s);

/// order < theoremA_bounds(n, s).bound_g, evaluated with saturation so that
/// large s stays cheap.
bool theoremA_admits(std::uint64_t n, std::uint64_t s, const BigInt& order);

/// |G| < n(n+1)^2 when N has exactly one non-central G-class.
BoundReport thm311_bound(std::uint64_t n);

struct IntRange {
  std::uint64_t lo = 1;
  std::uint64_t hi = 0;

  bool empty() const { return lo > hi; }
  bool contains(std::uint64_t x) const { return lo <= x && x <= hi; }
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

/// n1 in [n+1, 3n-1].
IntRange thm322_n1_range(std::uint64_t n);

/// n2 in [floor(n n1/(n1-n)) + 1, floor(2 n1 n/(n1-n)) - 1].
/// Errors: out_of_range if n1 is outside thm322_n1_range(n).
IntRange thm322_n2_range(std::uint64_t n, std::uint64_t n1);

/// Both ranges at once.
std::pair<IntRange, IntRange> thm322_intervals(std::uint64_t n, std::uint64_t n1);

/// |G| <= n(n+1)(n^2+n+1) when N has two non-central G-classes of coprime
/// sizes.
BoundReport thm322_bound(std::uint64_t n);

/// gamma(1) = 1, gamma(k) = k gamma(k-1)^2. Evaluated both by the recursion
/// and as prod_{i=0}^{k-1} (k-i)^(2^i); the two must agree.
BigInt gamma_kpp(std::uint64_t k);
BigInt gamma_kpp_recursive(std::uint64_t k);
BigInt gamma_kpp_product(std::uint64_t k);

/// |N| <= gamma(nk), |G| <= n gamma(nk).
BoundReport cor49_bounds(std::uint64_t n, std::uint64_t k);

/// k * m^2, where m is the largest order of a solvable group with kpp < k.
BigInt iterative_kpp_bound(std::uint64_t k, const BigInt& max_order_below);

}  // namespace landau

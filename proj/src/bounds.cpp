#include "landau/bounds.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "landau/error.hpp"

namespace landau {

namespace {

void require_positive(std::uint64_t v, const char* name) {
  if (v < 1) throw Error(ErrorKind::domain_error, std::string(name) + " must be at least 1");
}

// b^(2^e)
BigInt pow2pow(const BigInt& b, std::uint64_t e) {
  BigInt r = b;
  for (std::uint64_t i = 0; i < e; ++i) r *= r;
  return r;
}

}  // namespace

std::string_view to_string(BoundSource source) {
  switch (source) {
    case BoundSource::theorem_a: return "theorem-a";
    case BoundSource::one_class: return "one-class";
    case BoundSource::two_coprime: return "two-coprime";
    case BoundSource::kpp_gamma: return "kpp-gamma";
    case BoundSource::kpp_index: return "kpp-index";
  }
  return "unknown";
}

std::vector<BigInt> lemma21_bounds(std::uint64_t n, std::uint64_t s) {
  require_positive(n, "n");
  require_positive(s, "s");
  std::vector<BigInt> b;
  b.push_back(BigInt(n) * (s + 1));
  for (std::uint64_t k = 2; k <= s + 1; ++k) {
    BigInt v = pow2pow(BigInt(n), k - 1) * (s + 2 - k);
    for (std::uint64_t i = 0; i + 2 <= k; ++i) v *= pow2pow(BigInt(s + 1 - i), k - 2 - i);
    b.push_back(v);
  }
  return b;
}

BoundReport theoremA_bounds(std::uint64_t n, std::uint64_t s) {
  require_positive(n, "n");
  require_positive(s, "s");
  BoundReport r{BoundSource::theorem_a, n, s, {}, {}, true};
  BigInt v = pow2pow(BigInt(n), s) * n * (s + 1);
  for (std::uint64_t i = 0; i < s; ++i) v *= pow2pow(BigInt(s + 1 - i), s - 1 - i);
  r.bound_g = v;
  r.bound_n = v / n;
  return r;
}

bool theoremA_admits(std::uint64_t n, std::uint64_t s, const BigInt& order) {
  require_positive(n, "n");
  require_positive(s, "s");
  // every factor is >= 1, so once the running product passes `order` it stays there
  const BigInt cap = order + 1;
  auto times = [&](BigInt& acc, const BigInt& x) { acc = std::min<BigInt>(acc * x, cap); };
  auto pow2 = [&](std::uint64_t base, std::uint64_t e) {
    BigInt r = std::min<BigInt>(base, cap);
    for (std::uint64_t i = 0; i < e && r < cap && r > 1; ++i) times(r, r);
    return r;
  };
  BigInt v = 1;
  times(v, pow2(n, s));
  times(v, n);
  times(v, s + 1);
  for (std::uint64_t i = 0; i < s && v < cap; ++i) times(v, pow2(s + 1 - i, s - 1 - i));
  return order < v;
}

BoundReport thm311_bound(std::uint64_t n) {
  require_positive(n, "n");
  BoundReport r{BoundSource::one_class, n, 1, {}, {}, true};
  r.bound_n = BigInt(n + 1) * (n + 1);
  r.bound_g = r.bound_n * n;
  return r;
}

IntRange thm322_n1_range(std::uint64_t n) {
  require_positive(n, "n");
  return {n + 1, 3 * n - 1};
}

IntRange thm322_n2_range(std::uint64_t n, std::uint64_t n1) {
  const IntRange r1 = thm322_n1_range(n);
  if (!r1.contains(n1))
    throw Error(ErrorKind::out_of_range, "n1 = " + std::to_string(n1) + " is outside [" + std::to_string(r1.lo) +
                                             ", " + std::to_string(r1.hi) + "]");
  // all quantities positive, so integer division is the floor
  return {n * n1 / (n1 - n) + 1, 2 * n1 * n / (n1 - n) - 1};
}

std::pair<IntRange, IntRange> thm322_intervals(std::uint64_t n, std::uint64_t n1) {
  return {thm322_n1_range(n), thm322_n2_range(n, n1)};
}

BoundReport thm322_bound(std::uint64_t n) {
  require_positive(n, "n");
  BoundReport r{BoundSource::two_coprime, n, 2, {}, {}, false};
  r.bound_n = BigInt(n + 1) * (n * n + n + 1);
  r.bound_g = r.bound_n * n;
  return r;
}

BigInt gamma_kpp_recursive(std::uint64_t k) {
  require_positive(k, "k");
  BigInt g = 1;
  for (std::uint64_t j = 2; j <= k; ++j) g = g * g * j;
  return g;
}

BigInt gamma_kpp_product(std::uint64_t k) {
  require_positive(k, "k");
  BigInt g = 1;
  for (std::uint64_t i = 0; i < k; ++i) g *= pow2pow(BigInt(k - i), i);
  return g;
}

BigInt gamma_kpp(std::uint64_t k) {
  BigInt g = gamma_kpp_recursive(k);
  if (g != gamma_kpp_product(k)) throw std::logic_error("gamma recursion and product disagree");
  return g;
}

BoundReport cor49_bounds(std::uint64_t n, std::uint64_t k) {
  require_positive(n, "n");
  require_positive(k, "k");
  BoundReport r{BoundSource::kpp_index, n, k, {}, {}, false};
  r.bound_n = gamma_kpp(n * k);
  r.bound_g = r.bound_n * n;
  return r;
}

BigInt iterative_kpp_bound(std::uint64_t k, const BigInt& max_order_below) {
  require_positive(k, "k");
  if (max_order_below < 1) throw Error(ErrorKind::domain_error, "max order must be at least 1");
  return max_order_below * max_order_below * k;
}

}  // namespace landau

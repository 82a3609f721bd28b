#include "landau/fracsolve.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

#include "landau/bounds.hpp"
#include "landau/error.hpp"
#include "landau/numtheory.hpp"

namespace landau {

namespace {

using Rational = boost::multiprecision::cpp_rational;

struct Search {
  std::uint64_t n;
  std::vector<BigInt> caps;  // part bounds per position
  std::vector<std::uint64_t> prefix;
  std::vector<FractionSolution> out;

  void descend(const Rational& rem, std::size_t k, std::uint64_t lo) {
    const std::size_t left = caps.size() - k;
    if (left == 1) {
      if (numerator(rem) != 1) return;
      const BigInt last = denominator(rem);
      if (last < lo || last > caps[k]) return;
      prefix.push_back(static_cast<std::uint64_t>(last));
      out.push_back({n, prefix});
      prefix.pop_back();
      return;
    }
    // 1/x < rem so that something is left, and 1/x >= rem/left
    const BigInt first = static_cast<BigInt>(denominator(rem) / numerator(rem)) + 1;
    const BigInt last = std::min<BigInt>(caps[k], left * denominator(rem) / numerator(rem));
    for (BigInt x = std::max<BigInt>(first, lo); x <= last; ++x) {
      prefix.push_back(static_cast<std::uint64_t>(x));
      descend(rem - Rational(1, x), k + 1, static_cast<std::uint64_t>(x));
      prefix.pop_back();
    }
  }
};

void require_index(std::uint64_t n) {
  if (n < 1) throw Error(ErrorKind::domain_error, "index must be at least 1");
}

std::vector<CandidateOrder> collect(const std::map<std::uint64_t, CandidateOrder>& found) {
  std::vector<CandidateOrder> out;
  for (const auto& [c, cand] : found) out.push_back(cand);
  return out;
}

}  // namespace

std::vector<FractionSolution> unit_fraction_solutions(std::uint64_t n, std::uint64_t parts) {
  require_index(n);
  if (parts < 1) throw Error(ErrorKind::domain_error, "parts must be at least 1");
  if (parts == 1) return {{n, {n}}};
  Search s{n, lemma21_bounds(n, parts - 1), {}, {}};
  s.descend(Rational(1, n), 0, 1);
  return s.out;
}

std::vector<CandidateOrder> candidate_orders_one_class(std::uint64_t n) {
  require_index(n);
  const std::uint64_t bound = static_cast<std::uint64_t>(thm311_bound(n).bound_g);
  std::map<std::uint64_t, CandidateOrder> found;
  for (std::uint64_t c = n; c < bound; c += n) {
    const std::uint64_t m = c / n;
    for (std::uint64_t z : divisors(m)) {
      if (z >= m) continue;
      const std::uint64_t d = m - z;
      if (d <= 1 || c % d) continue;
      if (c >= (c / z) * (c / d)) continue;
      auto& cand = found[c];
      cand.c = c;
      cand.witnesses.emplace_back(z, d);
    }
  }
  return collect(found);
}

std::vector<CandidateOrder> candidate_orders_one_class_structural(std::uint64_t n) {
  std::vector<CandidateOrder> out;
  for (CandidateOrder cand : candidate_orders_one_class(n)) {
    const auto pp = as_prime_power(cand.c / n);
    if (!pp) continue;
    std::erase_if(cand.witnesses, [&](const std::pair<std::uint64_t, std::uint64_t>& w) {
      const auto [z, d] = w;
      // m/z = p^b with b >= 1; d must divide n p^(b-1)
      std::uint64_t limit = n;
      for (std::uint64_t q = cand.c / n / z; q > pp->prime; q /= pp->prime) limit *= pp->prime;
      return limit % d != 0;
    });
    if (!cand.witnesses.empty()) out.push_back(std::move(cand));
  }
  return out;
}

std::vector<CandidateOrder> candidate_orders_two_coprime(std::uint64_t n) {
  require_index(n);
  const std::uint64_t bound = static_cast<std::uint64_t>(thm322_bound(n).bound_g);
  std::map<std::uint64_t, CandidateOrder> found;
  const IntRange r1 = thm322_n1_range(n);
  for (std::uint64_t n1 = r1.lo; n1 <= r1.hi; ++n1) {
    const IntRange r2 = thm322_n2_range(n, n1);
    for (std::uint64_t n2 = r2.lo; n2 <= r2.hi; ++n2) {
      // 1/c = 1/n - 1/n1 - 1/n2
      const std::uint64_t num_plus = n1 * n2;
      const std::uint64_t num_minus = n * n2 + n * n1;
      if (num_plus <= num_minus) continue;
      const std::uint64_t num = num_plus - num_minus;
      const std::uint64_t den = n * n1 * n2;
      if (den % num) continue;
      const std::uint64_t c = den / num;
      if (c > bound || c % n || c % n1 || c % n2) continue;
      if (c / n1 <= 1 || c / n2 <= 1 || std::gcd(c / n1, c / n2) != 1) continue;
      auto& cand = found[c];
      cand.c = c;
      cand.witnesses.emplace_back(n1, n2);
    }
  }
  return collect(found);
}

std::vector<CandidateOrder> candidate_orders_two_coprime_structural(std::uint64_t n) {
  std::vector<CandidateOrder> out;
  for (const CandidateOrder& cand : candidate_orders_two_coprime(n)) {
    const std::uint64_t m = cand.c / n;
    const auto pp = as_prime_power(m);
    bool fits = pp && pp->prime == 2;
    const auto primes = prime_divisors(m);
    if (primes.size() == 2)
      for (std::uint64_t q : primes)
        if ((m / q) % q != 0) fits = true;
    if (fits) out.push_back(cand);
  }
  return out;
}

std::vector<std::uint64_t> orders_of(const std::vector<CandidateOrder>& candidates) {
  std::vector<std::uint64_t> out;
  for (const CandidateOrder& c : candidates) out.push_back(c.c);
  return out;
}

}  // namespace landau

#include <doctest.h>

#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "landau/bounds.hpp"
#include "landau/error.hpp"
#include "landau/fracsolve.hpp"

using namespace landau;

namespace {

struct Frac {
  std::uint64_t num, den;
};

Frac reduce(std::uint64_t num, std::uint64_t den) {
  const std::uint64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

// rem - 1/x, assuming rem > 1/x
Frac minus_unit(Frac rem, std::uint64_t x) { return reduce(rem.num * x - rem.den, rem.den * x); }

// Plain recursive descent: x ranges over (1/rem, left/rem], nothing else.
void oracle(Frac rem, std::uint64_t lo, std::uint64_t left, std::vector<std::uint64_t>& prefix,
            std::vector<std::vector<std::uint64_t>>& out) {
  if (left == 1) {
    if (rem.num == 1 && rem.den >= lo) {
      prefix.push_back(rem.den);
      out.push_back(prefix);
      prefix.pop_back();
    }
    return;
  }
  for (std::uint64_t x = std::max(lo, rem.den / rem.num + 1); x * rem.num <= left * rem.den; ++x) {
    prefix.push_back(x);
    oracle(minus_unit(rem, x), x, left - 1, prefix, out);
    prefix.pop_back();
  }
}

std::vector<std::vector<std::uint64_t>> oracle_solutions(std::uint64_t n, std::uint64_t parts) {
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> prefix;
  oracle({1, n}, 1, parts, prefix, out);
  return out;
}

std::vector<std::vector<std::uint64_t>> parts_of(const std::vector<FractionSolution>& sols) {
  std::vector<std::vector<std::uint64_t>> out;
  for (const FractionSolution& s : sols) out.push_back(s.parts);
  return out;
}

// The two-coprime equation from the other side: every c up to the bound and every pair of
// divisors of c.
std::set<std::uint64_t> two_coprime_oracle(std::uint64_t n) {
  const std::uint64_t bound = n * (n + 1) * (n * n + n + 1);
  std::set<std::uint64_t> out;
  for (std::uint64_t c = n; c <= bound; c += n) {
    std::vector<std::uint64_t> divs;
    for (std::uint64_t d = 1; d <= c; ++d)
      if (c % d == 0) divs.push_back(d);
    for (std::uint64_t n1 : divs)
      for (std::uint64_t n2 : divs) {
        // 1/n = 1/c + 1/n1 + 1/n2  <=>  c n1 n2 = n (n1 n2 + c n2 + c n1)
        if (c * n1 * n2 != n * (n1 * n2 + c * n2 + c * n1)) continue;
        if (c / n1 <= 1 || c / n2 <= 1 || std::gcd(c / n1, c / n2) != 1) continue;
        if (n1 < n + 1 || n1 > 3 * n - 1) continue;
        if (n2 <= n * n1 / (n1 - n) || n2 >= 2 * n1 * n / (n1 - n)) continue;
        out.insert(c);
      }
  }
  return out;
}

std::set<std::uint64_t> as_set(const std::vector<CandidateOrder>& c) {
  const auto v = orders_of(c);
  return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("unit fraction examples") {
  using V = std::vector<std::vector<std::uint64_t>>;
  CHECK(parts_of(unit_fraction_solutions(1, 3)) == V{{2, 3, 6}, {2, 4, 4}, {3, 3, 3}});
  CHECK(parts_of(unit_fraction_solutions(2, 2)) == V{{3, 6}, {4, 4}});
  CHECK(parts_of(unit_fraction_solutions(1, 1)) == V{{1}});
  CHECK(parts_of(unit_fraction_solutions(5, 1)) == V{{5}});
  CHECK_THROWS_AS(unit_fraction_solutions(0, 2), Error);
}

TEST_CASE("unit fractions agree with plain recursive descent") {
  for (std::uint64_t n = 1; n <= 6; ++n)
    for (std::uint64_t parts = 1; parts <= 3; ++parts) {
      INFO("n = " << n << ", parts = " << parts);
      CHECK(parts_of(unit_fraction_solutions(n, parts)) == oracle_solutions(n, parts));
    }
  CHECK(parts_of(unit_fraction_solutions(2, 4)) == oracle_solutions(2, 4));
}

TEST_CASE("every solution is exact, sorted, unique and within the part bounds") {
  for (std::uint64_t n = 1; n <= 10; ++n)
    for (std::uint64_t parts = 2; parts <= 4; ++parts) {
      if (n > 4 && parts == 4) continue;  // keep the run short
      const auto sols = unit_fraction_solutions(n, parts);
      const auto caps = lemma21_bounds(n, parts - 1);
      std::set<std::vector<std::uint64_t>> seen;
      for (const FractionSolution& s : sols) {
        REQUIRE(s.parts.size() == parts);
        CHECK(std::is_sorted(s.parts.begin(), s.parts.end()));
        CHECK(seen.insert(s.parts).second);
        Frac sum{0, 1};
        for (std::uint64_t x : s.parts) sum = reduce(sum.num * x + sum.den, sum.den * x);
        CHECK(sum.num == 1);
        CHECK(sum.den == n);
        for (std::size_t k = 0; k < parts; ++k) CHECK(BigInt(s.parts[k]) <= caps[k]);
      }
      CHECK(std::is_sorted(sols.begin(), sols.end(),
                           [](const FractionSolution& a, const FractionSolution& b) { return a.parts < b.parts; }));
    }
}

TEST_CASE("one-class candidate orders") {
  const auto c2 = candidate_orders_one_class(2);
  const auto s2 = as_set(c2);
  CHECK(s2.contains(6));
  CHECK(s2.contains(8));
  for (const CandidateOrder& c : c2) {
    if (c.c == 6) CHECK(std::find(c.witnesses.begin(), c.witnesses.end(), std::pair<std::uint64_t, std::uint64_t>{1, 2}) != c.witnesses.end());
    if (c.c == 8) CHECK(std::find(c.witnesses.begin(), c.witnesses.end(), std::pair<std::uint64_t, std::uint64_t>{2, 2}) != c.witnesses.end());
  }
  const auto s3 = as_set(candidate_orders_one_class(3));
  CHECK(s3.contains(12));
  CHECK(s3.contains(24));

  for (std::uint64_t n = 1; n <= 12; ++n) {
    for (const CandidateOrder& c : candidate_orders_one_class(n)) {
      CHECK(c.c % n == 0);
      CHECK(c.c < n * (n + 1) * (n + 1));
      for (const auto& [z, d] : c.witnesses) {
        CHECK(z + d == c.c / n);
        CHECK((c.c / n) % z == 0);
        CHECK(d > 1);
        CHECK(c.c % d == 0);
      }
    }
    const auto plain = as_set(candidate_orders_one_class(n));
    for (std::uint64_t c : orders_of(candidate_orders_one_class_structural(n))) CHECK(plain.contains(c));
  }
  CHECK(orders_of(candidate_orders_one_class_structural(2)) == std::vector<std::uint64_t>{6, 8});
  CHECK(orders_of(candidate_orders_one_class_structural(3)) == std::vector<std::uint64_t>{12, 24});
  CHECK(candidate_orders_one_class_structural(5).empty());
  CHECK(candidate_orders_one_class(1).empty());
  CHECK_THROWS_AS(candidate_orders_one_class(0), Error);
}

TEST_CASE("two-coprime candidate orders") {
  CHECK(orders_of(candidate_orders_two_coprime(2)) == std::vector<std::uint64_t>{12, 20, 24});
  CHECK(orders_of(candidate_orders_two_coprime(1)) == std::vector<std::uint64_t>{6});
  for (std::uint64_t n = 1; n <= 8; ++n) {
    INFO("n = " << n);
    CHECK(as_set(candidate_orders_two_coprime(n)) == two_coprime_oracle(n));
    const auto plain = as_set(candidate_orders_two_coprime(n));
    for (std::uint64_t c : orders_of(candidate_orders_two_coprime_structural(n))) CHECK(plain.contains(c));
    for (const CandidateOrder& c : candidate_orders_two_coprime(n))
      for (const auto& [n1, n2] : c.witnesses) {
        CHECK(c.c % n1 == 0);
        CHECK(c.c % n2 == 0);
        CHECK(std::gcd(c.c / n1, c.c / n2) == 1);
      }
  }
  CHECK_THROWS_AS(candidate_orders_two_coprime(0), Error);
}

TEST_CASE("candidate lists cover every pair found by the GAP brute force") {
  std::ifstream in(std::string(LANDAU_TEST_DATA_DIR) + "/gap_classification_le100.txt");
  REQUIRE(in);
  std::map<std::pair<std::string, std::uint64_t>, std::set<std::uint64_t>> plain, structural;
  std::string line;
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    std::istringstream is(line);
    std::string kind;
    std::uint64_t n = 0, order = 0;
    is >> kind >> n >> order;
    const auto key = std::pair{kind, n};
    if (!plain.contains(key)) {
      const bool one = kind == "ONE";
      plain[key] = as_set(one ? candidate_orders_one_class(n) : candidate_orders_two_coprime(n));
      structural[key] =
          as_set(one ? candidate_orders_one_class_structural(n) : candidate_orders_two_coprime_structural(n));
    }
    INFO(line);
    CHECK(plain[key].contains(order));
    CHECK(structural[key].contains(order));
    ++rows;
  }
  CHECK(rows == 135);
}

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace landau {

/// 1/n = 1/parts[0] + ... + 1/parts[s], parts nondecreasing.
struct FractionSolution {
  std::uint64_t n = 1;
  std::vector<std::uint64_t> parts;

  friend bool operator==(const FractionSolution&, const FractionSolution&) = default;
};

/// Every nondecreasing solution exactly once, in lexicographic order.
std::vector<FractionSolution> unit_fraction_solutions(std::uint64_t n, std::uint64_t parts);

/// A possible |G|. Witnesses are (z, d) = (|Z(G) ∩ N|, |x^G|) for the
/// one-class search and (n1, n2) centralizer orders for the two-coprime one.
struct CandidateOrder {
  std::uint64_t c = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> witnesses;
};

/// c < n(n+1)^2 with n | c and c/n = z + d, z | c/n, d > 1, d | c and
/// c < (c/z)(c/d). Errors: domain_error if n < 1.
std::vector<CandidateOrder> candidate_orders_one_class(std::uint64_t n);

/// Subset of candidate_orders_one_class that also fits the one-vertex
/// structure: |N| = p^a, z = p^e with e < a, and d divides n p^(a-e-1)
/// (N-classes inside x^G have size dividing |N : <Z(G) ∩ N, x>|).
std::vector<CandidateOrder> candidate_orders_one_class_structural(std::uint64_t n);

/// c from 1/n = 1/c + 1/n1 + 1/n2 over the n1/n2 intervals, subject to
/// n, n1, n2 | c, gcd(c/n1, c/n2) = 1, c/n1 > 1, c/n2 > 1 and
/// c <= n(n+1)(n^2+n+1). Errors: domain_error if n < 1.
std::vector<CandidateOrder> candidate_orders_two_coprime(std::uint64_t n);

/// Subset of candidate_orders_two_coprime whose |N| = c/n is a power of 2 or
/// of the form p^a q.
std::vector<CandidateOrder> candidate_orders_two_coprime_structural(std::uint64_t n);

std::vector<std::uint64_t> orders_of(const std::vector<CandidateOrder>& candidates);

}  // namespace landau

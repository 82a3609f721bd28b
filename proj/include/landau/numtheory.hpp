#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace landau {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
};

bool is_prime(std::uint64_t n);

/// p^a with a >= 1, or nullopt (1 is not reported as a prime power here).
std::optional<PrimePower> as_prime_power(std::uint64_t n);

/// Element orders count as "prime power" when they are 1 or p^a.
inline bool is_one_or_prime_power(std::uint64_t n) { return n == 1 || as_prime_power(n).has_value(); }

/// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

std::vector<std::uint64_t> divisors(std::uint64_t n);

}  // namespace landau

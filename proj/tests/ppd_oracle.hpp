#pragma once

// Brute-force references for primitive prime divisors, shared by the unit
// tests and the acceptance run.

#include <cstdint>
#include <optional>
#include <vector>

#include "semireg/numth.hpp"

namespace ppd_oracle {

using semireg::u128;

constexpr std::uint64_t kSieveBound = 100000;

inline std::vector<std::uint64_t> primes_below(std::uint64_t bound) {
  std::vector<char> composite(bound, 0);
  std::vector<std::uint64_t> ps;
  for (std::uint64_t i = 2; i < bound; ++i) {
    if (composite[i]) continue;
    ps.push_back(i);
    for (std::uint64_t j = i * i; j < bound; j += i) composite[j] = 1;
  }
  return ps;
}

// x^k mod p by k repeated multiplications. Above 64 bits each product is
// formed by repeated addition, which stays below 2^128 for p < 2^127.
inline u128 slow_pow(std::uint64_t x, unsigned k, u128 p) {
  if (p < (u128{1} << 32)) {
    const auto q = static_cast<std::uint64_t>(p);
    std::uint64_t r = 1 % q;
    for (unsigned i = 0; i < k; ++i) r = r * (x % q) % q;
    return r;
  }
  if (p < (u128{1} << 64)) {
    u128 r = 1 % p;
    for (unsigned i = 0; i < k; ++i) r = r * (x % p) % p;
    return r;
  }
  u128 r = 1;
  for (unsigned i = 0; i < k; ++i) {
    u128 next = 0;
    for (std::uint64_t j = 0; j < x; ++j) next = (next + r) % p;
    r = next;
  }
  return r;
}

// True when the order of x mod p is exactly f.
inline bool primitive_for(std::uint64_t x, unsigned f, u128 p) {
  for (unsigned s = 1; s < f; ++s)
    if (slow_pow(x, s, p) == 1 % p) return false;
  return slow_pow(x, f, p) == 1 % p;
}

inline bool trial_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

struct OracleAnswer {
  std::optional<std::uint64_t> smallest_below_bound;
  // Set when x^f - 1 fits and was factored completely.
  std::optional<bool> exists_exact;
};

inline OracleAnswer answer(std::uint64_t x, unsigned f, const std::vector<std::uint64_t>& primes) {
  OracleAnswer ans;
  for (std::uint64_t p : primes)
    if (primitive_for(x, f, p)) {
      ans.smallest_below_bound = p;
      break;
    }
  // Exact answer when x^f - 1 <= 10^12: strip every prime below the bound.
  u128 v = 1;
  for (unsigned i = 0; i < f && v <= 1'000'000'000'000ULL; ++i) v *= x;
  if (v <= 1'000'000'000'000ULL) {
    std::uint64_t rest = static_cast<std::uint64_t>(v) - 1;
    for (std::uint64_t p : primes)
      while (rest > 1 && rest % p == 0) rest /= p;
    // What is left has only prime factors above the bound; split it by trial division.
    bool cofactor_primitive = false;
    for (std::uint64_t d = 2; rest > 1 && d * d <= rest; ++d)
      while (rest % d == 0) {
        cofactor_primitive = cofactor_primitive || primitive_for(x, f, d);
        rest /= d;
      }
    if (rest > 1) cofactor_primitive = cofactor_primitive || primitive_for(x, f, rest);
    ans.exists_exact = ans.smallest_below_bound.has_value() || cofactor_primitive;
  }
  return ans;
}

}  // namespace ppd_oracle

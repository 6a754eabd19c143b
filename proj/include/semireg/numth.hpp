#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace semireg {

using u128 = unsigned __int128;

enum class PpdException { mersenne_f2, two_six, degenerate };

std::string to_string(PpdException kind);

struct PpdResult {
  bool exists = false;
  std::optional<u128> prime;
  std::optional<PpdException> exception_kind;
};

/// Smallest prime r dividing x^f - 1 but no x^s - 1 with s < f.
///
/// Every such prime divides the cyclotomic value Phi_f(x), so only that
/// factor of x^f - 1 is factored; it must stay below 2^127. When no prime
/// exists the result carries the reason: x^f - 1 = 1 (x = 2, f = 1), the
/// pair (2, 6), or f = 2 with x + 1 a power of two.
PpdResult primitive_prime_divisor(std::uint64_t x, unsigned f);

/// A primitive prime divisor of x^f - 1, when there is one, is at least f+1.
bool ppd_lower_bound_check(std::uint64_t x, unsigned f);

/// Least k >= 1 with x^k = 1 mod n; requires gcd(x, n) = 1.
std::uint64_t multiplicative_order(std::uint64_t x, std::uint64_t n);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// Value of the f-th cyclotomic polynomial at x; CapacityError past 2^127.
u128 cyclotomic_value(std::uint64_t x, unsigned f);

bool is_prime(u128 n);
/// Prime factors with multiplicity, ascending.
std::vector<u128> factorize(u128 n);

struct PpdExceptionEntry {
  std::uint64_t x;
  unsigned f;
  PpdException kind;
};

/// All (x, f) in the box with no primitive prime divisor.
std::vector<PpdExceptionEntry> scan_ppd_exceptions(std::uint64_t x_max, unsigned f_max);

std::string to_string(u128 v);

}  // namespace semireg

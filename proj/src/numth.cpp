#include "semireg/numth.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>

#include "semireg/errors.hpp"

namespace semireg {

namespace {

constexpr u128 kU64Limit = static_cast<u128>(UINT64_MAX);
constexpr u128 kValueLimit = static_cast<u128>(1) << 127;

u128 mul_mod(u128 a, u128 b, u128 m) {
  if (m <= kU64Limit) return (a % m) * (b % m) % m;
  // Double-and-add; m < 2^127 keeps every sum below 2^128.
  a %= m;
  b %= m;
  u128 r = 0;
  while (b > 0) {
    if (b & 1) {
      r += a;
      if (r >= m) r -= m;
    }
    a += a;
    if (a >= m) a -= m;
    b >>= 1;
  }
  return r;
}

/// Residues modulo n < 2^64, multiplied through a 128-bit product.
struct Mod64 {
  explicit Mod64(u128 n) : n(static_cast<std::uint64_t>(n)) {}
  u128 to(u128 a) const { return a % n; }
  u128 from(u128 a) const { return a; }
  u128 mul(u128 a, u128 b) const { return a * b % n; }
  u128 add(u128 a, u128 b) const { return a + b >= n ? a + b - n : a + b; }
  std::uint64_t n;
};

/// Montgomery residues modulo an odd n with 2^64 <= n < 2^127, R = 2^128.
struct Mont128 {
  explicit Mont128(u128 modulus) : n(modulus) {
    u128 inv = n;  // n * n = 1 mod 8 for odd n; each Newton step doubles the precision
    for (int i = 0; i < 7; ++i) inv *= 2 - n * inv;
    neg_inv = -inv;
    const u128 r1 = (-n) % n;
    r2 = mul_mod(r1, r1, n);
  }
  u128 reduce(u128 hi, u128 lo) const {
    const u128 m = lo * neg_inv;
    u128 mh, ml;
    wide_mul(m, n, mh, ml);
    u128 t = hi + mh + (lo != 0 ? 1 : 0);  // lo + ml is 0 mod 2^128
    return t >= n ? t - n : t;
  }
  u128 mul(u128 a, u128 b) const {
    u128 hi, lo;
    wide_mul(a, b, hi, lo);
    return reduce(hi, lo);
  }
  u128 to(u128 a) const { return mul(a % n, r2); }
  u128 from(u128 a) const { return reduce(0, a); }
  u128 add(u128 a, u128 b) const { return a + b >= n ? a + b - n : a + b; }

  static void wide_mul(u128 a, u128 b, u128& hi, u128& lo) {
    const u128 mask = kU64Limit;
    const u128 a0 = a & mask, a1 = a >> 64, b0 = b & mask, b1 = b >> 64;
    const u128 p00 = a0 * b0, p01 = a0 * b1, p10 = a1 * b0, p11 = a1 * b1;
    const u128 mid = (p00 >> 64) + (p01 & mask) + (p10 & mask);
    lo = (p00 & mask) | (mid << 64);
    hi = p11 + (p01 >> 64) + (p10 >> 64) + (mid >> 64);
  }

  u128 n, neg_inv, r2;
};

template <class Ring>
u128 pow_in(const Ring& ring, u128 base, u128 exp) {
  u128 r = ring.to(1), b = ring.to(base);
  while (exp > 0) {
    if (exp & 1) r = ring.mul(r, b);
    b = ring.mul(b, b);
    exp >>= 1;
  }
  return ring.from(r);
}

u128 pow_mod128(u128 base, u128 exp, u128 m) {
  if (m == 1) return 0;
  if (m <= kU64Limit) return pow_in(Mod64(m), base, exp);
  if (m & 1) return pow_in(Mont128(m), base, exp);
  u128 r = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return r;
}

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    const u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Brent's cycle search on y -> y^2 + c, with the differences multiplied
// together and tested by one gcd per batch.
template <class Ring>
u128 brent_rho(const Ring& ring, u128 n) {
  constexpr unsigned kBatch = 128;
  for (u128 c = 1;; ++c) {
    const u128 cm = ring.to(c);
    auto step = [&](u128 v) { return ring.add(ring.mul(v, v), cm); };
    u128 y = ring.to(2), x = y, saved = y, q = ring.to(1), d = 1;
    for (std::uint64_t r = 1; d == 1; r <<= 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = step(y);
      for (std::uint64_t k = 0; k < r && d == 1; k += kBatch) {
        saved = y;
        for (std::uint64_t i = 0; i < kBatch && i < r - k; ++i) {
          y = step(y);
          q = ring.mul(q, x > y ? x - y : y - x);
        }
        d = gcd128(ring.from(q), n);
      }
    }
    if (d == n) {
      // The batch overshot; replay it one step at a time.
      do {
        saved = step(saved);
        d = gcd128(ring.from(x > saved ? x - saved : saved - x), n);
      } while (d == 1);
    }
    if (d != n) return d;
  }
}

u128 pollard_rho(u128 n) {
  if (n % 2 == 0) return 2;
  if (n <= kU64Limit) return brent_rho(Mod64(n), n);
  return brent_rho(Mont128(n), n);
}

void factor_into(u128 n, std::vector<u128>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  const u128 d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

using IntPoly = std::vector<long long>;  // low degree first

const IntPoly& cyclotomic_coeffs(unsigned n, std::map<unsigned, IntPoly>& memo) {
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  // T^n - 1 divided by Phi_d for every proper divisor d.
  IntPoly num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d) continue;
    const IntPoly den = cyclotomic_coeffs(d, memo);
    IntPoly quo(num.size() - den.size() + 1, 0);
    for (std::size_t k = quo.size(); k-- > 0;) {
      const long long q = num[k + den.size() - 1];  // den is monic
      quo[k] = q;
      for (std::size_t i = 0; i < den.size(); ++i) num[k + i] -= q * den[i];
    }
    num = std::move(quo);
  }
  return memo.emplace(n, std::move(num)).first->second;
}

using i128 = __int128;

i128 checked_mul_add(i128 acc, i128 x, i128 c) {
  const i128 bound = static_cast<i128>(kValueLimit >> 1);
  if (acc > bound / x || acc < -bound / x) throw CapacityError("cyclotomic value exceeds 2^127");
  const i128 r = acc * x + c;
  if (r > bound || r < -bound) throw CapacityError("cyclotomic value exceeds 2^127");
  return r;
}

// Smallest prime factor of v > 1 whose prime factors are all 1 mod f.
u128 smallest_factor_1_mod(u128 v, unsigned f) {
  constexpr u128 kTrialLimit = 1 << 20;
  for (u128 p = f + 1; p < kTrialLimit && p * p <= v; p += f)
    if (v % p == 0) return p;
  return factorize(v).front();
}

// x = y^k with k as large as possible.
std::pair<std::uint64_t, unsigned> perfect_power(std::uint64_t x) {
  for (unsigned k = 63; k >= 2; --k) {
    auto y = static_cast<std::uint64_t>(std::llround(std::pow(static_cast<double>(x), 1.0 / k)));
    for (std::uint64_t c = (y > 1 ? y - 1 : 1); c <= y + 1; ++c) {
      u128 v = 1;
      for (unsigned i = 0; i < k && v <= x; ++i) v *= c;
      if (c > 1 && v == x) return {c, k};
    }
  }
  return {x, 1};
}

// Phi_f(x) split into smaller factors: when x = y^k it is the product of
// Phi_d(y) over the d dividing kf but no kf/l for a prime l dividing f.
std::vector<u128> cyclotomic_pieces(std::uint64_t x, unsigned f) {
  const auto [y, k] = perfect_power(x);
  if (k == 1) return {cyclotomic_value(x, f)};
  const unsigned kf = k * f;
  auto f_primes = factorize(f);
  f_primes.erase(std::unique(f_primes.begin(), f_primes.end()), f_primes.end());
  std::vector<u128> pieces;
  u128 product = 1;
  for (unsigned d = 1; d <= kf; ++d) {
    if (kf % d) continue;
    const bool fresh = std::all_of(f_primes.begin(), f_primes.end(), [&](u128 l) {
      return (kf / static_cast<unsigned>(l)) % d != 0;
    });
    if (!fresh) continue;
    pieces.push_back(cyclotomic_value(y, d));
    product *= pieces.back();
  }
  if (product != cyclotomic_value(x, f)) throw ContractViolation("cyclotomic_pieces: product mismatch");
  return pieces;
}

bool is_power_of_two(std::uint64_t v) { return v != 0 && (v & (v - 1)) == 0; }

}  // namespace

std::string to_string(PpdException kind) {
  switch (kind) {
    case PpdException::mersenne_f2: return "mersenne_f2";
    case PpdException::two_six: return "two_six";
    case PpdException::degenerate: return "degenerate";
  }
  return "unknown";
}

std::string to_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 0) throw ParameterError("pow_mod: zero modulus");
  return static_cast<std::uint64_t>(pow_mod128(base, exp, mod));
}

bool is_prime(u128 n) {
  if (n < 2) return false;
  static constexpr unsigned kSmall[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71};
  for (unsigned p : kSmall) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  u128 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic below 3.3e24 with the first 13 prime bases; the remaining
  // bases make a false positive above that astronomically unlikely.
  for (unsigned a : kSmall) {
    u128 x = pow_mod128(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = pow_mod128(x, 2, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<u128> factorize(u128 n) {
  if (n == 0) throw ParameterError("factorize: zero");
  std::vector<u128> out;
  for (unsigned p = 2; p < 1000 && static_cast<u128>(p) * p <= n; ++p) {
    while (n % p == 0) {
      out.push_back(p);
      n /= p;
    }
  }
  factor_into(n, out);
  std::sort(out.begin(), out.end());
  return out;
}

u128 cyclotomic_value(std::uint64_t x, unsigned f) {
  if (f == 0) throw ParameterError("cyclotomic_value: f must be positive");
  if (f > 4096) throw CapacityError("cyclotomic_value: f too large");
  std::map<unsigned, IntPoly> memo;
  const IntPoly& c = cyclotomic_coeffs(f, memo);
  i128 acc = 0;
  for (std::size_t k = c.size(); k-- > 0;) acc = checked_mul_add(acc, static_cast<i128>(x), c[k]);
  if (acc < 0) throw ContractViolation("cyclotomic_value: negative value");
  return static_cast<u128>(acc);
}

PpdResult primitive_prime_divisor(std::uint64_t x, unsigned f) {
  if (x < 2) throw ParameterError("primitive_prime_divisor: x must be at least 2");
  if (f < 1) throw ParameterError("primitive_prime_divisor: f must be at least 1");
  PpdResult r;
  if (x == 2 && f == 1) {
    r.exception_kind = PpdException::degenerate;
    return r;
  }
  // Primes dividing f are never primitive, and every other prime factor of
  // Phi_f(x) is primitive and congruent to 1 mod f.
  const auto f_primes = factorize(f);
  std::optional<u128> smallest;
  for (u128 piece : cyclotomic_pieces(x, f)) {
    for (u128 p : f_primes)
      while (piece % p == 0) piece /= p;
    if (piece == 1) continue;
    const u128 p = smallest_factor_1_mod(piece, f);
    if (!smallest || p < *smallest) smallest = p;
  }
  if (smallest) {
    u128 power = 1;
    for (unsigned s = 1; s < f; ++s) {
      power = mul_mod(power, x, *smallest);
      if (power == 1) throw ContractViolation("primitive_prime_divisor: cofactor has a non-primitive prime");
    }
    r.exists = true;
    r.prime = smallest;
    return r;
  }
  if (x == 2 && f == 6)
    r.exception_kind = PpdException::two_six;
  else if (f == 2 && is_power_of_two(x + 1))
    r.exception_kind = PpdException::mersenne_f2;
  return r;
}

bool ppd_lower_bound_check(std::uint64_t x, unsigned f) {
  const PpdResult r = primitive_prime_divisor(x, f);
  return !r.exists || *r.prime >= static_cast<u128>(f) + 1;
}

std::uint64_t multiplicative_order(std::uint64_t x, std::uint64_t n) {
  if (n == 0) throw ParameterError("multiplicative_order: zero modulus");
  if (std::gcd(x, n) != 1) throw ParameterError("multiplicative_order: gcd(x, n) != 1");
  if (n == 1) return 1;
  const u128 base = x % n;
  u128 acc = base;
  for (std::uint64_t k = 1; k <= n; ++k) {
    if (acc == 1) return k;
    acc = acc * base % n;
  }
  throw ContractViolation("multiplicative_order: no order found");
}

std::vector<PpdExceptionEntry> scan_ppd_exceptions(std::uint64_t x_max, unsigned f_max) {
  std::vector<PpdExceptionEntry> out;
  for (std::uint64_t x = 2; x <= x_max; ++x)
    for (unsigned f = 1; f <= f_max; ++f) {
      const PpdResult r = primitive_prime_divisor(x, f);
      if (r.exists) continue;
      if (!r.exception_kind) throw ContractViolation("no primitive prime divisor outside the known exceptions");
      out.push_back({x, f, *r.exception_kind});
    }
  return out;
}

}  // namespace semireg

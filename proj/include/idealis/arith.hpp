#pragma once

// Checked 63-bit integer arithmetic: gcd/lcm, deterministic primality,
// factorization and divisor enumeration.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "idealis/error.hpp"

namespace idealis {

/// Nonnegative integer below 2^63. All library arithmetic on Naturals is
/// checked; results at or above the limit raise OverflowError.
using Natural = std::uint64_t;

inline constexpr Natural kNaturalLimit = Natural{1} << 63;

struct PrimePower {
  Natural prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// value = prod prime^exponent, primes strictly increasing.
struct IntFactorization {
  Natural value = 1;
  std::vector<PrimePower> factors;

  std::size_t distinct_primes() const { return factors.size(); }
  friend bool operator==(const IntFactorization&, const IntFactorization&) = default;
};

inline Natural checked_add(Natural a, Natural b) {
  if (a >= kNaturalLimit || b >= kNaturalLimit - a) {
    throw OverflowError("addition overflow: " + std::to_string(a) + " + " + std::to_string(b));
  }
  return a + b;
}

inline Natural checked_mul(Natural a, Natural b) {
  if (a == 0 || b == 0) return 0;
  if (a >= kNaturalLimit || b >= kNaturalLimit || a > (kNaturalLimit - 1) / b) {
    throw OverflowError("multiplication overflow: " + std::to_string(a) + " * " + std::to_string(b));
  }
  return a * b;
}

inline Natural checked_pow(Natural base, unsigned exponent) {
  Natural result = 1;
  for (unsigned i = 0; i < exponent; ++i) result = checked_mul(result, base);
  return result;
}

inline Natural gcd_int(Natural a, Natural b) { return std::gcd(a, b); }

inline Natural lcm_int(Natural a, Natural b) {
  if (a == 0 || b == 0) throw DomainError("lcm of zero");
  return checked_mul(a / gcd_int(a, b), b);
}

/// [a, b, c] = [[a, b], c]
inline Natural lcm3_int(Natural a, Natural b, Natural c) { return lcm_int(lcm_int(a, b), c); }

namespace detail {

inline Natural mul_mod(Natural a, Natural b, Natural m) {
  return static_cast<Natural>(static_cast<unsigned __int128>(a) * b % m);
}

inline Natural pow_mod(Natural base, Natural exp, Natural m) {
  Natural result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

inline constexpr Natural kTrialLimit = 1'000'000;

// Pollard-Brent; n is odd, composite and has no factor <= kTrialLimit.
inline Natural find_factor(Natural n) {
  for (Natural c = 1;; ++c) {
    auto f = [&](Natural x) { return (mul_mod(x, x, n) + c) % n; };
    Natural y = 2, x = 2, g = 1, q = 1, ys = 2;
    Natural r = 1;
    constexpr Natural kBatch = 128;
    do {
      x = y;
      for (Natural i = 0; i < r; ++i) y = f(y);
      Natural k = 0;
      do {
        ys = y;
        for (Natural i = 0; i < std::min(kBatch, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += kBatch;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

}  // namespace detail

/// Deterministic Miller-Rabin; the base set is exact for all 64-bit inputs.
inline bool is_prime(Natural n) {
  if (n < 2) return false;
  for (Natural p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  Natural d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (Natural a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    Natural x = detail::pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = detail::mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// Trial division up to 10^6, then Miller-Rabin on the cofactor and
/// Pollard-Brent splitting when it is composite.
inline IntFactorization factor_int(Natural n) {
  if (n == 0) throw DomainError("factor_int: zero has no factorization");
  if (n >= kNaturalLimit) throw OverflowError("factor_int: input exceeds 2^63");
  IntFactorization out;
  out.value = n;
  Natural rest = n;
  auto take = [&](Natural p) {
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e > 0) out.factors.push_back({p, e});
  };
  take(2);
  for (Natural p = 3; p <= detail::kTrialLimit && p * p <= rest; p += 2) take(p);
  if (rest == 1) return out;
  std::vector<Natural> large;
  std::vector<Natural> pending{rest};
  while (!pending.empty()) {
    Natural m = pending.back();
    pending.pop_back();
    if (is_prime(m)) {
      large.push_back(m);
      continue;
    }
    Natural d = detail::find_factor(m);
    pending.push_back(d);
    pending.push_back(m / d);
  }
  std::sort(large.begin(), large.end());
  for (std::size_t i = 0; i < large.size();) {
    std::size_t j = i;
    while (j < large.size() && large[j] == large[i]) ++j;
    out.factors.push_back({large[i], static_cast<unsigned>(j - i)});
    i = j;
  }
  return out;
}

/// Product of the distinct primes of n; radical_int(1) = 1.
inline Natural radical_int(Natural n) {
  Natural r = 1;
  for (const auto& pp : factor_int(n).factors) r *= pp.prime;
  return r;
}

inline Natural multiply_out(const IntFactorization& f) {
  Natural r = 1;
  for (const auto& pp : f.factors) r = checked_mul(r, checked_pow(pp.prime, pp.exponent));
  return r;
}

/// Positive divisors of n in increasing order.
inline std::vector<Natural> divisors(Natural n) {
  const auto f = factor_int(n);
  std::vector<Natural> out{1};
  for (const auto& pp : f.factors) {
    const std::size_t base = out.size();
    Natural power = 1;
    for (unsigned e = 1; e <= pp.exponent; ++e) {
      power *= pp.prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace idealis

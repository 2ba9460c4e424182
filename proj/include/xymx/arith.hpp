#pragma once

// Exact integer and rational primitives shared by every other module.
// Integer is GMP-backed and unbounded; Rational is kept in lowest terms
// with a positive denominator (canonical zero is 0/1).

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

namespace xymx {

using Integer = mpz_class;
using Rational = mpq_class;

// num/den reduced to lowest terms, den > 0.  Throws on den == 0.
Rational make_rational(const Integer& num, const Integer& den);

// Nonnegative gcd; gcd(0, 0) = 0.
Integer gcd(const Integer& a, const Integer& b);

// Largest e with p^e | x.  Requires p >= 2 and x != 0.
long valuation(const Integer& p, const Integer& x);

// floor(x^(1/k)) for x >= 0, k >= 1.
Integer iroot(const Integer& x, unsigned long k);

// Exact k-th root when x >= 1 is a perfect k-th power, else nullopt.
std::optional<Integer> is_kth_power(const Integer& x, unsigned long k);

// base^exp as an exact rational when it is one: with exp = a/b in lowest
// terms, requires numerator and denominator of base to be b-th powers.
std::optional<Rational> rational_power_is_rational(const Rational& base,
                                                   const Rational& exp);

// base^exp mod modulus in [0, modulus).  Requires exp >= 0, modulus >= 2.
Integer modpow(const Integer& base, const Integer& exp, const Integer& modulus);

// Deterministic for every n < 2^64 (fixed Miller-Rabin witness base);
// strong BPSW-style probable-prime test beyond that range.
bool is_prime(const Integer& n);
bool is_prime_u64(std::uint64_t n);

// Periodic continued fraction of sqrt(D), D >= 2 nonsquare.
// The period is nonempty and its last term equals 2*a0.
struct CFExpansion {
  Integer a0;
  std::vector<Integer> period;
};
CFExpansion sqrt_cf(const Integer& D);

// 64-bit modular helpers for the sieve and search hot paths.
std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// Nonnegative remainder of a mod m (m >= 1).
Integer mod_nonneg(const Integer& a, const Integer& m);

}  // namespace xymx

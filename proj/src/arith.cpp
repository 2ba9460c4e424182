#include "xymx/arith.hpp"

#include <climits>
#include <stdexcept>

namespace xymx {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

long valuation(const Integer& p, const Integer& x) {
  if (p < 2) throw std::domain_error("valuation: p must be >= 2");
  if (x == 0) throw std::domain_error("valuation: x must be nonzero");
  Integer reduced;
  return static_cast<long>(
      mpz_remove(reduced.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
}

Integer iroot(const Integer& x, unsigned long k) {
  if (x < 0) throw std::domain_error("iroot: x must be >= 0");
  if (k < 1) throw std::domain_error("iroot: k must be >= 1");
  Integer r;
  mpz_root(r.get_mpz_t(), x.get_mpz_t(), k);
  return r;
}

std::optional<Integer> is_kth_power(const Integer& x, unsigned long k) {
  if (x < 1) throw std::domain_error("is_kth_power: x must be >= 1");
  if (k < 1) throw std::domain_error("is_kth_power: k must be >= 1");
  Integer r;
  int exact = mpz_root(r.get_mpz_t(), x.get_mpz_t(), k);
  if (!exact) return std::nullopt;
  return r;
}

std::optional<Rational> rational_power_is_rational(const Rational& base,
                                                   const Rational& exp) {
  if (base <= 0) throw std::domain_error("rational_power: base must be > 0");
  const Integer& a = exp.get_num();  // canonical: den > 0, lowest terms
  const Integer& b = exp.get_den();
  if (base == 1) return Rational(1);
  if (!b.fits_ulong_p() || !a.fits_slong_p())
    throw std::overflow_error("rational_power: exponent out of range");
  unsigned long bk = b.get_ui();
  auto rn = is_kth_power(base.get_num(), bk);
  auto rd = is_kth_power(base.get_den(), bk);
  if (!rn || !rd) return std::nullopt;
  long ae = a.get_si();
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), rn->get_mpz_t(),
             static_cast<unsigned long>(ae < 0 ? -ae : ae));
  mpz_pow_ui(den.get_mpz_t(), rd->get_mpz_t(),
             static_cast<unsigned long>(ae < 0 ? -ae : ae));
  return ae < 0 ? make_rational(den, num) : make_rational(num, den);
}

Integer modpow(const Integer& base, const Integer& exp, const Integer& modulus) {
  if (modulus < 2) throw std::domain_error("modpow: modulus must be >= 2");
  if (exp < 0) throw std::domain_error("modpow: exponent must be >= 0");
  Integer r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

Integer mod_nonneg(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod_u64(r, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return r;
}

namespace {

// Witness base valid for every n < 3.3 * 10^24, in particular below 2^64.
constexpr std::uint64_t kMrWitnesses[] = {2,  3,  5,  7,  11, 13,
                                          17, 19, 23, 29, 31, 37};

bool miller_rabin_u64(std::uint64_t n) {
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kMrWitnesses) {
    if (a % n == 0) continue;
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : kMrWitnesses) {
    if (n % p == 0) return n == p;
  }
  return miller_rabin_u64(n);
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (n.fits_ulong_p() && sizeof(unsigned long) == 8)
    return is_prime_u64(n.get_ui());
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

CFExpansion sqrt_cf(const Integer& D) {
  if (D < 2) throw std::domain_error("sqrt_cf: D must be >= 2");
  if (mpz_perfect_square_p(D.get_mpz_t()))
    throw std::domain_error("sqrt_cf: D must not be a perfect square");

  CFExpansion cf;
  cf.a0 = iroot(D, 2);
  // State (m, d): the tail is (sqrt(D) + m) / d; both stay integral.
  Integer m = 0, d = 1, a = cf.a0;
  const Integer stop = 2 * cf.a0;
  do {
    m = d * a - m;
    d = (D - m * m) / d;
    a = (cf.a0 + m) / d;
    cf.period.push_back(a);
  } while (a != stop);
  return cf;
}

}  // namespace xymx

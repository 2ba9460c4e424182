#include "xymx/hasse.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace xymx {

namespace {

using u64 = std::uint64_t;

// Flags over residues alpha = x^k mod Q: bit 0 set when alpha is reached by
// some x with p not dividing x, bit 1 when reached with p | x.
std::vector<std::uint8_t> power_value_flags(long k, u64 p, u64 Q) {
  std::vector<std::uint8_t> flags(Q, 0);
  for (u64 x = 0; x < Q; ++x) {
    std::uint8_t bit = (x % p == 0) ? 2 : 1;
    flags[powmod_u64(x, static_cast<u64>(k), Q)] |= bit;
  }
  return flags;
}

}  // namespace

LocalReport local_solvable(long k, const Integer& m, const Integer& c,
                           const Integer& p, int e,
                           const Integer& modulus_cap) {
  if (k < 1) throw std::domain_error("local_solvable: k must be >= 1");
  if (e < 1) throw std::domain_error("local_solvable: e must be >= 1");
  if (!is_prime(p)) throw std::domain_error("local_solvable: p must be prime");

  Integer modulus;
  mpz_pow_ui(modulus.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
  if (modulus > modulus_cap)
    throw std::domain_error("local_solvable: p^e exceeds the modulus cap");

  u64 Q = modulus.get_ui();
  u64 pp = p.get_ui();
  u64 m_mod = mpz_fdiv_ui(m.get_mpz_t(), Q);
  u64 c_mod = mpz_fdiv_ui(c.get_mpz_t(), Q);

  std::vector<std::uint8_t> xs = power_value_flags(k, pp, Q);

  // x^k - m y^k = c with not both x, y divisible by p.
  bool solvable = false;
  for (u64 y = 0; y < Q && !solvable; ++y) {
    u64 beta = mulmod_u64(m_mod, powmod_u64(y, static_cast<u64>(k), Q), Q);
    u64 alpha = (c_mod + beta) % Q;
    std::uint8_t f = xs[alpha];
    if (y % pp == 0)
      solvable = (f & 1) != 0;  // y divisible: need p coprime to x
    else
      solvable = f != 0;
  }
  return LocalReport{p, e, solvable};
}

HasseVerdict hasse_scan(long k, const Integer& m, const Integer& c,
                        const HasseConfig& cfg) {
  if (k < 2) throw std::domain_error("hasse_scan: k must be >= 2");
  HasseVerdict verdict;
  verdict.prime_cap = cfg.prime_cap;
  verdict.exp_cap = cfg.exp_cap;
  verdict.global_bound = cfg.global_bound;

  for (Integer p = 2; p <= cfg.prime_cap; ++p) {
    if (!is_prime(p)) continue;
    Integer modulus = p;
    for (int e = 1; modulus <= cfg.exp_cap; ++e, modulus *= p) {
      LocalReport report = local_solvable(k, m, c, p, e, cfg.exp_cap);
      if (!report.solvable) {
        verdict.status = HasseStatus::LocalObstruction;
        verdict.obstruction = report;
        return verdict;
      }
    }
  }

  // Unrestricted integer search: both signs, y = 0 allowed, no coprimality.
  if (!cfg.global_bound.fits_ulong_p())
    throw std::overflow_error("hasse_scan: global bound too large");
  u64 bound = cfg.global_bound.get_ui();
  Integer yk, w;
  for (u64 y = 0; y <= bound; ++y) {
    mpz_ui_pow_ui(yk.get_mpz_t(), y, static_cast<unsigned long>(k));
    for (int sy = 0; sy < (y == 0 ? 1 : 2); ++sy) {
      if (sy == 1 && k % 2 == 0) break;  // even k: (-y)^k = y^k
      Integer yy(static_cast<unsigned long>(y));
      Integer myk = m * yk;
      if (sy == 1) {
        yy = -yy;  // odd k: y < 0 flips the term
        myk = -myk;
      }
      w = myk + c;
      if (w == 0) {
        verdict.status = HasseStatus::GloballySolvable;
        verdict.witness = {Integer(0), yy};
        return verdict;
      }
      if (w < 0 && k % 2 == 0) continue;
      Integer aw = abs(w);
      Integer root;
      if (!mpz_root(root.get_mpz_t(), aw.get_mpz_t(),
                    static_cast<unsigned long>(k)))
        continue;
      Integer x = root;
      if (w < 0) x = -x;
      verdict.status = HasseStatus::GloballySolvable;
      verdict.witness = {x, yy};
      return verdict;
    }
  }

  verdict.status = HasseStatus::CandidateHasseFailure;
  return verdict;
}

}  // namespace xymx

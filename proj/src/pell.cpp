#include "xymx/pell.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace xymx {

namespace {

// Sign of x + y*sqrt(D) in exact arithmetic.
int element_sign(const Integer& x, const Integer& y, const Integer& D) {
  if (x >= 0 && y >= 0) return (x == 0 && y == 0) ? 0 : 1;
  if (x <= 0 && y <= 0) return -1;
  // Mixed signs: compare x^2 with D y^2.
  Integer lhs = x * x, rhs = D * y * y;
  if (x > 0) return lhs > rhs ? 1 : -1;  // y < 0
  return rhs > lhs ? 1 : -1;             // x < 0, y > 0
}

void mul_unit(Integer& x, Integer& y, const PellUnit& u) {
  Integer nx = x * u.u1 + u.D * y * u.v1;
  Integer ny = x * u.v1 + y * u.u1;
  x = std::move(nx);
  y = std::move(ny);
}

void div_unit(Integer& x, Integer& y, const PellUnit& u) {
  Integer nx = x * u.u1 - u.D * y * u.v1;
  Integer ny = y * u.u1 - x * u.v1;
  x = std::move(nx);
  y = std::move(ny);
}

}  // namespace

PellUnit fundamental_unit(const Integer& D) {
  if (D < 2 || mpz_perfect_square_p(D.get_mpz_t()))
    throw std::domain_error("fundamental_unit: D must be >= 2 and nonsquare");

  CFExpansion cf = sqrt_cf(D);
  const std::size_t L = cf.period.size();

  // Convergent p/q just before the period closes solves x^2 - D y^2 = (-1)^L.
  Integer p_prev = 1, p = cf.a0;
  Integer q_prev = 0, q = 1;
  for (std::size_t i = 0; i + 1 < L; ++i) {
    const Integer& a = cf.period[i];
    Integer np = a * p + p_prev;
    Integer nq = a * q + q_prev;
    p_prev = std::move(p);
    q_prev = std::move(q);
    p = std::move(np);
    q = std::move(nq);
  }

  PellUnit unit{D, p, q};
  if (L % 2 == 1) {
    // p^2 - D q^2 = -1; square it to reach the +1 unit.
    unit.u1 = p * p + D * q * q;
    unit.v1 = 2 * p * q;
  }
  if (unit.u1 * unit.u1 - D * unit.v1 * unit.v1 != 1)
    throw std::logic_error("fundamental_unit: convergent check failed");
  return unit;
}

std::vector<PellRep> representatives(const Integer& D, const Integer& N) {
  if (N == 0) throw std::domain_error("representatives: N must be nonzero");
  PellUnit unit = fundamental_unit(D);

  // Nagell bound on y for the fundamental solution of each class:
  //   N > 0:  y^2 <= v1^2 N / (2 (u1 + 1))
  //   N < 0:  y^2 <= v1^2 |N| / (2 (u1 - 1))
  Integer absN = abs(N);
  Integer num = unit.v1 * unit.v1 * absN;
  Integer den = 2 * (N > 0 ? unit.u1 + 1 : unit.u1 - 1);
  Integer ymax = iroot(num / den, 2);

  std::set<std::pair<Integer, Integer>> anchors;
  for (Integer y = 0; y <= ymax; ++y) {
    Integer t = N + D * y * y;
    if (t < 0) continue;
    if (!mpz_perfect_square_p(t.get_mpz_t())) continue;
    Integer x = iroot(t, 2);

    for (int sx = 0; sx < 2; ++sx) {
      Integer a = sx == 0 ? x : -x;
      Integer b = y;
      if (sx == 1 && x == 0) continue;
      // Work inside the positive half of the class.
      if (element_sign(a, b, D) < 0) {
        a = -a;
        b = -b;
      }
      while (a < 0 || b < 0) mul_unit(a, b, unit);
      // Walk down to the minimal nonnegative element of the chain.
      for (;;) {
        Integer da = a, db = b;
        div_unit(da, db, unit);
        if (da < 0 || db < 0) break;
        a = std::move(da);
        b = std::move(db);
      }
      anchors.emplace(a, b);
    }
  }

  std::vector<PellRep> reps;
  reps.reserve(anchors.size());
  for (const auto& [x0, y0] : anchors) reps.push_back(PellRep{x0, y0, D, N});
  std::sort(reps.begin(), reps.end(), [](const PellRep& l, const PellRep& r) {
    return l.x0 != r.x0 ? l.x0 < r.x0 : l.y0 < r.y0;
  });
  return reps;
}

std::vector<std::pair<Integer, Integer>> generate(const PellFamily& family,
                                                  std::size_t count) {
  const PellRep& rep = family.rep;
  const PellUnit& unit = family.unit;
  if (rep.D != unit.D)
    throw std::invalid_argument("generate: rep and unit disagree on D");
  if (unit.u1 * unit.u1 - unit.D * unit.v1 * unit.v1 != 1)
    throw std::invalid_argument("generate: invalid unit");
  if (rep.x0 * rep.x0 - rep.D * rep.y0 * rep.y0 != rep.N)
    throw std::invalid_argument("generate: representative off its conic");

  std::vector<std::pair<Integer, Integer>> out;
  out.reserve(count);
  Integer x = rep.x0, y = rep.y0;
  for (std::size_t i = 0; i < count; ++i) {
    out.emplace_back(x, y);
    mul_unit(x, y, unit);
  }
  return out;
}

std::optional<S2EmptyReason> s2_empty_by_lemma(const Integer& m) {
  if (m < 2) throw std::domain_error("s2_empty_by_lemma: m must be >= 2");
  long v2 = mpz_scan1(m.get_mpz_t(), 0);
  if (v2 % 2 == 1) return S2EmptyReason::ParityLemma;
  Integer odd_part = m >> static_cast<unsigned long>(v2);
  if (mod_nonneg(odd_part, 4) == 1) return S2EmptyReason::Mod4Lemma;
  return std::nullopt;
}

int petr(const Integer& p) {
  if (!is_prime(p) || mod_nonneg(p, 4) != 3)
    throw std::domain_error("petr: p must be a prime congruent to 3 mod 4");
  bool plus = !representatives(p, 2).empty();
  bool minus = !representatives(p, -2).empty();
  if (plus == minus)
    throw std::logic_error("petr: exactly one of +-2 must be representable");
  return plus ? 2 : -2;
}

}  // namespace xymx

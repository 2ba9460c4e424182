#include "xymx/classify.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "xymx/verify.hpp"

namespace xymx {

namespace {

std::vector<Integer> divisors_of(const Integer& m) {
  if (m > Integer("1000000000000000000"))
    throw std::overflow_error("divisor enumeration: m too large");
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    small.push_back(d);
    if (d * d != m) large.push_back(m / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Integer int_pow(const Integer& b, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

}  // namespace

BackMapOutcome back_map(const Candidate& c, const Integer& u, const Integer& v) {
  if (c.k < 1) throw std::domain_error("back_map: k must be >= 1");
  if (u < 1 || v < 1) throw std::domain_error("back_map: u, v must be >= 1");
  if (gcd(u, v) != 1) throw std::domain_error("back_map: u, v must be coprime");
  if (c.d * c.m_prime != c.m)
    throw std::domain_error("back_map: candidate has d m' != m");

  Integer uk = int_pow(u, static_cast<unsigned long>(c.k));
  Integer vk = int_pow(v, static_cast<unsigned long>(c.k));
  if (uk - c.m * vk != c.target())
    throw std::domain_error("back_map: (u, v) does not satisfy the candidate");

  BackMapOutcome out;
  out.trace.u = u;
  out.trace.v = v;
  out.trace.candidate = c;

  if (uk % c.m_prime != 0) {
    out.reject = BackMapReject::NotDivisible;
    return out;
  }
  Integer a = uk / c.m_prime;
  Integer b = c.d * vk;
  out.trace.a = a;
  out.trace.b = b;

  // a - b = sign * k is forced by the key equation.
  if (c.m_prime * (a - b) != uk - c.m * vk || abs(a - b) != c.k)
    throw std::logic_error("back_map: trace invariant violated");

  if (gcd(a, b) != 1) {
    out.reject = BackMapReject::NotCoprime;
    return out;
  }
  if (gcd(b, c.m) != c.d) {
    out.reject = BackMapReject::DMismatch;
    return out;
  }

  // x = (u/v)^(k b / (a-b)), y = (u/v)^(k a / (a-b)); with a - b = sign k
  // the exponents are sign*b and sign*a.
  Integer e_x = c.sign * b;
  Integer e_y = c.sign * a;
  out.solution = canonical(PowerSolution{make_rational(u, v), e_x, e_y});
  return out;
}

long k_bound(const Integer& m) {
  if (m < 2) throw std::domain_error("k_bound: m must be >= 2");
  if (m == 2) return 600;
  long double lm = logl(m.get_d());
  return static_cast<long>(floorl(10676.0L * lm));
}

std::vector<Candidate> candidates(const Integer& m, long k) {
  if (m < 2) throw std::domain_error("candidates: m must be >= 2");
  if (k < 1) throw std::domain_error("candidates: k must be >= 1");
  std::vector<Candidate> out;
  for (const Integer& d : divisors_of(m)) {
    out.push_back(Candidate{m, k, d, m / d, +1});
    out.push_back(Candidate{m, k, d, m / d, -1});
  }
  return out;
}

PowerSolution EulerFamily::element(long n) const {
  if (n < n_min()) throw std::domain_error("EulerFamily: n below branch domain");
  if (branch == Branch::Plus) {
    // x = (m + m/n)^n, y = (m + m/n)^(n+1)
    return canonical(
        PowerSolution{make_rational(m * (n + 1), Integer(n)), Integer(n), Integer(n + 1)});
  }
  // x = (m - m/n)^(-n), y = (m - m/n)^(1-n)
  return canonical(PowerSolution{make_rational(m * (n - 1), Integer(n)),
                                 Integer(-n), Integer(1 - n)});
}

std::vector<EulerFamily> s1_families(const Integer& m) {
  if (m < 2) throw std::domain_error("s1_families: m must be >= 2");
  return {EulerFamily{m, EulerFamily::Branch::Plus},
          EulerFamily{m, EulerFamily::Branch::Minus}};
}

namespace {

// Back-map acceptance for a k=2 chain element depends only on v mod 2m':
// gcd(a, b) = gcd(2, d v^2) requires d and v odd, and gcd(b, m) = d
// requires gcd(v, m') = 1.
bool s2_residue_accepts(const Integer& d, const Integer& m_prime,
                        const Integer& v_mod) {
  if (mod_nonneg(d, 2) == 0) return false;
  if (mod_nonneg(v_mod, 2) == 0) return false;
  return gcd(mod_nonneg(v_mod, m_prime), m_prime) == 1;  // gcd(0,1) = 1
}

}  // namespace

S2Result classify_s2(const Integer& m, long materialize) {
  if (m < 2) throw std::domain_error("classify_s2: m must be >= 2");

  if (auto reason = s2_empty_by_lemma(m)) {
    return S2Result{*reason == S2EmptyReason::ParityLemma
                        ? S2Verdict::EmptyParityLemma
                        : S2Verdict::EmptyMod4Lemma,
                    {}};
  }
  // Every perfect square has odd part 1 mod 4, so m is nonsquare here.
  if (mpz_perfect_square_p(m.get_mpz_t()))
    throw std::logic_error("classify_s2: square m escaped the lemmas");

  PellUnit unit = fundamental_unit(m);
  S2Result result;
  result.verdict = S2Verdict::EmptyRepSearch;

  for (const Candidate& cand : candidates(m, 2)) {
    if (mod_nonneg(cand.d, 2) == 0) continue;  // gcd(a, b) would be even
    Integer N = cand.target();
    for (const PellRep& rep : representatives(m, N)) {
      // Acceptance pattern along the chain is periodic mod 2 m'.
      Integer modulus = 2 * cand.m_prime;
      if (modulus > 100000)
        throw std::overflow_error("classify_s2: m too large for the filter");
      Integer su = mod_nonneg(rep.x0, modulus);
      Integer sv = mod_nonneg(rep.y0, modulus);
      const Integer su0 = su, sv0 = sv;
      long period = 0;
      bool alive = false;
      // The state map is a permutation of (Z/2m')^2, so the orbit closes
      // within modulus^2 steps.
      const long long period_cap =
          static_cast<long long>(modulus.get_ui()) * modulus.get_ui() + 16;
      do {
        if (s2_residue_accepts(cand.d, cand.m_prime, sv)) alive = true;
        Integer nu = mod_nonneg(su * unit.u1 + m * sv * unit.v1, modulus);
        Integer nv = mod_nonneg(su * unit.v1 + sv * unit.u1, modulus);
        su = nu;
        sv = nv;
        ++period;
        if (period > period_cap)
          throw std::logic_error("classify_s2: chain period not found");
      } while (su != su0 || sv != sv0);
      if (!alive) continue;

      S2Family family;
      family.candidate = cand;
      family.rep = rep;
      family.unit = unit;
      family.period = period;

      long want_chain = std::max<long>(materialize, 5);
      family.chain = generate(PellFamily{rep, unit},
                              static_cast<std::size_t>(want_chain));

      // First `materialize` accepted nontrivial solutions.
      Integer cu = rep.x0, cv = rep.y0;
      long produced = 0, steps = 0;
      const long step_cap = (materialize + 3) * period + 8;
      while (produced < materialize && steps < step_cap) {
        if (cu >= 1 && cv >= 1 && gcd(cu, cv) == 1) {
          BackMapOutcome bm = back_map(cand, cu, cv);
          if (bm.accepted() && !(bm.solution->base == 1)) {
            family.solutions.push_back(*bm.solution);
            ++produced;
          }
        }
        Integer nu = cu * unit.u1 + m * cv * unit.v1;
        Integer nv = cu * unit.v1 + cv * unit.u1;
        cu = std::move(nu);
        cv = std::move(nv);
        ++steps;
      }
      result.families.push_back(std::move(family));
      result.verdict = S2Verdict::Infinite;
    }
  }
  return result;
}

SolutionSet classify(const Integer& m, const ClassifyConfig& cfg) {
  if (m < 2) throw std::domain_error("classify: m must be >= 2");
  long kmin = cfg.k_min.value_or(3);
  long kmax = cfg.k_max.value_or(k_bound(m));
  if (kmin < 3 || kmax < kmin)
    throw std::domain_error("classify: need 3 <= k_min <= k_max");

  SolutionSet set;
  set.m = m;
  set.config = cfg;
  set.k_min = kmin;
  set.k_max = kmax;
  set.s0 = trivial_solution();
  set.s1 = s1_families(m);
  set.s2 = classify_s2(m, cfg.family_count);

  DecideConfig dc;
  dc.sieve.n_max = cfg.sieve_n_max;
  dc.sieve.prime_power_cap = cfg.prime_power_cap;
  dc.search_bound = cfg.search_bound;

  std::set<std::pair<std::pair<Integer, Integer>, std::pair<Integer, Integer>>>
      seen;
  for (long k = kmin; k <= kmax; ++k) {
    ThueOutcome outcome = decide(k, m, dc);
    for (const TargetResolution& tr : outcome.survivors) {
      Integer m_prime = abs(tr.c) / k;
      Candidate cand{m, k, m / m_prime, m_prime, tr.c > 0 ? 1 : -1};
      for (const auto& [u, v] : tr.solutions) {
        BackMapOutcome bm = back_map(cand, u, v);
        if (!bm.accepted()) {
          set.rejected.push_back(bm);
          continue;
        }
        if (bm.solution->base == 1) continue;  // (1,1) lives in S_0
        auto key = std::make_pair(
            std::make_pair(bm.solution->base.get_num(),
                           bm.solution->base.get_den()),
            std::make_pair(bm.solution->e_x, bm.solution->e_y));
        if (seen.insert(key).second) set.sporadics.push_back(*bm.solution);
      }
      if (!tr.complete)
        set.unresolved.push_back(UnresolvedEquation{
            k, tr.c, tr.search_bound, !tr.solutions.empty()});
    }
    set.outcomes.push_back(std::move(outcome));
  }

  std::sort(set.sporadics.begin(), set.sporadics.end(), solution_less);
  std::sort(set.unresolved.begin(), set.unresolved.end(),
            [](const UnresolvedEquation& a, const UnresolvedEquation& b) {
              return a.k != b.k ? a.k < b.k : a.c < b.c;
            });
  return set;
}

std::vector<PowerSolution> oracle_scan(const Integer& m, long u_max,
                                       long k_max) {
  if (m < 2) throw std::domain_error("oracle_scan: m must be >= 2");
  std::vector<PowerSolution> out;
  for (long k = 1; k <= k_max; ++k) {
    std::vector<Candidate> cands = candidates(m, k);
    for (long u = 1; u <= u_max; ++u) {
      for (long v = 1; v <= u_max; ++v) {
        if (std::gcd(u, v) != 1) continue;
        Integer lhs = int_pow(Integer(u), static_cast<unsigned long>(k)) -
                      m * int_pow(Integer(v), static_cast<unsigned long>(k));
        for (const Candidate& cand : cands) {
          if (lhs != cand.target()) continue;
          BackMapOutcome bm = back_map(cand, Integer(u), Integer(v));
          if (bm.accepted()) out.push_back(*bm.solution);
          break;  // targets are pairwise distinct
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), solution_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<PowerSolution> restrict_solutions(const SolutionSet& set,
                                              long u_max, long k_max) {
  std::vector<PowerSolution> out;
  auto admit = [&](const PowerSolution& s) {
    if (s.base.get_num() > u_max || s.base.get_den() > u_max) return false;
    Integer diff = abs(s.e_y - s.e_x);
    return diff <= k_max;
  };

  if (admit(set.s0)) out.push_back(set.s0);

  if (k_max >= 1) {
    Integer n_cap = set.m * u_max + 2;
    for (const EulerFamily& fam : set.s1) {
      for (Integer n = fam.n_min(); n <= n_cap; ++n) {
        PowerSolution s = fam.element(n.get_si());
        if (s.base == 1) continue;  // degenerate, already counted as S_0
        if (admit(s)) out.push_back(s);
      }
    }
  }

  if (k_max >= 2) {
    for (const S2Family& fam : set.s2.families) {
      Integer u = fam.rep.x0, v = fam.rep.y0;
      while (u <= u_max) {
        if (u >= 1 && v >= 1 && v <= u_max && gcd(u, v) == 1) {
          BackMapOutcome bm = back_map(fam.candidate, u, v);
          if (bm.accepted() && !(bm.solution->base == 1) && admit(*bm.solution))
            out.push_back(*bm.solution);
        }
        Integer nu = u * fam.unit.u1 + set.m * v * fam.unit.v1;
        Integer nv = u * fam.unit.v1 + v * fam.unit.u1;
        u = std::move(nu);
        v = std::move(nv);
        if (u == fam.rep.x0 && v == fam.rep.y0) break;  // safety
      }
    }
  }

  for (const PowerSolution& s : set.sporadics)
    if (admit(s)) out.push_back(s);

  std::sort(out.begin(), out.end(), solution_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace xymx

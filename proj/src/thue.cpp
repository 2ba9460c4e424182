#include "xymx/thue.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace xymx {

namespace {

using u64 = std::uint64_t;

std::vector<u64> distinct_prime_factors_u64(u64 n) {
  std::vector<u64> out;
  for (u64 q = 2; q * q <= n; q += (q == 2 ? 1 : 2)) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

u64 primitive_root_u64(u64 p) {
  std::vector<u64> qs = distinct_prime_factors_u64(p - 1);
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (u64 q : qs) {
      if (powmod_u64(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw std::logic_error("primitive_root: none found (p not prime?)");
}

// Sorted {x^k mod p}: the subgroup of index k in F_p^* plus 0.
std::vector<u64> power_residues_u64(u64 k, u64 p) {
  u64 h = powmod_u64(primitive_root_u64(p), k, p);
  std::vector<u64> r;
  r.reserve((p - 1) / k + 1);
  r.push_back(0);
  u64 cur = 1;
  do {
    r.push_back(cur);
    cur = mulmod_u64(cur, h, p);
  } while (cur != 1);
  std::sort(r.begin(), r.end());
  return r;
}

bool contains_u64(const std::vector<u64>& sorted, u64 x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

u64 mod_u64(const Integer& a, u64 m) {
  return mpz_fdiv_ui(a.get_mpz_t(), m);
}

// Is c in {x^k - m y^k mod p}?  Checked via c + m*b^k against the
// power-residue subgroup, never via p^2 raw pairs.
bool target_in_residue_set(const std::vector<u64>& residues, u64 m_mod,
                           u64 c_mod, u64 p) {
  for (u64 beta : residues) {
    u64 alpha = (c_mod + mulmod_u64(m_mod, beta, p)) % p;
    if (contains_u64(residues, alpha)) return true;
  }
  return false;
}

// Small primes used by the prime-power ladder in addition to primes
// dividing m.
std::vector<u64> ladder_primes(const Integer& m) {
  std::vector<u64> qs = {2, 3, 5, 7};
  Integer rest = m;
  for (u64 q = 2; q <= 100000 && rest > 1; q += (q == 2 ? 1 : 2)) {
    if (mpz_divisible_ui_p(rest.get_mpz_t(), q)) {
      qs.push_back(q);
      while (mpz_divisible_ui_p(rest.get_mpz_t(), q))
        mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), q);
    }
  }
  if (rest > 1 && rest.fits_ulong_p() && is_prime_u64(rest.get_ui()))
    qs.push_back(rest.get_ui());
  std::sort(qs.begin(), qs.end());
  qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
  return qs;
}

std::vector<std::pair<Integer, Integer>> scan_solutions(
    long k, const Integer& m, const Integer& c, u64 v_lo, u64 v_hi,
    const std::vector<std::pair<u64, std::vector<u64>>>& filters) {
  std::vector<std::pair<Integer, Integer>> out;
  // Per-filter tables of r^k mod p so the inner loop is lookups only.
  struct Table {
    u64 p;
    u64 m_mod, c_mod;
    std::vector<u64> pow;
    const std::vector<u64>* residues;
  };
  std::vector<Table> tabs;
  for (const auto& [p, res] : filters) {
    Table t;
    t.p = p;
    t.m_mod = mod_u64(m, p);
    t.c_mod = mod_u64(c, p);
    t.pow.resize(p);
    for (u64 r = 0; r < p; ++r)
      t.pow[r] = powmod_u64(r, static_cast<u64>(k), p);
    t.residues = &res;
    tabs.push_back(std::move(t));
  }

  Integer w, vk;
  for (u64 v = v_lo; v <= v_hi; ++v) {
    bool pass = true;
    for (const Table& t : tabs) {
      u64 wm = (mulmod_u64(t.m_mod, t.pow[v % t.p], t.p) + t.c_mod) % t.p;
      if (!contains_u64(*t.residues, wm)) {
        pass = false;
        break;
      }
    }
    if (!pass) continue;
    mpz_ui_pow_ui(vk.get_mpz_t(), v, static_cast<unsigned long>(k));
    w = m * vk + c;
    if (w < 1) continue;
    Integer u;
    if (!mpz_root(u.get_mpz_t(), w.get_mpz_t(), static_cast<unsigned long>(k)))
      continue;
    if (gcd(u, Integer(static_cast<unsigned long>(v))) == 1)
      out.emplace_back(u, Integer(static_cast<unsigned long>(v)));
  }
  return out;
}

}  // namespace

std::vector<Integer> kth_power_residues(long k, const Integer& p) {
  if (k < 1) throw std::domain_error("kth_power_residues: k must be >= 1");
  if (!p.fits_ulong_p())
    throw std::domain_error("kth_power_residues: p too large");
  u64 pp = p.get_ui();
  if (!is_prime_u64(pp))
    throw std::domain_error("kth_power_residues: p must be prime");
  if ((pp - 1) % static_cast<u64>(k) != 0)
    throw std::domain_error("kth_power_residues: k must divide p-1");

  std::vector<u64> r = power_residues_u64(static_cast<u64>(k), pp);
  if (r.size() != (pp - 1) / static_cast<u64>(k) + 1)
    throw std::logic_error("kth_power_residues: wrong subgroup size");
  return std::vector<Integer>(r.begin(), r.end());
}

std::vector<Integer> residue_set(long k, const Integer& m, const Integer& p) {
  std::vector<Integer> base = kth_power_residues(k, p);
  u64 pp = p.get_ui();
  if (pp > 10000000)
    throw std::domain_error("residue_set: p too large to materialize");
  u64 m_mod = mod_u64(m, pp);
  std::vector<bool> seen(pp, false);
  for (const Integer& a : base) {
    u64 av = a.get_ui();
    for (const Integer& b : base) {
      u64 bv = mulmod_u64(m_mod, b.get_ui(), pp);
      seen[(av + pp - bv) % pp] = true;
    }
  }
  std::vector<Integer> out;
  for (u64 x = 0; x < pp; ++x)
    if (seen[x]) out.emplace_back(static_cast<unsigned long>(x));
  return out;
}

SieveReport sieve_scan(long k, const Integer& m,
                       const std::vector<Integer>& targets,
                       const SieveConfig& cfg) {
  if (k < 2) throw std::domain_error("sieve_scan: k must be >= 2");
  if (targets.empty()) throw std::domain_error("sieve_scan: no targets");

  SieveReport rep;
  std::vector<Integer> live = targets;

  // Phase 1: primes p = 2nk + 1.
  for (long n = 1; n <= cfg.n_max && !live.empty(); ++n) {
    u64 p = 2 * static_cast<u64>(n) * static_cast<u64>(k) + 1;
    if (!is_prime_u64(p)) continue;
    std::vector<u64> residues = power_residues_u64(static_cast<u64>(k), p);
    u64 m_mod = mod_u64(m, p);

    ResidueWitness w;
    w.p = Integer(static_cast<unsigned long>(p));
    w.n = n;
    w.e = 1;
    w.modulus = w.p;
    std::vector<Integer> still;
    for (const Integer& c : live) {
      if (target_in_residue_set(residues, m_mod, mod_u64(c, p), p))
        still.push_back(c);
      else
        w.eliminated.push_back(c);
    }
    if (!w.eliminated.empty()) {
      rep.witnesses.push_back(std::move(w));
      live = std::move(still);
    }
  }

  // Phase 2: prime-power ladder, for obstructions invisible to p = 2nk+1
  // (e.g. x^3 - 3y^3 = 9 fails mod 27, x^4 - 3y^4 = 4 fails mod 16).
  for (u64 q : ladder_primes(m)) {
    if (live.empty()) break;
    int e = 1;
    for (u64 Q = q; Q <= static_cast<u64>(cfg.prime_power_cap) && !live.empty();
         ++e) {
      // Full value set of x^k mod Q; no primitivity condition, so a target
      // with any integer solution is never eliminated.
      std::vector<std::uint8_t> is_kth(Q, 0);
      for (u64 x = 0; x < Q; ++x)
        is_kth[powmod_u64(x, static_cast<u64>(k), Q)] = 1;

      u64 m_mod = mod_u64(m, Q);
      std::vector<u64> c_mod(live.size());
      std::vector<std::uint8_t> present(live.size(), 0);
      for (std::size_t i = 0; i < live.size(); ++i)
        c_mod[i] = mod_u64(live[i], Q);

      std::size_t remaining = live.size();
      for (u64 y = 0; y < Q && remaining > 0; ++y) {
        u64 beta = mulmod_u64(m_mod, powmod_u64(y, static_cast<u64>(k), Q), Q);
        for (std::size_t i = 0; i < live.size(); ++i) {
          if (present[i]) continue;
          if (is_kth[(c_mod[i] + beta) % Q]) {
            present[i] = 1;
            --remaining;
          }
        }
      }

      if (remaining > 0) {
        ResidueWitness w;
        w.p = Integer(static_cast<unsigned long>(q));
        w.n = 0;
        w.e = e;
        w.modulus = Integer(static_cast<unsigned long>(Q));
        std::vector<Integer> still;
        for (std::size_t i = 0; i < live.size(); ++i) {
          if (present[i])
            still.push_back(live[i]);
          else
            w.eliminated.push_back(live[i]);
        }
        rep.witnesses.push_back(std::move(w));
        live = std::move(still);
      }

      if (Q > static_cast<u64>(cfg.prime_power_cap) / q) break;
      Q *= q;
    }
  }

  for (const ResidueWitness& w : rep.witnesses)
    rep.eliminated.insert(rep.eliminated.end(), w.eliminated.begin(),
                          w.eliminated.end());
  rep.survivors = std::move(live);
  return rep;
}

std::optional<std::vector<ResidueWitness>> sieve(
    long k, const Integer& m, const std::vector<Integer>& targets,
    long n_max) {
  SieveConfig cfg;
  cfg.n_max = n_max;
  SieveReport rep = sieve_scan(k, m, targets, cfg);
  if (!rep.complete()) return std::nullopt;
  return rep.witnesses;
}

std::vector<std::pair<Integer, Integer>> search(const ThueEquation& eq,
                                                const Integer& v_bound) {
  if (eq.k < 2) throw std::domain_error("search: k must be >= 2");
  if (eq.m < 2) throw std::domain_error("search: m must be >= 2");
  if (eq.c == 0) throw std::domain_error("search: c must be nonzero");
  if (v_bound < 1) throw std::domain_error("search: v_bound must be >= 1");
  if (!v_bound.fits_ulong_p() || v_bound > 4000000000UL)
    throw std::overflow_error("search: v_bound too large");

  // Residue prefilter: m v^k + c must be a k-th power residue mod primes
  // p = 2ik+1, which rejects all but ~1/k^2 of the range cheaply.
  std::vector<std::pair<u64, std::vector<u64>>> filters;
  for (long i = 1; i <= 500 && filters.size() < 2; ++i) {
    u64 p = 2 * static_cast<u64>(i) * static_cast<u64>(eq.k) + 1;
    if (p > 1000000 || !is_prime_u64(p)) continue;
    if (mod_u64(eq.m, p) == 0) continue;
    filters.emplace_back(p, power_residues_u64(static_cast<u64>(eq.k), p));
  }

  return scan_solutions(eq.k, eq.m, eq.c, 1, v_bound.get_ui(), filters);
}

std::vector<std::pair<Integer, Integer>> solve_cubic_m2(const Integer& c) {
  if (c == 0) throw std::domain_error("solve_cubic_m2: c must be nonzero");
  if (abs(c) > 36)
    throw std::domain_error("solve_cubic_m2: |c| must be <= 36");

  // |u^3 - 2 v^3| >= sqrt(|u|) for all integers, so any solution has
  // u <= c^2; v is then determined by 2 v^3 = u^3 - c.
  std::vector<std::pair<Integer, Integer>> out;
  Integer u_max = c * c;
  for (Integer u = 1; u <= u_max; ++u) {
    Integer t = u * u * u - c;
    if (t < 2 || t % 2 != 0) continue;
    auto v = is_kth_power(t / 2, 3);
    if (!v || *v < 1) continue;
    if (gcd(u, *v) != 1) continue;
    out.emplace_back(u, *v);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  return out;
}

namespace {

// m = w^k: the form factors, and u^k - m v^k = c forces
// max(u, w v)^(k-1) <= |c|; a tiny scan is complete.
std::vector<std::pair<Integer, Integer>> solve_reducible(
    long k, const Integer& m, const Integer& c) {
  Integer bound = iroot(abs(c), static_cast<unsigned long>(k - 1)) + 1;
  std::vector<std::pair<Integer, Integer>> out;
  Integer vk, w;
  for (Integer v = 1; v <= bound; ++v) {
    mpz_pow_ui(vk.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(k));
    w = m * vk + c;
    if (w < 1) continue;
    Integer u;
    if (!mpz_root(u.get_mpz_t(), w.get_mpz_t(), static_cast<unsigned long>(k)))
      continue;
    if (gcd(u, v) == 1) out.emplace_back(u, v);
  }
  return out;
}

}  // namespace

ThueOutcome decide(long k, const Integer& m, const DecideConfig& cfg) {
  if (k < 3) throw std::domain_error("decide: k must be >= 3");
  if (m < 2) throw std::domain_error("decide: m must be >= 2");

  ThueOutcome out;
  out.k = k;
  out.m = m;

  std::vector<Integer> targets;
  for (Integer d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    targets.push_back((m / d) * k);
    if (d * d != m) targets.push_back(d * k);
  }
  std::sort(targets.begin(), targets.end(), std::greater<Integer>());
  {
    std::vector<Integer> signed_targets;
    for (const Integer& t : targets) {
      signed_targets.push_back(t);
      signed_targets.push_back(-t);
    }
    targets = std::move(signed_targets);
  }

  long v2 = mpz_scan1(m.get_mpz_t(), 0);
  if (v2 % 2 == 1 && k % 2 == 0) {
    out.status = ThueStatus::EmptyByParity;
    out.eliminated = std::move(targets);
    return out;
  }

  SieveReport rep = sieve_scan(k, m, targets, cfg.sieve);
  out.witnesses = std::move(rep.witnesses);
  out.eliminated = std::move(rep.eliminated);
  if (rep.survivors.empty()) {
    out.status = ThueStatus::EmptyBySieve;
    return out;
  }

  std::optional<Integer> root = is_kth_power(m, static_cast<unsigned long>(k));
  bool all_complete = true;
  for (const Integer& c : rep.survivors) {
    TargetResolution tr;
    tr.c = c;
    if (m == 2 && k == 3) {
      tr.solutions = solve_cubic_m2(c);
      tr.complete = true;
    } else if (root) {
      tr.solutions = solve_reducible(k, m, c);
      tr.complete = true;
    } else {
      tr.solutions = search(ThueEquation{k, m, c}, cfg.search_bound);
      tr.complete = false;
      tr.search_bound = cfg.search_bound;
    }
    all_complete = all_complete && tr.complete;
    out.survivors.push_back(std::move(tr));
  }
  out.status = all_complete ? ThueStatus::Solved : ThueStatus::Unresolved;
  return out;
}

}  // namespace xymx

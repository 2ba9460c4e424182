#pragma once

// Full classification of S(m), the positive rational solutions of
// x^y = y^(mx): S_0 = {(1,1)}, the two k=1 parametric branches, the k=2
// Pell families with an exact empty/infinite verdict, and the k >= 3
// Thue range with back-mapping of integer solutions to rational pairs.

#include <optional>
#include <utility>
#include <vector>

#include "xymx/arith.hpp"
#include "xymx/pell.hpp"
#include "xymx/solution.hpp"
#include "xymx/thue.hpp"

namespace xymx {

// One instance of |u^k - m v^k| = m'k: a divisor d of m, m' = m/d, and a
// sign; the target value is sign * m' * k.
struct Candidate {
  Integer m;
  long k = 0;
  Integer d;
  Integer m_prime;
  int sign = 1;

  Integer target() const { return sign * m_prime * k; }
};

struct BackMapTrace {
  Integer u, v;
  Integer a, b;  // a m' = u^k, b = d v^k, m'(a - b) = u^k - m v^k
  Candidate candidate;
};

enum class BackMapReject {
  None,
  NotDivisible,  // m' does not divide u^k (cannot occur for true solutions)
  NotCoprime,    // gcd(a, b) > 1
  DMismatch,     // gcd(b, m) != d
};

struct BackMapOutcome {
  std::optional<PowerSolution> solution;  // canonical; set iff accepted
  BackMapReject reject = BackMapReject::None;
  BackMapTrace trace;
  bool accepted() const { return solution.has_value(); }
};

// Reconstruct (x, y) = ((u/v)^(k b/(a-b)), (u/v)^(k a/(a-b))) with the
// coprimality and divisor checks.  Requires u, v >= 1, gcd(u, v) = 1 and
// u^k - m v^k = target exactly.
BackMapOutcome back_map(const Candidate& c, const Integer& u, const Integer& v);

// Largest k that can carry solutions: 600 for m = 2, floor(10676 ln m)
// otherwise.
long k_bound(const Integer& m);

// All candidates for a given k: one per (divisor of m) x (sign).
std::vector<Candidate> candidates(const Integer& m, long k);

// The k = 1 solutions: x = (m + m/n)^n (n >= 1) and x = (m - m/n)^(-n)
// (n >= 2).
struct EulerFamily {
  Integer m;
  enum class Branch { Plus, Minus } branch = Branch::Plus;

  long n_min() const { return branch == Branch::Plus ? 1 : 2; }
  PowerSolution element(long n) const;
};
std::vector<EulerFamily> s1_families(const Integer& m);

enum class S2Verdict {
  EmptyParityLemma,
  EmptyMod4Lemma,
  EmptyRepSearch,  // lemmas inconclusive; settled by representative search
  Infinite,
};

struct S2Family {
  Candidate candidate;  // k = 2
  PellRep rep;
  PellUnit unit;
  long period = 0;  // acceptance period of the chain mod 2 m'
  std::vector<std::pair<Integer, Integer>> chain;  // leading Pell pairs
  std::vector<PowerSolution> solutions;            // accepted, nontrivial
};

struct S2Result {
  S2Verdict verdict = S2Verdict::EmptyRepSearch;
  std::vector<S2Family> families;
};

// Exact verdict: back-map acceptance along a chain depends only on the
// state mod 2 m', which is purely periodic, so one period decides.
S2Result classify_s2(const Integer& m, long materialize = 5);

struct ClassifyConfig {
  std::optional<long> k_min;         // default 3
  std::optional<long> k_max;         // default k_bound(m)
  long sieve_n_max = 200;
  long prime_power_cap = 200000;
  Integer search_bound = 1000000;
  long family_count = 5;             // elements materialized per family
};

struct UnresolvedEquation {
  long k = 0;
  Integer c;
  Integer search_bound;
  bool solutions_found = false;  // found within bound but not provably all

  friend bool operator==(const UnresolvedEquation& a,
                         const UnresolvedEquation& b) {
    return a.k == b.k && a.c == b.c && a.search_bound == b.search_bound &&
           a.solutions_found == b.solutions_found;
  }
};

struct SolutionSet {
  Integer m;
  PowerSolution s0;
  std::vector<EulerFamily> s1;
  S2Result s2;
  std::vector<PowerSolution> sporadics;
  std::vector<UnresolvedEquation> unresolved;
  long k_min = 3;
  long k_max = 3;
  ClassifyConfig config;

  // Per-k detail for reporting; not part of the serialized schema.
  std::vector<ThueOutcome> outcomes;
  std::vector<BackMapOutcome> rejected;

  bool complete() const { return unresolved.empty(); }
};

SolutionSet classify(const Integer& m, const ClassifyConfig& cfg = {});

// Brute-force oracle: scan all coprime (u, v) <= u_max, k <= k_max and all
// divisors, test the key equation directly, and back-map.  Test-side
// ground truth for classify.
std::vector<PowerSolution> oracle_scan(const Integer& m, long u_max,
                                       long k_max);

// Every solution of `set` whose base has numerator and denominator at most
// u_max and |e_y - e_x| <= k_max (the oracle's window), as a sorted set.
std::vector<PowerSolution> restrict_solutions(const SolutionSet& set,
                                              long u_max, long k_max);

}  // namespace xymx

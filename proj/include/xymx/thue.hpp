#pragma once

// Deciding |u^k - m v^k| = c for k >= 3: residue sieve for local
// obstructions, bounded coprime search, the complete cubic path for m = 2,
// and a complete factorization path when m is a perfect k-th power.

#include <optional>
#include <utility>
#include <vector>

#include "xymx/arith.hpp"

namespace xymx {

struct ThueEquation {
  long k = 0;   // degree, >= 3
  Integer m;    // >= 2
  Integer c;    // signed target, != 0
};

// One modulus that eliminates targets: either a prime p = 2nk+1 (e == 1,
// n > 0) or a prime power p^e from the small-prime ladder (n == 0, e >= 1).
struct ResidueWitness {
  Integer p;       // prime
  long n = 0;      // p == 2nk+1 when nonzero
  int e = 1;       // modulus = p^e
  Integer modulus;
  std::vector<Integer> eliminated;  // targets absent from the residue set
};

struct SieveConfig {
  long n_max = 200;                  // primes p = 2nk+1, n = 1..n_max
  long prime_power_cap = 200000;     // ladder moduli q^e <= cap
};

struct SieveReport {
  std::vector<ResidueWitness> witnesses;
  std::vector<Integer> eliminated;
  std::vector<Integer> survivors;
  bool complete() const { return survivors.empty(); }
};

// The set {x^k mod p : 0 <= x < p}; size is exactly (p-1)/k + 1.
// Requires p prime with k | p-1.
std::vector<Integer> kth_power_residues(long k, const Integer& p);

// The set {a - m b mod p : a, b k-th power residues}, built from the two
// power-residue sets rather than from p^2 raw pairs.
std::vector<Integer> residue_set(long k, const Integer& m, const Integer& p);

// Per-target elimination: different targets may be killed by different
// moduli.  Prime moduli p = 2nk+1 are tried first, then the prime-power
// ladder (q in {2,3,5,7} and primes dividing m).
SieveReport sieve_scan(long k, const Integer& m,
                       const std::vector<Integer>& targets,
                       const SieveConfig& cfg = {});

// Spec-shaped wrapper: witnesses covering all targets, or nullopt if some
// target survives every modulus tried.
std::optional<std::vector<ResidueWitness>> sieve(
    long k, const Integer& m, const std::vector<Integer>& targets,
    long n_max);

// All (u, v) with 1 <= v <= v_bound, u >= 1, gcd(u, v) = 1 and
// u^k - m v^k = c.  Exhaustive within the bound only.
std::vector<std::pair<Integer, Integer>> search(const ThueEquation& eq,
                                                const Integer& v_bound);

// Provably complete solution list of u^3 - 2 v^3 = c for |c| <= 36, from
// the inequality |u^3 - 2 v^3| >= sqrt(|u|) (so |u| <= c^2).
std::vector<std::pair<Integer, Integer>> solve_cubic_m2(const Integer& c);

enum class ThueStatus { EmptyByParity, EmptyBySieve, Solved, Unresolved };

struct TargetResolution {
  Integer c;
  std::vector<std::pair<Integer, Integer>> solutions;
  bool complete = false;   // true when the solution list is provably total
  Integer search_bound;    // v bound used when complete == false
};

struct ThueOutcome {
  long k = 0;
  Integer m;
  ThueStatus status = ThueStatus::Unresolved;
  std::vector<ResidueWitness> witnesses;
  std::vector<Integer> eliminated;          // targets killed before search
  std::vector<TargetResolution> survivors;  // targets that reached endgame
};

struct DecideConfig {
  SieveConfig sieve;
  Integer search_bound = 1000000;
};

// Full per-k pipeline over all divisor targets +-(m/d)k: parity lemma,
// sieve, then the complete cubic path (m=2, k=3), the perfect-power path,
// or bounded search.
ThueOutcome decide(long k, const Integer& m, const DecideConfig& cfg = {});

}  // namespace xymx

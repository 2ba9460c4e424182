#pragma once

// Detecting candidate failures of the local-global principle for
// x^k - m y^k = c: everywhere locally solvable up to the configured prime
// and prime-power caps, yet no integer solution within the global bound.

#include <optional>
#include <utility>

#include "xymx/arith.hpp"

namespace xymx {

struct LocalReport {
  Integer p;
  int e = 1;
  bool solvable = false;  // exists (x, y) mod p^e, not both divisible by p
};

enum class HasseStatus { GloballySolvable, LocalObstruction, CandidateHasseFailure };

struct HasseVerdict {
  HasseStatus status = HasseStatus::CandidateHasseFailure;
  std::optional<std::pair<Integer, Integer>> witness;   // global solution
  std::optional<LocalReport> obstruction;
  Integer prime_cap, exp_cap, global_bound;
};

struct HasseConfig {
  Integer prime_cap = 100;      // primes p <= prime_cap
  Integer exp_cap = 100000;     // prime powers p^e <= exp_cap
  Integer global_bound = 100000;  // |y| <= bound in the integer search
};

// Exhaustive residue scan mod p^e with the primitivity condition.
LocalReport local_solvable(long k, const Integer& m, const Integer& c,
                           const Integer& p, int e,
                           const Integer& modulus_cap = 1000000);

HasseVerdict hasse_scan(long k, const Integer& m, const Integer& c,
                        const HasseConfig& cfg = {});

}  // namespace xymx

#pragma once

// Complete solution of x^2 - D y^2 = N: fundamental unit from the continued
// fraction of sqrt(D), class representatives inside the Nagell bounds, and
// chain generation by unit multiplication.  Also the two S_2 emptiness
// lemmas and Petr's +-2 criterion for primes p = 3 (mod 4).

#include <optional>
#include <utility>
#include <vector>

#include "xymx/arith.hpp"

namespace xymx {

struct PellUnit {
  Integer D;
  Integer u1, v1;  // minimal positive solution of u^2 - D v^2 = 1
};

struct PellRep {
  Integer x0, y0;  // x0, y0 >= 0; minimal nonnegative element of its class
  Integer D, N;
};

struct PellFamily {
  PellRep rep;
  PellUnit unit;
};

// Minimal (u1, v1) with u1^2 - D v1^2 = 1, D >= 2 nonsquare.
PellUnit fundamental_unit(const Integer& D);

// Complete list of class representatives for x^2 - D y^2 = N, N != 0:
// every nonnegative solution is rep * unit^j for exactly one rep and one
// j >= 0.  Empty list == no integer solutions.
std::vector<PellRep> representatives(const Integer& D, const Integer& N);

// First `count` solutions of the family, increasing in x.
std::vector<std::pair<Integer, Integer>> generate(const PellFamily& family,
                                                  std::size_t count);

enum class S2EmptyReason { ParityLemma, Mod4Lemma };

// Sufficient emptiness criteria for S_2(m): nu_2(m) odd, or odd part of m
// congruent to 1 mod 4.  nullopt when inconclusive.
std::optional<S2EmptyReason> s2_empty_by_lemma(const Integer& m);

// For prime p = 3 (mod 4), exactly one of x^2 - p y^2 = +-2 is solvable;
// returns +2 or -2 accordingly.
int petr(const Integer& p);

}  // namespace xymx

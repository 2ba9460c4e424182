#pragma once

// A positive rational solution pair of x^y = y^(mx), stored symbolically:
// x = base^e_x, y = base^e_y.  Canonical form has e_x > 0 (invert the base
// to flip exponent signs); the trivial solution is (base 1, 1, 1).

#include <string>

#include "xymx/arith.hpp"

namespace xymx {

struct PowerSolution {
  Rational base;
  Integer e_x;
  Integer e_y;

  friend bool operator==(const PowerSolution& a, const PowerSolution& b) {
    return a.base == b.base && a.e_x == b.e_x && a.e_y == b.e_y;
  }
};

PowerSolution trivial_solution();

// Canonicalize: trivial when base == 1; otherwise ensure e_x > 0 by
// inverting the base if needed.
PowerSolution canonical(PowerSolution s);

// Strict ordering for deterministic output (base num, base den, e_x, e_y).
bool solution_less(const PowerSolution& a, const PowerSolution& b);

// "(4/5)^128" style rendering of one component.
std::string format_power(const Rational& base, const Integer& exp);
std::string format_solution(const PowerSolution& s);

}  // namespace xymx

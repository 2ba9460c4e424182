#pragma once

// Exact verification of x^y = y^(mx) for power-form solutions, without
// expanding the (possibly astronomically large) powers: for x = s^ex,
// y = s^ey the equation reduces to the rational identity
//   s^(ey - ex) * ex = m * ey.

#include <optional>
#include <utility>

#include "xymx/arith.hpp"
#include "xymx/solution.hpp"

namespace xymx {

// True iff the solution satisfies x^y = y^(mx) exactly.  The trivial
// solution (base 1) is always true; e_x = 0 with a nontrivial base is
// rejected.
bool verify_power_solution(const PowerSolution& sol, const Integer& m);

// Literal (x, y) as exact rationals when every numerator/denominator stays
// within digit_limit decimal digits; nullopt otherwise.
std::optional<std::pair<Rational, Rational>> expand(const PowerSolution& sol,
                                                    long digit_limit);

}  // namespace xymx

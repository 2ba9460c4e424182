#include "xymx/verify.hpp"

#include <stdexcept>

namespace xymx {

namespace {

// base^e with an integer exponent of small magnitude.
Rational rational_pow(const Rational& base, const Integer& e) {
  Integer mag = abs(e);
  if (!mag.fits_ulong_p())
    throw std::overflow_error("rational_pow: exponent too large");
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), mag.get_ui());
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), mag.get_ui());
  return e < 0 ? make_rational(den, num) : make_rational(num, den);
}

}  // namespace

bool verify_power_solution(const PowerSolution& sol, const Integer& m) {
  if (m < 1) throw std::domain_error("verify: m must be >= 1");
  if (sol.base <= 0) throw std::domain_error("verify: base must be > 0");
  if (sol.base == 1) return true;  // x = y = 1
  if (sol.e_x == 0)
    throw std::domain_error("verify: e_x = 0 with nontrivial base");

  // The exponent difference is the originating k; it stays small even when
  // the solution components do not.
  Rational lhs = rational_pow(sol.base, Integer(sol.e_y - sol.e_x));
  lhs *= Rational(sol.e_x);
  Rational rhs(m * sol.e_y);
  return lhs == rhs;
}

std::optional<std::pair<Rational, Rational>> expand(const PowerSolution& sol,
                                                    long digit_limit) {
  if (digit_limit < 1) throw std::domain_error("expand: digit_limit must be >= 1");

  auto digits_of = [](const Integer& n, const Integer& e) -> Integer {
    Integer mag = abs(e);
    if (n == 0 || n == 1 || mag == 0) return 1;
    return mag * static_cast<unsigned long>(
                     mpz_sizeinbase(n.get_mpz_t(), 10));
  };
  for (const Integer& e : {sol.e_x, sol.e_y}) {
    if (digits_of(sol.base.get_num(), e) > digit_limit) return std::nullopt;
    if (digits_of(sol.base.get_den(), e) > digit_limit) return std::nullopt;
  }
  Rational x = rational_pow(sol.base, sol.e_x);
  Rational y = rational_pow(sol.base, sol.e_y);
  return std::make_pair(x, y);
}

}  // namespace xymx

#include "xymx/solution.hpp"

#include <sstream>

namespace xymx {

PowerSolution trivial_solution() {
  return PowerSolution{Rational(1), Integer(1), Integer(1)};
}

PowerSolution canonical(PowerSolution s) {
  if (s.base <= 0) throw std::domain_error("canonical: base must be positive");
  if (s.base == 1) return trivial_solution();
  if (s.e_x < 0) {
    s.base = make_rational(s.base.get_den(), s.base.get_num());
    s.e_x = -s.e_x;
    s.e_y = -s.e_y;
  }
  return s;
}

bool solution_less(const PowerSolution& a, const PowerSolution& b) {
  if (a.base.get_num() != b.base.get_num())
    return a.base.get_num() < b.base.get_num();
  if (a.base.get_den() != b.base.get_den())
    return a.base.get_den() < b.base.get_den();
  if (a.e_x != b.e_x) return a.e_x < b.e_x;
  return a.e_y < b.e_y;
}

std::string format_power(const Rational& base, const Integer& exp) {
  std::ostringstream os;
  bool frac = base.get_den() != 1;
  if (exp == 1) {
    if (frac)
      os << base.get_num() << "/" << base.get_den();
    else
      os << base.get_num();
    return os.str();
  }
  os << "(" << base.get_num();
  if (frac) os << "/" << base.get_den();
  os << ")^" << exp;
  return os.str();
}

std::string format_solution(const PowerSolution& s) {
  std::ostringstream os;
  os << "x = " << format_power(s.base, s.e_x)
     << ", y = " << format_power(s.base, s.e_y);
  return os.str();
}

}  // namespace xymx

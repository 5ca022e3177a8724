#include "poincare/special.hpp"

#include <stdexcept>

namespace poincare {

Poly q_block(unsigned n) {
  if (n == 0) throw std::domain_error("empty block");
  return Poly(std::vector<Rational>(n, Rational(1)));
}

BigInt pochhammer(unsigned n, unsigned m) {
  BigInt r = 1;
  for (unsigned j = 0; j < m; ++j) r *= n + j;
  return r;
}

FactorMap q_shifted_factorial(int a_exp, int q_exp, unsigned n) {
  FactorMap f;
  for (unsigned j = 0; j < n; ++j) {
    const long e = a_exp + static_cast<long>(j) * q_exp;
    if (e == 0) throw std::domain_error("degenerate factor");
    if (e < 0) throw std::domain_error("factor exponent must be positive");
    ++f[static_cast<unsigned>(e)];
  }
  return f;
}

}  // namespace poincare

#pragma once

#include "poincare/factored.hpp"

namespace poincare {

/// 1 + z + ... + z^{n-1}. Throws std::domain_error("empty block") for n == 0.
Poly q_block(unsigned n);

/// Rising factorial n(n+1)...(n+m-1); (n)_0 = 1.
BigInt pochhammer(unsigned n, unsigned m);

/// (z^a_exp; z^q_exp)_n = prod_{j<n} (1 - z^{a_exp + j*q_exp}) as a factor multiset.
/// Throws std::domain_error("degenerate factor") if some factor is 1 - z^0.
FactorMap q_shifted_factorial(int a_exp, int q_exp, unsigned n);

}  // namespace poincare

#pragma once

// Exact scalars. GMP keeps mpq_class canonical (positive denominator,
// reduced, zero as 0/1) after every arithmetic operation.

#include <gmpxx.h>

#include <string>

namespace poincare {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Builds num/den in canonical form; throws std::domain_error("division by zero") when den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);

std::string to_string(const Rational& q);
std::string to_string(const BigInt& n);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace poincare

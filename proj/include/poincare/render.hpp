#pragma once

#include "poincare/factored.hpp"

#include <string>
#include <vector>

namespace poincare {

/// num/den rescaled to coprime integer coefficients with a positive
/// denominator constant term (positive leading coefficient if den(0) = 0).
struct IntegerFraction {
  std::vector<BigInt> numerator;
  std::vector<BigInt> denominator;
};
IntegerFraction integer_cleared(const RatFun& f);

/// f written as numerator / (prod (1 - z^a)^e * remainder).
struct FactoredDisplay {
  Poly numerator;
  FactorMap factors;
  Poly remainder;  // monic, 1 when the split is complete
};
FactoredDisplay factored_display(const RatFun& f);

/// "(1-z)^2 (1-z^2)".
std::string render_factors(const FactorMap& factors);
/// "1 / (1-z)^2 (1-z^2)".
std::string render_factored(const FactoredDisplay& f);
std::string join(const std::vector<BigInt>& values, const std::string& sep = " ");
std::string join(const std::vector<Rational>& values, const std::string& sep = " ");

}  // namespace poincare

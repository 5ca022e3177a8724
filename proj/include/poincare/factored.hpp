#pragma once

#include "poincare/ratfun.hpp"

#include <map>
#include <optional>
#include <vector>

namespace poincare {

/// Multiset of denominator factors: a -> e stands for (1 - z^a)^e.
using FactorMap = std::map<unsigned, unsigned>;

/// Expanded product of the factors.
Poly expand_factors(const FactorMap& factors);
unsigned factor_degree(const FactorMap& factors);
/// Smallest map dominating both (per-a maximum of exponents).
FactorMap common_multiple(const FactorMap& a, const FactorMap& b);
FactorMap merge_factors(FactorMap a, const FactorMap& b);

/// scale * num / prod (1 - z^a)^e with the denominator kept factored.
///
/// The denominator is never expanded implicitly: sums go over a common
/// multiple of the factor maps, derivatives raise exponents, and reduction to
/// canonical form happens only in to_ratfun().
class FactoredRatFun {
 public:
  FactoredRatFun() = default;
  FactoredRatFun(Poly num, FactorMap den = {}, Rational scale = 1);  // NOLINT(google-explicit-constructor)

  [[nodiscard]] const Poly& num() const { return num_; }
  [[nodiscard]] const FactorMap& den_factors() const { return den_; }
  [[nodiscard]] const Rational& scale() const { return scale_; }
  [[nodiscard]] bool is_zero() const { return num_.is_zero(); }

  /// scale * num.
  [[nodiscard]] Poly scaled_num() const { return num_ * scale_; }
  [[nodiscard]] Poly expanded_denominator() const { return expand_factors(den_); }
  /// Value at z = 0; every factor is 1 there.
  [[nodiscard]] Rational at_zero() const { return scale_ * num_.constant_term(); }

  /// Canonical reduced form. Common factors are found by trial division of
  /// the numerator by the cyclotomic factors of the denominator.
  [[nodiscard]] RatFun to_ratfun() const;

  /// Same value written over `target`, which must dominate den_factors().
  [[nodiscard]] FactoredRatFun over(const FactorMap& target) const;
  [[nodiscard]] FactoredRatFun derivative(unsigned order = 1) const;
  [[nodiscard]] FactoredRatFun times(const Poly& p) const;
  [[nodiscard]] std::vector<Rational> expand(std::size_t n) const;

  FactoredRatFun& operator+=(const FactoredRatFun& o);
  friend FactoredRatFun operator+(FactoredRatFun a, const FactoredRatFun& b) { return a += b; }

 private:
  Poly num_;
  FactorMap den_;
  Rational scale_ = 1;
};

/// Greedy extraction of (1 - z^a) factors from `den`, a from deg(den) down to 1.
/// den == unit * remainder * prod (1 - z^a)^e with remainder monic (1 when
/// the extraction is complete).
struct DenominatorSplit {
  Rational unit;
  FactorMap factors;
  Poly remainder;
  [[nodiscard]] bool complete() const { return remainder.degree() == 0; }
};
DenominatorSplit split_denominator(const Poly& den);

/// Factored form of f when its denominator is a product of (1 - z^a) factors.
std::optional<FactoredRatFun> to_factored(const RatFun& f);

}  // namespace poincare

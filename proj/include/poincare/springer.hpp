#pragma once

// Operator-calculus route to the Poincare series: partial fractions of the
// shifted generating function in t, the multisection operator phi_n, the
// diagonal operator Psi_{1,n} on single partial-fraction terms, and their
// assembly into PI_d / PS_d.

#include "poincare/factored.hpp"
#include "poincare/genfun.hpp"

#include <map>
#include <vector>

namespace poincare {

/// One summand A(z) / (1 - t z^exponent)^power.
struct PfdTerm {
  unsigned exponent;
  unsigned power;
  FactoredRatFun coefficient;
};

/// f_d(t z^{d*}, z) = sum over terms. Zero coefficients are kept, so every
/// (i, k) with 1 <= k <= beta_i is present exactly once.
struct PartialFractions {
  unsigned d_star = 0;
  std::vector<PfdTerm> terms;

  [[nodiscard]] const PfdTerm& at(unsigned exponent, unsigned power) const;
};

/// c * z^zpow * prod_f (1 - t z^{e_f})^{-powers_f}. The class is closed under
/// d/dt: differentiating factor f multiplies by powers_f z^{e_f} and raises
/// powers_f by one.
struct DerivedFactorProduct {
  Rational coeff;
  unsigned zpow = 0;
  std::vector<unsigned> powers;
};

/// A sum of DerivedFactorProducts over a fixed list of factor exponents,
/// with like terms (same powers) merged.
class DerivedFactorSum {
 public:
  /// prod_f (1 - t z^{exponents_f})^{-powers_f}.
  DerivedFactorSum(std::vector<unsigned> exponents, std::vector<unsigned> powers);

  /// d/dt.
  void differentiate();
  [[nodiscard]] const std::vector<unsigned>& exponents() const { return exponents_; }
  [[nodiscard]] std::vector<DerivedFactorProduct> terms() const;

  /// Value at t = z^{-i}, divided by z^{i * shift_down}. Throws
  /// std::logic_error if some factor exponent equals i (a pole at t = z^{-i})
  /// or if the result would carry a negative power of z.
  [[nodiscard]] FactoredRatFun at_inverse_power(unsigned i, unsigned shift_down) const;

 private:
  std::vector<unsigned> exponents_;
  std::map<std::vector<unsigned>, Rational> terms_;  // powers -> coeff; zpow follows from powers
  std::vector<unsigned> base_;
};

/// Partial-fraction coefficient A_{i,k}(z) via
/// (-1)^{beta_i-k} / ((beta_i-k)! z^{i(beta_i-k)}) * d^{beta_i-k}/dt^{beta_i-k} [f (1 - t z^i)^{beta_i}] at t = z^{-i}.
FactoredRatFun pfd_coefficient(const FactorExponents& beta, unsigned exponent, unsigned power);

PartialFractions partial_fractions(const FactorExponents& beta);

/// Multisection sum a_{in} z^i of the series of f, with the denominator kept factored:
/// phi_n(R / prod (1 - z^a)) = phi_n(R prod Q_n(z^a)) / prod (1 - z^a).
FactoredRatFun phi_factored(const FactoredRatFun& f, unsigned n);
RatFun phi(const FactoredRatFun& f, unsigned n);
/// Throws std::domain_error("factored form required") unless den(f) is a product of (1 - z^a).
RatFun phi(const RatFun& f, unsigned n);

/// Psi_{1,n}(R(z) / (1 - t z^exponent)^power):
///   exponent < n:  1/(power-1)! d^{power-1}/dz^{power-1} (z^{power-1} phi_{n-exponent}(R))
///   exponent == n: R(0) / (1 - z)^power
///   exponent > n:  R(0)
FactoredRatFun psi_term_factored(unsigned exponent, unsigned power, const FactoredRatFun& r, unsigned n);
RatFun psi_term(unsigned exponent, unsigned power, const FactoredRatFun& r, unsigned n);
/// As above for an unfactored R. Throws std::domain_error("R(0) undefined")
/// when R has a pole at 0, and "factored form required" when the phi branch
/// needs a (1 - z^a) denominator.
RatFun psi_term(unsigned exponent, unsigned power, const RatFun& r, unsigned n);

/// Psi_{1,d*}(M(z) f_d(t z^{d*}, z)) with M = 1 - z^2 (invariants) or 1 + z
/// (semi-invariants), summed over every partial-fraction term. The
/// denominator stays factored until the final reduction.
FactoredRatFun poincare_series_factored(const DegreeVector& d, SeriesKind kind);
RatFun poincare_series(const DegreeVector& d, SeriesKind kind);

/// Springer's formula for one binary form of degree d:
/// sum_{0 <= k < d/2} phi_{d-2k}((-1)^k z^{k(k+1)} M(z) / ((z^2;z^2)_k (z^2;z^2)_{d-k})).
/// SeriesKind::semiinvariants gives the covariant series.
RatFun single_form_series(unsigned d, SeriesKind kind);

}  // namespace poincare

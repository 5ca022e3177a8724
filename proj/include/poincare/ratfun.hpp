#pragma once

#include "poincare/poly.hpp"

#include <string>
#include <vector>

namespace poincare {

/// Rational function num/den in z, always held in canonical form:
/// gcd(num, den) = 1 and den monic. Equality is structural.
class RatFun {
 public:
  RatFun() : den_(Rational(1)) {}
  RatFun(Poly p) : num_(std::move(p)), den_(Rational(1)) {}  // NOLINT(google-explicit-constructor)
  RatFun(const Rational& c) : RatFun(Poly(c)) {}             // NOLINT(google-explicit-constructor)

  /// Cancels the gcd and makes den monic. Throws std::domain_error("division by zero") if den == 0.
  static RatFun normalize(Poly num, Poly den);
  /// Wraps a pair already known to be coprime, rescaling so den is monic. No gcd is run.
  static RatFun from_reduced(Poly num, Poly den);

  [[nodiscard]] const Poly& num() const { return num_; }
  [[nodiscard]] const Poly& den() const { return den_; }
  [[nodiscard]] bool is_zero() const { return num_.is_zero(); }

  RatFun& operator+=(const RatFun& o);
  RatFun& operator-=(const RatFun& o);
  RatFun& operator*=(const RatFun& o);
  RatFun& operator/=(const RatFun& o);

  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
  RatFun operator-() const;

  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  [[nodiscard]] std::string to_string() const;

 private:
  RatFun(Poly num, Poly den, int /*already canonical*/) : num_(std::move(num)), den_(std::move(den)) {}
  Poly num_;
  Poly den_;
};

/// Repeated quotient-rule derivative d^order/dz^order, normalized.
RatFun derivative(const RatFun& f, unsigned order = 1);

/// Taylor coefficients of z^0..z^n via the recurrence den * f = num.
/// Throws std::domain_error("not a power series at origin") when den(0) == 0.
std::vector<Rational> expand(const Poly& num, const Poly& den, std::size_t n);
std::vector<Rational> expand(const RatFun& f, std::size_t n);

/// Value equality by cross-multiplication, independent of the canonical form.
bool same_value(const Poly& num_a, const Poly& den_a, const Poly& num_b, const Poly& den_b);
bool same_value(const RatFun& a, const RatFun& b);

}  // namespace poincare

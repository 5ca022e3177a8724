#pragma once

#include "poincare/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace poincare {

/// Dense univariate polynomial in z over the rationals.
///
/// Coefficient i is the coefficient of z^i. The stored sequence never ends in
/// a zero; the zero polynomial is the empty sequence and has degree -1.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Rational> coeffs);
  explicit Poly(std::vector<Rational> coeffs);
  Poly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  Poly(long constant) : Poly(Rational(constant)) {}  // NOLINT(google-explicit-constructor)

  static Poly monomial(const Rational& c, std::size_t exponent);
  /// 1 - z^a.
  static Poly one_minus_z_pow(std::size_t a);
  static Poly from_integers(const std::vector<long>& coeffs);

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] std::size_t size() const { return coeffs_.size(); }
  [[nodiscard]] const std::vector<Rational>& coefficients() const { return coeffs_; }

  /// Coefficient of z^i; zero past the degree.
  [[nodiscard]] Rational coeff(std::size_t i) const;
  [[nodiscard]] const Rational& leading() const;
  [[nodiscard]] Rational constant_term() const { return coeff(0); }
  [[nodiscard]] Rational eval(const Rational& z) const;

  [[nodiscard]] Poly derivative() const;
  /// p(z^a).
  [[nodiscard]] Poly compose_power(std::size_t a) const;
  /// z^k * p(z).
  [[nodiscard]] Poly shift(std::size_t k) const;
  /// Keeps the exponents divisible by n and divides them by n: sum a_{in} z^i.
  [[nodiscard]] Poly multisection(std::size_t n) const;
  [[nodiscard]] Poly monic() const;
  [[nodiscard]] Poly pow(unsigned e) const;

  /// Lowest exponent with a nonzero coefficient; 0 for the zero polynomial.
  [[nodiscard]] std::size_t valuation() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  /// Human-readable ascending form, e.g. "1 + 4z^2 - z^4".
  [[nodiscard]] std::string to_string(const std::string& var = "z") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Euclidean division: returns (q, r) with a = q*b + r and deg r < deg b.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// Monic gcd by the Euclidean remainder sequence; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

/// a / b when b divides a exactly.
std::optional<Poly> exact_quotient(const Poly& a, const Poly& b);

/// Cyclotomic polynomial Phi_n, n >= 1.
Poly cyclotomic(std::size_t n);

}  // namespace poincare

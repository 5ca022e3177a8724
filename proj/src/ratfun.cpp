#include "poincare/ratfun.hpp"

#include <stdexcept>

namespace poincare {

RatFun RatFun::normalize(Poly num, Poly den) {
  if (den.is_zero()) throw std::domain_error("division by zero");
  if (num.is_zero()) return RatFun();
  Poly g = gcd(num, den);
  if (g.degree() > 0) {
    num = divmod(num, g).first;
    den = divmod(den, g).first;
  }
  Rational lead = den.leading();
  if (lead != 1) {
    Rational inv = 1 / lead;
    num *= inv;
    den *= inv;
  }
  return RatFun(std::move(num), std::move(den), 0);
}

RatFun RatFun::from_reduced(Poly num, Poly den) {
  if (den.is_zero()) throw std::domain_error("division by zero");
  if (num.is_zero()) return RatFun();
  Rational lead = den.leading();
  if (lead != 1) {
    Rational inv = 1 / lead;
    num *= inv;
    den *= inv;
  }
  return RatFun(std::move(num), std::move(den), 0);
}

RatFun& RatFun::operator+=(const RatFun& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    *this = normalize(num_ + o.num_, den_);
    return *this;
  }
  // a/b + c/d over lcm(b, d) = b * (d/g).
  Poly g = gcd(den_, o.den_);
  Poly b_over_g = divmod(den_, g).first;
  Poly d_over_g = divmod(o.den_, g).first;
  *this = normalize(num_ * d_over_g + o.num_ * b_over_g, den_ * d_over_g);
  return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
  if (is_zero() || o.is_zero()) return *this = RatFun();
  // Cross-cancel first so the products stay small.
  Poly g1 = gcd(num_, o.den_);
  Poly g2 = gcd(o.num_, den_);
  Poly n1 = divmod(num_, g1).first;
  Poly d2 = divmod(o.den_, g1).first;
  Poly n2 = divmod(o.num_, g2).first;
  Poly d1 = divmod(den_, g2).first;
  *this = normalize(n1 * n2, d1 * d2);
  return *this;
}

RatFun& RatFun::operator/=(const RatFun& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  return *this *= normalize(o.den_, o.num_);
}

RatFun RatFun::operator-() const { return RatFun(-num_, den_, 0); }

std::string RatFun::to_string() const {
  if (den_ == Poly(Rational(1))) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

RatFun derivative(const RatFun& f, unsigned order) {
  RatFun r = f;
  for (unsigned i = 0; i < order; ++i) {
    if (r.is_zero()) break;
    // (n/d)' = (n'd - nd')/d^2; g = gcd(d, d') keeps the intermediate degree down.
    const Poly& n = r.num();
    const Poly& d = r.den();
    Poly dd = d.derivative();
    Poly g = gcd(d, dd);
    Poly d_over_g = g.degree() > 0 ? divmod(d, g).first : d;
    Poly dd_over_g = g.degree() > 0 ? divmod(dd, g).first : dd;
    r = RatFun::normalize(n.derivative() * d_over_g - n * dd_over_g, d * d_over_g);
  }
  return r;
}

std::vector<Rational> expand(const Poly& num, const Poly& den, std::size_t n) {
  if (den.is_zero()) throw std::domain_error("division by zero");
  if (den.constant_term() == 0) throw std::domain_error("not a power series at origin");
  const Rational inv = 1 / den.constant_term();
  const auto& dc = den.coefficients();
  std::vector<Rational> out(n + 1);
  Rational t;
  for (std::size_t i = 0; i <= n; ++i) {
    Rational acc = num.coeff(i);
    const std::size_t top = std::min(i, dc.size() - 1);
    for (std::size_t j = 1; j <= top; ++j) {
      mpq_mul(t.get_mpq_t(), dc[j].get_mpq_t(), out[i - j].get_mpq_t());
      acc -= t;
    }
    out[i] = acc * inv;
  }
  return out;
}

std::vector<Rational> expand(const RatFun& f, std::size_t n) { return expand(f.num(), f.den(), n); }

bool same_value(const Poly& num_a, const Poly& den_a, const Poly& num_b, const Poly& den_b) {
  if (den_a.is_zero() || den_b.is_zero()) throw std::domain_error("division by zero");
  return num_a * den_b == num_b * den_a;
}

bool same_value(const RatFun& a, const RatFun& b) { return same_value(a.num(), a.den(), b.num(), b.den()); }

}  // namespace poincare

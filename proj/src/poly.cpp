#include "poincare/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace poincare {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("division by zero");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const BigInt& n) { return n.get_str(); }

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

namespace {

// p = ints / den with integer coefficients.
struct IntegerForm {
  std::vector<BigInt> ints;
  BigInt den = 1;
};

IntegerForm integer_form(const std::vector<Rational>& c) {
  IntegerForm f;
  for (const auto& q : c) {
    if (q.get_den() != 1) mpz_lcm(f.den.get_mpz_t(), f.den.get_mpz_t(), q.get_den_mpz_t());
  }
  f.ints.reserve(c.size());
  for (const auto& q : c) {
    if (f.den == 1) {
      f.ints.push_back(q.get_num());
    } else {
      f.ints.push_back(q.get_num() * (f.den / q.get_den()));
    }
  }
  return f;
}

}  // namespace

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

Poly Poly::monomial(const Rational& c, std::size_t exponent) {
  if (c == 0) return {};
  std::vector<Rational> v(exponent + 1);
  v[exponent] = c;
  return Poly(std::move(v));
}

Poly Poly::one_minus_z_pow(std::size_t a) {
  std::vector<Rational> v(a + 1);
  v[0] += 1;
  v[a] -= 1;
  return Poly(std::move(v));
}

Poly Poly::from_integers(const std::vector<long>& coeffs) {
  std::vector<Rational> v;
  v.reserve(coeffs.size());
  for (long c : coeffs) v.emplace_back(c);
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

const Rational& Poly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return coeffs_.back();
}

Rational Poly::eval(const Rational& z) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return Poly(std::move(v));
}

Poly Poly::compose_power(std::size_t a) const {
  if (a == 0) return Poly(eval(1));
  if (a == 1 || is_zero()) return *this;
  std::vector<Rational> v((coeffs_.size() - 1) * a + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * a] = coeffs_[i];
  return Poly(std::move(v));
}

Poly Poly::shift(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<Rational> v(coeffs_.size() + k);
  std::copy(coeffs_.begin(), coeffs_.end(), v.begin() + static_cast<std::ptrdiff_t>(k));
  return Poly(std::move(v));
}

Poly Poly::multisection(std::size_t n) const {
  if (n == 0) throw std::domain_error("multisection stride must be positive");
  if (n == 1) return *this;
  std::vector<Rational> v;
  v.reserve(coeffs_.size() / n + 1);
  for (std::size_t i = 0; i < coeffs_.size(); i += n) v.push_back(coeffs_[i]);
  return Poly(std::move(v));
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  Rational inv = 1 / leading();
  return *this * inv;
}

Poly Poly::pow(unsigned e) const {
  Poly result(Rational(1));
  Poly base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

std::size_t Poly::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return i;
  }
  return 0;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

// Convolution over the integers after clearing denominators.
Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  IntegerForm fa = integer_form(a.coeffs_);
  IntegerForm fb = integer_form(b.coeffs_);
  std::vector<BigInt> acc(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < fa.ints.size(); ++i) {
    if (fa.ints[i] == 0) continue;
    for (std::size_t j = 0; j < fb.ints.size(); ++j) {
      mpz_addmul(acc[i + j].get_mpz_t(), fa.ints[i].get_mpz_t(), fb.ints[j].get_mpz_t());
    }
  }
  BigInt den = fa.den * fb.den;
  std::vector<Rational> v;
  v.reserve(acc.size());
  for (auto& x : acc) {
    if (den == 1) {
      v.emplace_back(x);
    } else {
      v.push_back(make_rational(x, den));
    }
  }
  return Poly(std::move(v));
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) out << mag.get_str();
    if (i >= 1) out << var;
    if (i >= 2) out << "^" << i;
  }
  return out.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Rational> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  std::vector<Rational> quot(rem.size() - db);
  const Rational inv = 1 / bc.back();
  Rational t;
  for (std::size_t k = quot.size(); k-- > 0;) {
    Rational q = rem[k + db] * inv;
    quot[k] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) {
      mpq_mul(t.get_mpq_t(), q.get_mpq_t(), bc[j].get_mpq_t());
      rem[k + j] -= t;
    }
  }
  rem.resize(db);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a.monic();
  Poly y = b.monic();
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x;
}

std::optional<Poly> exact_quotient(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

Poly cyclotomic(std::size_t n) {
  if (n == 0) throw std::domain_error("cyclotomic index must be positive");
  Poly p = -Poly::one_minus_z_pow(n);  // z^n - 1
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d == 0) p = divmod(p, cyclotomic(d)).first;
  }
  return p;
}

}  // namespace poincare

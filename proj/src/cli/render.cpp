#include "poincare/render.hpp"

#include <sstream>

namespace poincare {

IntegerFraction integer_cleared(const RatFun& f) {
  BigInt lcm = 1;
  for (const Poly* p : {&f.num(), &f.den()}) {
    for (const auto& c : p->coefficients()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  auto scaled = [&lcm](const Poly& p) {
    std::vector<BigInt> v;
    for (const auto& c : p.coefficients()) v.push_back(c.get_num() * (lcm / c.get_den()));
    return v;
  };
  IntegerFraction out{scaled(f.num()), scaled(f.den())};
  BigInt g = 0;
  for (const auto* v : {&out.numerator, &out.denominator}) {
    for (const auto& c : *v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  const BigInt& lead = out.denominator.front() != 0 ? out.denominator.front() : out.denominator.back();
  if (lead < 0) g = -g;
  for (auto* v : {&out.numerator, &out.denominator}) {
    for (auto& c : *v) c /= g;
  }
  return out;
}

FactoredDisplay factored_display(const RatFun& f) {
  DenominatorSplit split = split_denominator(f.den());
  return {f.num() * (1 / split.unit), std::move(split.factors), std::move(split.remainder)};
}

std::string render_factors(const FactorMap& factors) {
  std::string s;
  for (const auto& [a, e] : factors) {
    if (!s.empty()) s += ' ';
    s += a == 1 ? "(1-z)" : "(1-z^" + std::to_string(a) + ")";
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

std::string render_factored(const FactoredDisplay& f) {
  std::string num = f.numerator.to_string();
  std::size_t terms = 0;
  for (const auto& c : f.numerator.coefficients()) terms += c != 0 ? 1 : 0;
  if (terms > 1) num = "(" + num + ")";
  std::string den = render_factors(f.factors);
  if (f.remainder.degree() > 0) {
    if (!den.empty()) den += ' ';
    den += "(" + f.remainder.to_string() + ")";
  }
  if (den.empty()) return num;
  return num + " / " + den;
}

std::string join(const std::vector<BigInt>& values, const std::string& sep) {
  std::ostringstream s;
  for (std::size_t i = 0; i < values.size(); ++i) s << (i ? sep : "") << values[i].get_str();
  return s.str();
}

std::string join(const std::vector<Rational>& values, const std::string& sep) {
  std::ostringstream s;
  for (std::size_t i = 0; i < values.size(); ++i) s << (i ? sep : "") << values[i].get_str();
  return s.str();
}

}  // namespace poincare

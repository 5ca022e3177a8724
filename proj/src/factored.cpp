#include "poincare/factored.hpp"

#include <stdexcept>

namespace poincare {

namespace {

void check_factors(const FactorMap& f) {
  for (const auto& [a, e] : f) {
    if (a == 0) throw std::domain_error("degenerate factor");
  }
}

FactorMap drop_empty(FactorMap f) {
  std::erase_if(f, [](const auto& kv) { return kv.second == 0; });
  return f;
}

// Multiplies the series in place by 1/(1 - z^a).
void divide_series_by_factor(std::vector<Rational>& s, unsigned a) {
  for (std::size_t i = a; i < s.size(); ++i) s[i] += s[i - a];
}

}  // namespace

Poly expand_factors(const FactorMap& factors) {
  Poly p(Rational(1));
  for (const auto& [a, e] : factors) p *= Poly::one_minus_z_pow(a).pow(e);
  return p;
}

unsigned factor_degree(const FactorMap& factors) {
  unsigned d = 0;
  for (const auto& [a, e] : factors) d += a * e;
  return d;
}

FactorMap common_multiple(const FactorMap& a, const FactorMap& b) {
  FactorMap r = a;
  for (const auto& [k, e] : b) {
    auto& slot = r[k];
    slot = std::max(slot, e);
  }
  return r;
}

FactorMap merge_factors(FactorMap a, const FactorMap& b) {
  for (const auto& [k, e] : b) a[k] += e;
  return a;
}

FactoredRatFun::FactoredRatFun(Poly num, FactorMap den, Rational scale)
    : num_(std::move(num)), den_(drop_empty(std::move(den))), scale_(std::move(scale)) {
  check_factors(den_);
  if (scale_ == 0 || num_.is_zero()) {
    num_ = Poly();
    scale_ = 1;
  }
}

RatFun FactoredRatFun::to_ratfun() const {
  if (is_zero()) return RatFun();
  // prod (1 - z^a)^e = (-1)^{sum e} prod_j Phi_j^{E_j}, E_j = sum_{j | a} e_a.
  std::map<unsigned, unsigned> cyclo;
  unsigned total = 0;
  for (const auto& [a, e] : den_) {
    total += e;
    for (unsigned j = 1; j <= a; ++j) {
      if (a % j == 0) cyclo[j] += e;
    }
  }
  Poly num = scaled_num();
  if (total % 2 == 1) num = -num;
  Poly den(Rational(1));
  for (auto& [j, e] : cyclo) {
    Poly phi = cyclotomic(j);
    unsigned left = e;
    while (left > 0) {
      auto q = exact_quotient(num, phi);
      if (!q) break;
      num = std::move(*q);
      --left;
    }
    if (left > 0) den *= phi.pow(left);
  }
  return RatFun::from_reduced(std::move(num), std::move(den));
}

FactoredRatFun FactoredRatFun::over(const FactorMap& target) const {
  Poly num = num_;
  for (const auto& [a, e] : den_) {
    auto it = target.find(a);
    if (it == target.end() || it->second < e) {
      throw std::logic_error("target denominator does not dominate the current one");
    }
  }
  for (const auto& [a, e] : target) {
    auto it = den_.find(a);
    unsigned have = it == den_.end() ? 0 : it->second;
    if (e > have) num *= Poly::one_minus_z_pow(a).pow(e - have);
  }
  return FactoredRatFun(std::move(num), target, scale_);
}

FactoredRatFun FactoredRatFun::derivative(unsigned order) const {
  FactoredRatFun r = *this;
  for (unsigned step = 0; step < order; ++step) {
    if (r.is_zero()) return r;
    // (P / prod D_a^e_a)' = (P' prod D_a + P sum_a e_a a z^{a-1} prod_{b != a} D_b) / prod D_a^{e_a+1}
    // with D_a = 1 - z^a.
    Poly all(Rational(1));
    for (const auto& [a, e] : r.den_) all *= Poly::one_minus_z_pow(a);
    Poly top = r.num_.derivative() * all;
    for (const auto& [a, e] : r.den_) {
      Poly others = divmod(all, Poly::one_minus_z_pow(a)).first;
      top += r.num_ * others.shift(a - 1) * Rational(static_cast<unsigned long>(e) * a);
    }
    FactorMap den = r.den_;
    for (auto& [a, e] : den) ++e;
    r = FactoredRatFun(std::move(top), std::move(den), r.scale_);
  }
  return r;
}

FactoredRatFun FactoredRatFun::times(const Poly& p) const { return FactoredRatFun(num_ * p, den_, scale_); }

std::vector<Rational> FactoredRatFun::expand(std::size_t n) const {
  std::vector<Rational> s(n + 1);
  for (std::size_t i = 0; i <= n && i < num_.size(); ++i) s[i] = num_.coeff(i) * scale_;
  for (const auto& [a, e] : den_) {
    for (unsigned k = 0; k < e; ++k) divide_series_by_factor(s, a);
  }
  return s;
}

FactoredRatFun& FactoredRatFun::operator+=(const FactoredRatFun& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  FactorMap common = common_multiple(den_, o.den_);
  FactoredRatFun a = over(common);
  FactoredRatFun b = o.over(common);
  *this = FactoredRatFun(a.scaled_num() + b.scaled_num(), std::move(common));
  return *this;
}

DenominatorSplit split_denominator(const Poly& den) {
  if (den.is_zero()) throw std::domain_error("division by zero");
  DenominatorSplit out;
  Poly rest = den;
  for (int a = rest.degree(); a >= 1; --a) {
    const Poly factor = Poly::one_minus_z_pow(static_cast<std::size_t>(a));
    while (rest.degree() >= a) {
      auto q = exact_quotient(rest, factor);
      if (!q) break;
      rest = std::move(*q);
      ++out.factors[static_cast<unsigned>(a)];
    }
  }
  out.unit = rest.leading();
  out.remainder = rest.monic();
  return out;
}

std::optional<FactoredRatFun> to_factored(const RatFun& f) {
  DenominatorSplit split = split_denominator(f.den());
  if (!split.complete()) return std::nullopt;
  return FactoredRatFun(f.num(), split.factors, 1 / split.unit);
}

}  // namespace poincare

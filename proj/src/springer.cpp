#include "poincare/springer.hpp"

#include "poincare/special.hpp"

#include <stdexcept>
#include <string>

namespace poincare {

const PfdTerm& PartialFractions::at(unsigned exponent, unsigned power) const {
  for (const auto& t : terms) {
    if (t.exponent == exponent && t.power == power) return t;
  }
  throw std::out_of_range("no partial-fraction term (" + std::to_string(exponent) + ", " +
                          std::to_string(power) + ")");
}

DerivedFactorSum::DerivedFactorSum(std::vector<unsigned> exponents, std::vector<unsigned> powers)
    : exponents_(std::move(exponents)), base_(powers) {
  if (exponents_.size() != base_.size()) throw std::invalid_argument("exponent/power length mismatch");
  terms_.emplace(std::move(powers), Rational(1));
}

void DerivedFactorSum::differentiate() {
  std::map<std::vector<unsigned>, Rational> next;
  for (const auto& [powers, c] : terms_) {
    for (std::size_t f = 0; f < powers.size(); ++f) {
      if (powers[f] == 0) continue;
      std::vector<unsigned> raised = powers;
      ++raised[f];
      next[raised] += c * powers[f];
    }
  }
  std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
  terms_ = std::move(next);
}

std::vector<DerivedFactorProduct> DerivedFactorSum::terms() const {
  std::vector<DerivedFactorProduct> out;
  for (const auto& [powers, c] : terms_) {
    unsigned zpow = 0;
    for (std::size_t f = 0; f < powers.size(); ++f) zpow += exponents_[f] * (powers[f] - base_[f]);
    out.push_back({c, zpow, powers});
  }
  return out;
}

FactoredRatFun DerivedFactorSum::at_inverse_power(unsigned i, unsigned shift_down) const {
  struct Evaluated {
    Rational coeff;
    unsigned zpow;
    FactorMap den;
  };
  std::vector<Evaluated> evaluated;
  FactorMap common;
  for (const auto& term : terms()) {
    Rational c = term.coeff;
    long zpow = static_cast<long>(term.zpow) - static_cast<long>(i) * shift_down;
    FactorMap den;
    for (std::size_t f = 0; f < exponents_.size(); ++f) {
      const unsigned e = exponents_[f];
      const unsigned m = term.powers[f];
      if (m == 0) continue;
      if (e == i) throw std::logic_error("residual pole at t = z^-" + std::to_string(i));
      if (e > i) {
        den[e - i] += m;
      } else {
        // (1 - z^{-a})^{-m} = (-1)^m z^{a m} (1 - z^a)^{-m}
        const unsigned a = i - e;
        den[a] += m;
        zpow += static_cast<long>(a) * m;
        if (m % 2 == 1) c = -c;
      }
    }
    if (zpow < 0) throw std::logic_error("negative power of z in partial-fraction coefficient");
    common = common_multiple(common, den);
    evaluated.push_back({std::move(c), static_cast<unsigned>(zpow), std::move(den)});
  }
  std::map<std::pair<unsigned, unsigned>, Poly> power_cache;
  auto factor_pow = [&](unsigned a, unsigned e) -> const Poly& {
    auto [it, fresh] = power_cache.try_emplace({a, e});
    if (fresh) it->second = Poly::one_minus_z_pow(a).pow(e);
    return it->second;
  };
  Poly num;
  for (const auto& ev : evaluated) {
    Poly part = Poly::monomial(ev.coeff, ev.zpow);
    for (const auto& [a, e] : common) {
      auto it = ev.den.find(a);
      const unsigned have = it == ev.den.end() ? 0 : it->second;
      if (e > have) part *= factor_pow(a, e - have);
    }
    num += part;
  }
  return FactoredRatFun(std::move(num), std::move(common));
}

namespace {

// All other factors of f_d(t z^{d*}, z) once (1 - t z^i)^{beta_i} is removed.
DerivedFactorSum cofactor(const FactorExponents& beta, unsigned exponent) {
  std::vector<unsigned> exps;
  std::vector<unsigned> pows;
  for (const auto& [e, b] : beta.beta) {
    if (e == exponent) continue;
    exps.push_back(e);
    pows.push_back(b);
  }
  return DerivedFactorSum(std::move(exps), std::move(pows));
}

FactoredRatFun finish_coefficient(const DerivedFactorSum& derived, unsigned exponent, unsigned order) {
  FactoredRatFun v = derived.at_inverse_power(exponent, order);
  Rational scale = make_rational(order % 2 == 0 ? 1 : -1, factorial(order));
  return FactoredRatFun(v.num(), v.den_factors(), v.scale() * scale);
}

}  // namespace

FactoredRatFun pfd_coefficient(const FactorExponents& beta, unsigned exponent, unsigned power) {
  const unsigned b = beta.at(exponent);
  if (power < 1 || power > b) {
    throw std::invalid_argument("partial-fraction power out of range for exponent " + std::to_string(exponent));
  }
  DerivedFactorSum derived = cofactor(beta, exponent);
  const unsigned order = b - power;
  for (unsigned j = 0; j < order; ++j) derived.differentiate();
  return finish_coefficient(derived, exponent, order);
}

PartialFractions partial_fractions(const FactorExponents& beta) {
  PartialFractions pfd;
  pfd.d_star = beta.d_star;
  for (const auto& [i, b] : beta.beta) {
    DerivedFactorSum derived = cofactor(beta, i);
    std::vector<PfdTerm> by_order;
    for (unsigned order = 0; order < b; ++order) {
      if (order > 0) derived.differentiate();
      by_order.push_back({i, b - order, finish_coefficient(derived, i, order)});
    }
    for (auto it = by_order.rbegin(); it != by_order.rend(); ++it) pfd.terms.push_back(std::move(*it));
  }
  return pfd;
}

FactoredRatFun phi_factored(const FactoredRatFun& f, unsigned n) {
  if (n == 0) throw std::invalid_argument("multisection stride must be positive");
  if (n == 1 || f.is_zero()) return f;
  const Poly block = q_block(n);
  Poly num = f.num();
  for (const auto& [a, e] : f.den_factors()) num *= block.compose_power(a).pow(e);
  return FactoredRatFun(num.multisection(n), f.den_factors(), f.scale());
}

RatFun phi(const FactoredRatFun& f, unsigned n) { return phi_factored(f, n).to_ratfun(); }

RatFun phi(const RatFun& f, unsigned n) {
  auto factored = to_factored(f);
  if (!factored) throw std::domain_error("factored form required");
  return phi(*factored, n);
}

FactoredRatFun psi_term_factored(unsigned exponent, unsigned power, const FactoredRatFun& r, unsigned n) {
  if (power < 1) throw std::invalid_argument("partial-fraction power must be positive");
  if (n < 1) throw std::invalid_argument("diagonal stride must be positive");
  if (exponent > n) return FactoredRatFun(Poly(r.at_zero()));
  if (exponent == n) return FactoredRatFun(Poly(r.at_zero()), FactorMap{{1U, power}});
  FactoredRatFun inner = phi_factored(r, n - exponent);
  inner = FactoredRatFun(inner.num().shift(power - 1), inner.den_factors(), inner.scale());
  FactoredRatFun out = inner.derivative(power - 1);
  return FactoredRatFun(out.num(), out.den_factors(), out.scale() / Rational(factorial(power - 1)));
}

RatFun psi_term(unsigned exponent, unsigned power, const FactoredRatFun& r, unsigned n) {
  return psi_term_factored(exponent, power, r, n).to_ratfun();
}

RatFun psi_term(unsigned exponent, unsigned power, const RatFun& r, unsigned n) {
  if (exponent >= n) {
    if (r.den().constant_term() == 0) throw std::domain_error("R(0) undefined");
    const Rational r0 = r.num().constant_term() / r.den().constant_term();
    return psi_term_factored(exponent, power, FactoredRatFun(Poly(r0)), n).to_ratfun();
  }
  auto factored = to_factored(r);
  if (!factored) throw std::domain_error("factored form required");
  return psi_term(exponent, power, *factored, n);
}

namespace {

Poly kind_multiplier(SeriesKind kind) {
  return kind == SeriesKind::invariants ? Poly::one_minus_z_pow(2) : Poly{Rational(1), Rational(1)};
}

}  // namespace

FactoredRatFun poincare_series_factored(const DegreeVector& d, SeriesKind kind) {
  const FactorExponents beta = build_factored_gf(d);
  const PartialFractions pfd = partial_fractions(beta);
  const Poly multiplier = kind_multiplier(kind);
  FactoredRatFun sum;
  for (const auto& term : pfd.terms) {
    sum += psi_term_factored(term.exponent, term.power, term.coefficient.times(multiplier), pfd.d_star);
  }
  return sum;
}

RatFun poincare_series(const DegreeVector& d, SeriesKind kind) { return poincare_series_factored(d, kind).to_ratfun(); }

RatFun single_form_series(unsigned d, SeriesKind kind) {
  if (d < 1) throw std::invalid_argument("form degree must be positive");
  const Poly multiplier = kind_multiplier(kind);
  FactoredRatFun sum;
  for (unsigned k = 0; 2 * k < d; ++k) {
    FactorMap den = merge_factors(q_shifted_factorial(2, 2, k), q_shifted_factorial(2, 2, d - k));
    Poly num = multiplier.shift(k * (k + 1));
    if (k % 2 == 1) num = -num;
    sum += phi_factored(FactoredRatFun(std::move(num), std::move(den)), d - 2 * k);
  }
  return sum.to_ratfun();
}

}  // namespace poincare

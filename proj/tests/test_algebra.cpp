#include "oracles.hpp"
#include "poincare/special.hpp"

#include <doctest.h>

using namespace poincare;

namespace {

Poly P(std::initializer_list<long> c) { return Poly::from_integers(std::vector<long>(c)); }

std::vector<Rational> R(std::initializer_list<long> c) { return {c.begin(), c.end()}; }

}  // namespace

TEST_CASE("rational scalars stay canonical") {
  CHECK(make_rational(6, -4) == Rational(-3, 2));
  CHECK(make_rational(6, -4).get_den() == 2);
  CHECK(make_rational(0, 5).get_den() == 1);
  CHECK_THROWS_WITH_AS(make_rational(1, 0), "division by zero", std::domain_error);
  CHECK(binomial(6, 2) == 15);
  CHECK(factorial(5) == 120);
}

TEST_CASE("poly basics") {
  Poly p = P({1, 2, 0, 0});
  CHECK(p.degree() == 1);
  CHECK(Poly().degree() == -1);
  CHECK(P({0, 0}).is_zero());
  CHECK(P({1, 1}) * P({1, -1}) == P({1, 0, -1}));
  CHECK(P({1, 1, 1}).compose_power(2) == P({1, 0, 1, 0, 1}));
  CHECK(P({1, 2, 3, 4, 5}).multisection(2) == P({1, 3, 5}));
  CHECK(P({1, 2, 3}).derivative() == P({2, 6}));
  CHECK(P({1, -3, 1}).to_string() == "1 - 3z + z^2");
  auto [q, r] = divmod(P({-1, 0, 1}), P({-1, 1}));
  CHECK(q == P({1, 1}));
  CHECK(r.is_zero());
  CHECK(cyclotomic(6) == P({1, -1, 1}));
  CHECK(cyclotomic(4) == P({1, 0, 1}));
}

TEST_CASE("normalize cancels the gcd and makes the denominator monic") {
  RatFun f = RatFun::normalize(P({-1, 0, 1}), P({-1, 1}));
  CHECK(f.num() == P({1, 1}));
  CHECK(f.den() == P({1}));

  RatFun g = RatFun::normalize(P({1}), P({2, -2}));
  CHECK(g.num() == Poly(Rational(-1, 2)));
  CHECK(g.den() == P({-1, 1}));
  CHECK(same_value(g.num(), g.den(), P({1}), P({2, -2})));

  CHECK_THROWS_WITH_AS(RatFun::normalize(P({1}), Poly()), "division by zero", std::domain_error);
}

TEST_CASE("the (1,2,3) numerator is coprime to its denominator") {
  const Poly p = P({1, 1, 6, 12, 20, 29, 35, 39, 35, 29, 20, 12, 6, 1, 1});
  const Poly den = expand_factors({{4, 2}, {1, 2}, {2, 1}, {3, 2}, {5, 1}});
  CHECK(gcd(p, den) == P({1}));
  RatFun f = RatFun::normalize(p, den);
  CHECK(f.den().degree() == den.degree());
  CHECK(same_value(f.num(), f.den(), p, den));
}

TEST_CASE("derivative") {
  // d/dz z/(1-z^2) = (1+z^2)/(1-z^2)^2, by the quotient rule.
  RatFun f = RatFun::normalize(P({0, 1}), P({1, 0, -1}));
  RatFun expected = RatFun::normalize(P({1, 0, 1}), P({1, 0, -1}).pow(2));
  CHECK(derivative(f) == expected);
  CHECK(derivative(RatFun(Rational(7))).is_zero());
  CHECK(derivative(f, 0) == f);

  // d^m/dt^m (1 - t z^2)^{-n} at t = 1 is (n)_m z^{2m} / (1 - z^2)^{n+m}. Here t is
  // the variable and z^2 = 3/5 is a sample point; compare against the closed form.
  const Rational w(3, 5);
  for (unsigned n = 1; n <= 4; ++n) {
    RatFun g = RatFun::normalize(P({1}), Poly{Rational(1), -w}.pow(n));
    for (unsigned m = 0; m <= 4; ++m) {
      RatFun dm = derivative(g, m);
      Rational at1 = dm.num().eval(1) / dm.den().eval(1);
      Rational wm = 1;
      for (unsigned j = 0; j < m; ++j) wm *= w;
      Rational onem = 1;
      for (unsigned j = 0; j < n + m; ++j) onem *= 1 - w;
      CHECK(at1 == Rational(pochhammer(n, m)) * wm / onem);
    }
  }
}

TEST_CASE("expand") {
  // 1/((1-z)^2 (1-z^2)): convolve (m+1) with the indicator of even m.
  std::vector<Rational> conv(5);
  for (int n = 0; n <= 4; ++n) {
    for (int j = 0; j <= n; j += 2) conv[static_cast<std::size_t>(n)] += n - j + 1;
  }
  CHECK(conv == R({1, 2, 4, 6, 9}));
  RatFun f = RatFun::normalize(P({1}), expand_factors({{1, 2}, {2, 1}}));
  CHECK(expand(f, 4) == conv);

  CHECK(expand(RatFun(Rational(1)), 3) == R({1, 0, 0, 0}));
  CHECK(expand(RatFun::normalize(P({1}), P({1, 0, -1})), 6) == R({1, 0, 1, 0, 1, 0, 1}));
  CHECK_THROWS_WITH_AS(expand(RatFun::normalize(P({1}), P({0, 1})), 3), "not a power series at origin",
                       std::domain_error);
}

TEST_CASE("q_block, pochhammer, q-shifted factorial") {
  CHECK(q_block(1) == P({1}));
  CHECK(q_block(2) == P({1, 1}));
  CHECK(q_block(3).compose_power(2) == P({1, 0, 1, 0, 1}));
  CHECK(Poly::one_minus_z_pow(2) * q_block(3).compose_power(2) == Poly::one_minus_z_pow(6));
  CHECK_THROWS_WITH_AS(q_block(0), "empty block", std::domain_error);

  CHECK(pochhammer(5, 0) == 1);
  CHECK(pochhammer(2, 1) == 2);
  CHECK(pochhammer(3, 3) == 60);

  CHECK(q_shifted_factorial(2, 2, 0).empty());
  CHECK(q_shifted_factorial(2, 2, 2) == FactorMap{{2, 1}, {4, 1}});
  CHECK(q_shifted_factorial(2, 2, 3) == FactorMap{{2, 1}, {4, 1}, {6, 1}});
  CHECK_THROWS_WITH_AS(q_shifted_factorial(0, 2, 2), "degenerate factor", std::domain_error);
  CHECK_THROWS_WITH_AS(q_shifted_factorial(-2, 2, 2), "factor exponent must be positive", std::domain_error);
}

TEST_CASE("q_block identity (1 - z^a) Q_n(z^a) = 1 - z^{an}") {
  for (unsigned a = 1; a <= 12; ++a) {
    for (unsigned n = 1; n <= 12; ++n) {
      CHECK(Poly::one_minus_z_pow(a) * q_block(n).compose_power(a) == Poly::one_minus_z_pow(a * n));
    }
  }
}

TEST_CASE("field axioms and gcd on random polynomials") {
  std::mt19937 rng(20240917);
  for (int trial = 0; trial < 60; ++trial) {
    Poly p = oracle::random_poly(rng, 6);
    Poly q = oracle::random_poly(rng, 5);
    if (q.is_zero()) continue;
    Poly g = gcd(p, q);
    if (!p.is_zero()) CHECK(exact_quotient(p, g).has_value());
    CHECK(exact_quotient(q, g).has_value());
    RatFun pq = RatFun::normalize(p * q, q);
    CHECK(pq == RatFun::normalize(p, Poly(Rational(1))));

    Poly r = oracle::random_poly(rng, 4);
    Poly s = oracle::random_poly(rng, 4);
    if (r.is_zero() || s.is_zero()) continue;
    RatFun f = RatFun::normalize(p, r);
    RatFun h = RatFun::normalize(q, s);
    CHECK((f * h) / h == f);
    CHECK((f + h) - h == f);
    CHECK(same_value(f + h, RatFun::normalize(p * s + q * r, r * s)));
  }
}

TEST_CASE("derivative commutes with series expansion") {
  std::mt19937 rng(7);
  const std::size_t n = 20;
  for (int trial = 0; trial < 30; ++trial) {
    Poly num = oracle::random_poly(rng, 6);
    Poly den = oracle::random_poly(rng, 4);
    if (den.constant_term() == 0) den += Poly(Rational(1));
    RatFun f = RatFun::normalize(num, den);
    auto s = expand(f, n);
    auto ds = expand(derivative(f), n - 1);
    for (std::size_t i = 0; i + 1 <= n; ++i) CHECK(ds[i] == s[i + 1] * static_cast<unsigned long>(i + 1));
  }
}

TEST_CASE("factored rational functions") {
  FactoredRatFun f(P({1, 1}), {{2, 1}});
  CHECK(f.to_ratfun() == RatFun::normalize(P({1}), P({1, -1})));
  CHECK(f.at_zero() == 1);
  CHECK_THROWS_WITH_AS(FactoredRatFun(P({1}), {{0, 1}}), "degenerate factor", std::domain_error);

  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    FactoredRatFun g = oracle::random_factored(rng);
    FactoredRatFun h = oracle::random_factored(rng);
    // Cyclotomic reduction agrees with the Euclidean normal form.
    CHECK(g.to_ratfun() == RatFun::normalize(g.scaled_num(), g.expanded_denominator()));
    // An unreduced product denominator splits back into the same factors.
    RatFun gr = g.to_ratfun();
    auto back = to_factored(RatFun::from_reduced(g.scaled_num(), g.expanded_denominator()));
    REQUIRE(back.has_value());
    CHECK(back->den_factors() == g.den_factors());
    CHECK(back->to_ratfun() == gr);
    CHECK((g + h).to_ratfun() == gr + h.to_ratfun());
    CHECK(g.derivative(2).to_ratfun() == derivative(gr, 2));
    CHECK(g.expand(25) == expand(gr, 25));
  }
}

TEST_CASE("greedy denominator split") {
  Poly den = expand_factors({{1, 2}, {2, 1}});
  DenominatorSplit s = split_denominator(den);
  CHECK(s.complete());
  CHECK(s.factors == FactorMap{{1, 2}, {2, 1}});
  CHECK(s.unit == 1);

  DenominatorSplit partial = split_denominator(P({1, 0, 1}) * Poly::one_minus_z_pow(3));
  CHECK_FALSE(partial.complete());
  CHECK(partial.factors == FactorMap{{3, 1}});
  CHECK(partial.remainder == P({1, 0, 1}));
  CHECK_FALSE(to_factored(RatFun::normalize(P({1}), P({1, 0, 1}))).has_value());
}

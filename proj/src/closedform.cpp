#include "poincare/closedform.hpp"

#include "poincare/special.hpp"

#include <stdexcept>

namespace poincare {

namespace {

void require_positive(unsigned n) {
  if (n < 1) throw std::invalid_argument("number of forms must be positive");
}

RatFun over_powers(Poly num, unsigned one_minus_z, unsigned one_minus_z2) {
  Poly den = Poly::one_minus_z_pow(1).pow(one_minus_z) * Poly::one_minus_z_pow(2).pow(one_minus_z2);
  return RatFun::normalize(std::move(num), std::move(den));
}

}  // namespace

RatFun all_ones(unsigned n, SeriesKind kind) {
  require_positive(n);
  RatFun sum;
  for (unsigned k = 1; k <= n; ++k) {
    const unsigned j = n - k;
    Rational c = make_rational(pochhammer(n, j), factorial(j) * factorial(k - 1));
    if (j % 2 == 1) c = -c;
    RatFun inner;
    if (kind == SeriesKind::invariants) {
      // (z / (1 - z^2))^{2n-k-1}
      const unsigned p = 2 * n - k - 1;
      inner = over_powers(Poly::monomial(1, p), 0, p);
    } else {
      // (1 + z) z^{2n-k-1} / (1 - z^2)^{2n-k}
      inner = over_powers(Poly{1, 1}.shift(2 * n - k - 1), 0, 2 * n - k);
    }
    sum += derivative(inner, k - 1) * RatFun(c);
  }
  return sum;
}

RatFun all_twos(unsigned n, SeriesKind kind) {
  require_positive(n);
  RatFun sum;
  for (unsigned k = 1; k <= n; ++k) {
    const unsigned j = n - k;
    RatFun inner;
    for (unsigned i = 0; i <= j; ++i) {
      Poly num = Poly::monomial(Rational(binomial(j, i) * pochhammer(n, i) * pochhammer(n, j - i)),
                                2 * n - k - i - 1);
      if (kind == SeriesKind::invariants) num *= Poly::one_minus_z_pow(1);
      inner += over_powers(std::move(num), n + i, 2 * n - k - i);
    }
    Rational c = make_rational(1, factorial(j) * factorial(k - 1));
    if (j % 2 == 1) c = -c;
    sum += derivative(inner, k - 1) * RatFun(c);
  }
  return sum;
}

RatFun evaluate(const ClosedFormRequest& request) {
  return request.family == ClosedFormFamily::all_ones ? all_ones(request.n, request.kind)
                                                      : all_twos(request.n, request.kind);
}

std::optional<ClosedFormRequest> closed_form_for(const DegreeVector& d, SeriesKind kind) {
  const auto n = static_cast<unsigned>(d.forms());
  if (d.all_equal_to(1)) return ClosedFormRequest{n, ClosedFormFamily::all_ones, kind};
  if (d.all_equal_to(2)) return ClosedFormRequest{n, ClosedFormFamily::all_twos, kind};
  return std::nullopt;
}

}  // namespace poincare

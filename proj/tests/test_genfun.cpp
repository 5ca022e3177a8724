#include "oracles.hpp"

#include <doctest.h>

using namespace poincare;

namespace {

using Beta = std::map<unsigned, unsigned>;

}  // namespace

TEST_CASE("degree vectors") {
  DegreeVector d = DegreeVector::parse("1,2,3");
  CHECK(d.degrees() == std::vector<unsigned>{3, 2, 1});
  CHECK(d.max_degree() == 3);
  CHECK(d.variable_count() == 9);
  CHECK(d.forms() == 3);
  CHECK(DegreeVector::parse("2,1") == DegreeVector::parse("1,2"));
  CHECK_THROWS_AS(DegreeVector::parse("1,0"), std::invalid_argument);
  CHECK_THROWS_AS(DegreeVector::parse("1,-2"), std::invalid_argument);
  CHECK_THROWS_AS(DegreeVector::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(DegreeVector::parse("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(DegreeVector({}), std::invalid_argument);
}

TEST_CASE("factored generating function exponents") {
  CHECK(build_factored_gf(DegreeVector::parse("1,2,4")).beta ==
        Beta{{0, 1}, {2, 2}, {3, 1}, {4, 2}, {5, 1}, {6, 2}, {8, 1}});
  CHECK(build_factored_gf(DegreeVector::parse("1")).beta == Beta{{0, 1}, {2, 1}});
  CHECK(build_factored_gf(DegreeVector::parse("1,2,3")).beta ==
        Beta{{0, 1}, {1, 1}, {2, 2}, {3, 1}, {4, 2}, {5, 1}, {6, 1}});
}

TEST_CASE("weight system") {
  WeightSystem w = weight_system(DegreeVector::parse("2,1"));
  CHECK(w.weights == std::vector<int>{2, 0, -2, 1, -1});
}

TEST_CASE("omega examples against enumeration") {
  const DegreeVector two = DegreeVector::parse("2");
  // Degree-2 monomials in x0, x1, x2 with weights 2, 0, -2: x1^2 and x0 x2 have weight 0, x0 x1 weight 2.
  CHECK(oracle::brute_force_omega(two, 2, 0) == 2);
  CHECK(oracle::brute_force_omega(two, 2, 2) == 1);
  CHECK(omega(two, 2, 0) == 2);
  CHECK(omega(two, 2, 2) == 1);
  CHECK(omega(two, 0, 0) == 1);
  CHECK(omega(two, 0, 2) == 0);
  CHECK(omega(two, 3, 7) == 0);

  for (const char* s : {"1", "2", "3", "1,1", "2,1", "3,1", "4", "2,2", "1,1,1", "3,2"}) {
    const DegreeVector d = DegreeVector::parse(s);
    for (unsigned m = 0; m <= 5; ++m) {
      WeightCounts w(d, m);
      for (long i = -static_cast<long>(m * d.max_degree()) - 1; i <= static_cast<long>(m * d.max_degree()) + 1; ++i) {
        CHECK(w(m, i) == oracle::brute_force_omega(d, m, i));
        CHECK(w(m, i) == w(m, -i));
      }
    }
  }
}

TEST_CASE("gamma and dimension examples") {
  CHECK(gamma(DegreeVector::parse("2"), 2, 0) == 1);
  // Degree-1 elements of weight 2 come only from the leading variable of the quadratic.
  CHECK(oracle::brute_force_omega(DegreeVector::parse("1,2,3"), 1, 2) -
            oracle::brute_force_omega(DegreeVector::parse("1,2,3"), 1, 4) ==
        1);
  CHECK(gamma(DegreeVector::parse("1,2,3"), 1, 2) == 1);
  CHECK(gamma(DegreeVector::parse("3,3"), 0, 0) == 1);

  for (SeriesKind kind : {SeriesKind::invariants, SeriesKind::semiinvariants}) {
    CHECK(dimension(DegreeVector::parse("1,2,3"), 0, kind) == 1);
  }
  CHECK(dimension(DegreeVector::parse("2"), 2, SeriesKind::invariants) ==
        oracle::brute_force_omega(DegreeVector::parse("2"), 2, 0) -
            oracle::brute_force_omega(DegreeVector::parse("2"), 2, 2));
  CHECK(dimension(DegreeVector::parse("2"), 2, SeriesKind::invariants) == 1);
  const DegreeVector ones = DegreeVector::parse("1,1");
  CHECK(dimension(ones, 2, SeriesKind::semiinvariants) ==
        oracle::brute_force_omega(ones, 2, 0) + oracle::brute_force_omega(ones, 2, 1));
  CHECK(dimension(ones, 2, SeriesKind::semiinvariants) == 4);

  auto series = dimension_series(ones, 6, SeriesKind::semiinvariants);
  for (unsigned m = 0; m <= 6; ++m) CHECK(series[m] == dimension(ones, m, SeriesKind::semiinvariants));
}

TEST_CASE("multiplicity table") {
  MultiplicityTable t = multiplicity_table(DegreeVector::parse("2,1"), 3);
  CHECK(t.entries.size() == 7);
  BigInt total = 0;
  for (std::size_t k = 0; k < t.entries.size(); ++k) total += t.entries[k] * static_cast<unsigned long>(k + 1);
  CHECK(total == binomial(3 + 5 - 1, 5 - 1));
}

TEST_CASE("counting invariants on small degree vectors") {
  for (const char* s : {"1", "2", "4", "1,1", "3,1", "2,2", "1,1,1", "4,2", "1,1,1,1", "3,3"}) {
    const DegreeVector d = DegreeVector::parse(s);
    const unsigned n = d.variable_count();
    const FactorExponents beta = build_factored_gf(d);
    CHECK(beta.total() == n);
    for (const auto& [e, b] : beta.beta) CHECK(beta.at(2 * d.max_degree() - e) == b);

    const unsigned max_m = 6;
    WeightCounts w(d, max_m);
    const long span = static_cast<long>(max_m * d.max_degree());
    const oracle::BiSeries gf = oracle::shifted_gf_series(beta, max_m, static_cast<std::size_t>(2 * span));
    for (unsigned m = 0; m <= max_m; ++m) {
      BigInt total = 0;
      const long top = static_cast<long>(m * d.max_degree());
      for (long i = -top; i <= top; ++i) {
        total += w(m, i);
        CHECK(Rational(w(m, i)) == gf.c[m][static_cast<std::size_t>(i + top)]);
      }
      CHECK(total == binomial(m + n - 1, n - 1));
      BigInt weighted = 0;
      for (unsigned k = 0; k <= top; ++k) weighted += gamma(d, m, k) * (k + 1);
      CHECK(weighted == binomial(m + n - 1, n - 1));
    }
  }
}

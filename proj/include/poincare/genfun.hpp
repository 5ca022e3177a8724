#pragma once

// Sylvester-Cayley counting: weights of the variables x_i^(k), the weight
// counts omega_m(d; i), the sl2 multiplicities gamma_m(d; k), and the graded
// dimensions of the invariant and semi-invariant algebras.

#include "poincare/rational.hpp"

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace poincare {

enum class SeriesKind { invariants, semiinvariants };

std::string_view to_string(SeriesKind kind);

/// Degrees (d_1, ..., d_s) of a system of binary forms, sorted descending.
class DegreeVector {
 public:
  /// Throws std::invalid_argument on an empty vector or a degree < 1.
  explicit DegreeVector(std::vector<unsigned> degrees);
  /// Parses "1,2,3".
  static DegreeVector parse(std::string_view text);

  [[nodiscard]] const std::vector<unsigned>& degrees() const { return degrees_; }
  [[nodiscard]] std::size_t forms() const { return degrees_.size(); }
  /// d* = max d_k.
  [[nodiscard]] unsigned max_degree() const { return degrees_.front(); }
  /// N = sum (d_k + 1), the number of variables.
  [[nodiscard]] unsigned variable_count() const;
  [[nodiscard]] bool all_equal_to(unsigned value) const;
  [[nodiscard]] std::string to_string() const;

  friend auto operator<=>(const DegreeVector&, const DegreeVector&) = default;

 private:
  std::vector<unsigned> degrees_;
};

/// Multiplicities beta_e of the factors (1 - t z^e) in f_d(t z^{d*}, z).
struct FactorExponents {
  unsigned d_star = 0;
  std::map<unsigned, unsigned> beta;  // e -> beta_e > 0, 0 <= e <= 2 d*

  [[nodiscard]] unsigned total() const;
  [[nodiscard]] unsigned at(unsigned e) const;
};

FactorExponents build_factored_gf(const DegreeVector& d);

/// The weight d_k - 2i of every variable x_i^(k).
struct WeightSystem {
  std::vector<int> weights;
};

WeightSystem weight_system(const DegreeVector& d);

/// omega_m(d; i) for every m <= max_m and every weight i, from one
/// dynamic-programming pass over the variables. Rows are indexed by the
/// shifted weight i + max_m * d* so the table stays nonnegative.
class WeightCounts {
 public:
  WeightCounts(const DegreeVector& d, unsigned max_m);

  /// omega_m(d; i); zero when |i| > m d*.
  [[nodiscard]] BigInt operator()(unsigned m, long i) const;
  [[nodiscard]] unsigned max_m() const { return static_cast<unsigned>(rows_.size()) - 1; }
  [[nodiscard]] long offset() const { return offset_; }

 private:
  long offset_;
  std::vector<std::vector<BigInt>> rows_;
};

BigInt omega(const DegreeVector& d, unsigned m, long i);

/// gamma_m(d; k) = omega_m(d; k) - omega_m(d; k + 2). A negative difference
/// is a bug and throws std::logic_error.
BigInt gamma(const DegreeVector& d, unsigned m, unsigned k);

/// gamma_m(d; k) for 0 <= k <= m d*.
struct MultiplicityTable {
  DegreeVector d;
  unsigned m;
  std::vector<BigInt> entries;
};

MultiplicityTable multiplicity_table(const DegreeVector& d, unsigned m);

/// dim of the degree-m component: omega_m(0) - omega_m(2) for invariants,
/// omega_m(0) + omega_m(1) for semi-invariants (= kernel = covariants).
BigInt dimension(const DegreeVector& d, unsigned m, SeriesKind kind);

/// dimension(d, m, kind) for m = 0..max_m.
std::vector<BigInt> dimension_series(const DegreeVector& d, unsigned max_m, SeriesKind kind);

}  // namespace poincare

#include "poincare/genfun.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <stdexcept>

namespace poincare {

std::string_view to_string(SeriesKind kind) {
  return kind == SeriesKind::invariants ? "invariants" : "semiinvariants";
}

DegreeVector::DegreeVector(std::vector<unsigned> degrees) : degrees_(std::move(degrees)) {
  if (degrees_.empty()) throw std::invalid_argument("degree vector must be nonempty");
  for (unsigned dk : degrees_) {
    if (dk < 1) throw std::invalid_argument("degrees must be positive integers");
  }
  std::sort(degrees_.begin(), degrees_.end(), std::greater<>());
}

DegreeVector DegreeVector::parse(std::string_view text) {
  std::vector<unsigned> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(pos, comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    long value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw std::invalid_argument("malformed degree entry '" + std::string(item) + "'");
    }
    if (value < 1) throw std::invalid_argument("degrees must be positive integers");
    out.push_back(static_cast<unsigned>(value));
    pos = comma + 1;
  }
  return DegreeVector(std::move(out));
}

unsigned DegreeVector::variable_count() const {
  unsigned n = 0;
  for (unsigned dk : degrees_) n += dk + 1;
  return n;
}

bool DegreeVector::all_equal_to(unsigned value) const {
  return std::all_of(degrees_.begin(), degrees_.end(), [value](unsigned dk) { return dk == value; });
}

std::string DegreeVector::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(degrees_[i]);
  }
  return s;
}

unsigned FactorExponents::total() const {
  unsigned n = 0;
  for (const auto& [e, b] : beta) n += b;
  return n;
}

unsigned FactorExponents::at(unsigned e) const {
  auto it = beta.find(e);
  return it == beta.end() ? 0 : it->second;
}

FactorExponents build_factored_gf(const DegreeVector& d) {
  // x_j^(k) has weight d_k - 2j; shifting t -> t z^{d*} gives exponent d* - d_k + 2j.
  FactorExponents f;
  f.d_star = d.max_degree();
  for (unsigned dk : d.degrees()) {
    for (unsigned j = 0; j <= dk; ++j) ++f.beta[f.d_star - dk + 2 * j];
  }
  return f;
}

WeightSystem weight_system(const DegreeVector& d) {
  WeightSystem w;
  for (unsigned dk : d.degrees()) {
    for (unsigned j = 0; j <= dk; ++j) w.weights.push_back(static_cast<int>(dk) - 2 * static_cast<int>(j));
  }
  return w;
}

WeightCounts::WeightCounts(const DegreeVector& d, unsigned max_m)
    : offset_(static_cast<long>(max_m) * d.max_degree()) {
  const std::size_t width = 2 * static_cast<std::size_t>(offset_) + 1;
  rows_.assign(max_m + 1, std::vector<BigInt>(width));
  rows_[0][static_cast<std::size_t>(offset_)] = 1;
  // Unbounded knapsack over the variables: ascending m reuses the variable.
  for (int w : weight_system(d).weights) {
    for (unsigned m = 1; m <= max_m; ++m) {
      auto& row = rows_[m];
      const auto& prev = rows_[m - 1];
      for (std::size_t idx = 0; idx < width; ++idx) {
        const long src = static_cast<long>(idx) - w;
        if (src < 0 || src >= static_cast<long>(width)) continue;
        const BigInt& v = prev[static_cast<std::size_t>(src)];
        if (v != 0) row[idx] += v;
      }
    }
  }
}

BigInt WeightCounts::operator()(unsigned m, long i) const {
  if (m >= rows_.size()) throw std::out_of_range("degree beyond the computed table");
  const long idx = i + offset_;
  if (idx < 0 || idx >= static_cast<long>(rows_[m].size())) return 0;
  return rows_[m][static_cast<std::size_t>(idx)];
}

BigInt omega(const DegreeVector& d, unsigned m, long i) { return WeightCounts(d, m)(m, i); }

namespace {

BigInt gamma_from(const WeightCounts& w, unsigned m, unsigned k) {
  BigInt g = w(m, k) - w(m, static_cast<long>(k) + 2);
  if (g < 0) throw std::logic_error("negative sl2 multiplicity: weight counts are not unimodal");
  return g;
}

}  // namespace

BigInt gamma(const DegreeVector& d, unsigned m, unsigned k) { return gamma_from(WeightCounts(d, m), m, k); }

MultiplicityTable multiplicity_table(const DegreeVector& d, unsigned m) {
  WeightCounts w(d, m);
  MultiplicityTable t{d, m, {}};
  for (unsigned k = 0; k <= m * d.max_degree(); ++k) t.entries.push_back(gamma_from(w, m, k));
  return t;
}

namespace {

BigInt dimension_from(const WeightCounts& w, unsigned m, SeriesKind kind) {
  if (kind == SeriesKind::invariants) return w(m, 0) - w(m, 2);
  return w(m, 0) + w(m, 1);
}

}  // namespace

BigInt dimension(const DegreeVector& d, unsigned m, SeriesKind kind) {
  return dimension_from(WeightCounts(d, m), m, kind);
}

std::vector<BigInt> dimension_series(const DegreeVector& d, unsigned max_m, SeriesKind kind) {
  WeightCounts w(d, max_m);
  std::vector<BigInt> out;
  out.reserve(max_m + 1);
  for (unsigned m = 0; m <= max_m; ++m) out.push_back(dimension_from(w, m, kind));
  return out;
}

}  // namespace poincare

#include "poincare/cli.hpp"

#include "poincare/closedform.hpp"
#include "poincare/render.hpp"
#include "poincare/springer.hpp"

#include <json.hpp>

#include <ostream>

namespace poincare::cli {

namespace {

using nlohmann::json;

json number(const Rational& q) {
  if (is_integer(q) && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return q.get_str();
}

json number(const BigInt& n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

template <typename T>
json numbers(const std::vector<T>& values) {
  json a = json::array();
  for (const auto& v : values) a.push_back(number(v));
  return a;
}

json degrees_json(const DegreeVector& d) {
  json a = json::array();
  for (unsigned dk : d.degrees()) a.push_back(dk);
  return a;
}

// Series from both routes, plus closed forms and the single-form formula
// where they apply. Reports every disagreement on `err`.
bool verify_all(const Request& req, const RatFun& springer, unsigned truncate, std::ostream& err) {
  const SeriesKind kind = series_kind(req.kind);
  bool ok = true;
  const auto series = expand(springer, truncate);
  const auto dims = dimension_series(req.d, truncate, kind);
  for (unsigned m = 0; m <= truncate; ++m) {
    if (series[m] != Rational(dims[m])) {
      err << "verification failed: d=" << req.d.to_string() << " kind=" << to_string(kind) << " m=" << m
          << ": springer " << series[m].get_str() << ", counting " << dims[m].get_str() << "\n";
      ok = false;
    }
  }
  if (auto cf = closed_form_for(req.d, kind); cf && !same_value(evaluate(*cf), springer)) {
    err << "verification failed: d=" << req.d.to_string() << " kind=" << to_string(kind)
        << ": closed form differs from springer\n";
    ok = false;
  }
  if (req.d.forms() == 1 && !same_value(single_form_series(req.d.max_degree(), kind), springer)) {
    err << "verification failed: d=" << req.d.to_string() << " kind=" << to_string(kind)
        << ": single-form formula differs from springer\n";
    ok = false;
  }
  return ok;
}

}  // namespace

int run(const Request& req, std::ostream& out, std::ostream& err) {
  const SeriesKind kind = series_kind(req.kind);
  const unsigned truncate = req.truncate.value_or(kDefaultTruncate);

  if (req.method == Method::counting) {
    if (req.format == Format::reduced || req.format == Format::factored) {
      throw UsageError("the counting method yields series coefficients only; use --format series or json");
    }
    const auto dims = dimension_series(req.d, truncate, kind);
    if (req.format == Format::series) {
      out << join(dims) << "\n";
    } else {
      json j{{"d", degrees_json(req.d)},
             {"kind", to_string(req.kind)},
             {"method", to_string(req.method)},
             {"series", numbers(dims)}};
      out << j.dump() << "\n";
    }
    return kExitOk;
  }

  const auto cf = closed_form_for(req.d, kind);
  if (req.method == Method::closedform && !cf) {
    throw UsageError("the closedform method needs all degrees equal to 1 or all equal to 2");
  }
  const RatFun result = req.method == Method::closedform ? evaluate(*cf) : poincare_series(req.d, kind);

  int code = kExitOk;
  if (req.method == Method::all && !verify_all(req, result, truncate, err)) code = kExitVerification;

  switch (req.format) {
    case Format::reduced: {
      const IntegerFraction f = integer_cleared(result);
      out << "numerator: " << join(f.numerator) << "\n";
      out << "denominator: " << join(f.denominator) << "\n";
      break;
    }
    case Format::factored:
      out << render_factored(factored_display(result)) << "\n";
      break;
    case Format::series:
      out << join(expand(result, truncate)) << "\n";
      break;
    case Format::json: {
      const IntegerFraction reduced = integer_cleared(result);
      const FactoredDisplay fd = factored_display(result);
      json factors = json::array();
      for (const auto& [a, e] : fd.factors) factors.push_back({a, e});
      json j{{"d", degrees_json(req.d)},
             {"kind", to_string(req.kind)},
             {"method", to_string(req.method)},
             {"numerator", numbers(fd.numerator.coefficients())},
             {"denominator_factors", factors},
             {"reduced", {{"numerator", numbers(reduced.numerator)}, {"denominator", numbers(reduced.denominator)}}}};
      if (fd.remainder.degree() > 0) j["denominator_remainder"] = numbers(fd.remainder.coefficients());
      if (req.truncate) j["series"] = numbers(expand(result, truncate));
      out << j.dump() << "\n";
      break;
    }
  }
  return code;
}

}  // namespace poincare::cli

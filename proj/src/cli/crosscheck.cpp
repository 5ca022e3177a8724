#include "poincare/cli.hpp"

#include "poincare/closedform.hpp"
#include "poincare/render.hpp"
#include "poincare/springer.hpp"

#include <future>
#include <ostream>

namespace poincare::cli {

namespace {

void extend(std::vector<unsigned>& prefix, unsigned max_part, unsigned budget, std::vector<DegreeVector>& out) {
  for (unsigned dk = std::min(max_part, budget > 0 ? budget - 1 : 0); dk >= 1; --dk) {
    prefix.push_back(dk);
    out.emplace_back(prefix);
    extend(prefix, dk, budget - (dk + 1), out);
    prefix.pop_back();
  }
}

struct Verdict {
  std::vector<std::string> lines;
  std::size_t failures = 0;
};

Verdict check_one(const DegreeVector& d, unsigned max_m) {
  Verdict v;
  for (SeriesKind kind : {SeriesKind::invariants, SeriesKind::semiinvariants}) {
    const std::string label = "d=" + d.to_string() + " " + std::string(to_string(kind));
    const RatFun springer = poincare_series(d, kind);
    const auto series = expand(springer, max_m);
    const auto dims = dimension_series(d, max_m, kind);
    bool ok = true;
    for (unsigned m = 0; m <= max_m; ++m) {
      if (series[m] != Rational(dims[m])) {
        v.lines.push_back("FAIL " + label + " m=" + std::to_string(m) + ": springer " + series[m].get_str() +
                          ", counting " + dims[m].get_str());
        ok = false;
        break;
      }
    }
    if (auto cf = closed_form_for(d, kind); cf && evaluate(*cf) != springer) {
      v.lines.push_back("FAIL " + label + ": closed form differs from springer");
      ok = false;
    }
    if (d.forms() == 1 && single_form_series(d.max_degree(), kind) != springer) {
      v.lines.push_back("FAIL " + label + ": single-form formula differs from springer");
      ok = false;
    }
    if (ok) {
      v.lines.push_back("PASS " + label + ": " + join(dims));
    } else {
      ++v.failures;
    }
  }
  return v;
}

}  // namespace

std::vector<DegreeVector> enumerate_degree_vectors(unsigned max_n, unsigned max_deg) {
  std::vector<DegreeVector> out;
  std::vector<unsigned> prefix;
  extend(prefix, max_deg, max_n, out);
  std::sort(out.begin(), out.end());
  return out;
}

int crosscheck(const CrosscheckOptions& options, std::ostream& out, std::ostream& err) {
  const auto vectors = enumerate_degree_vectors(options.max_n, options.max_deg);
  if (vectors.empty()) err << "warning: no degree vectors within the bounds\n";
  std::vector<std::future<Verdict>> jobs;
  jobs.reserve(vectors.size());
  for (const auto& d : vectors) {
    jobs.push_back(std::async(std::launch::async, check_one, d, options.max_m));
  }
  std::size_t failures = 0;
  for (auto& job : jobs) {
    Verdict v = job.get();
    failures += v.failures;
    for (const auto& line : v.lines) out << line << "\n";
  }
  out << "crosscheck: " << vectors.size() << " degree vectors, " << failures << " failures\n";
  return failures == 0 ? kExitOk : kExitVerification;
}

}  // namespace poincare::cli

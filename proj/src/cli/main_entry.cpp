#include "poincare/cli.hpp"

#include <CLI11.hpp>

#include <ostream>

namespace poincare::cli {

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Poincare series of kernels of Weitzenboeck derivations and of joint (semi-)invariants of binary forms"};
  app.require_subcommand(0, 1);

  std::string degrees;
  std::string kind = "semiinvariants";
  std::string method = "springer";
  std::string format = "reduced";
  std::optional<unsigned> truncate;
  app.add_option("--d", degrees, "comma-separated positive degrees, e.g. 1,2,3");
  app.add_option("--kind", kind, "invariants|semiinvariants|covariants|kernel");
  app.add_option("--method", method, "springer|counting|closedform|all");
  app.add_option("--format", format, "reduced|factored|series|json");
  app.add_option("--truncate", truncate, "highest degree for series output (default 10)");

  auto* golden = app.add_subcommand("golden-check", "verify a golden corpus of Poincare series");
  std::string corpus;
  golden->add_option("path", corpus, "corpus file")->required();

  auto* cross = app.add_subcommand("crosscheck", "compare the springer pipeline with weight counting");
  CrosscheckOptions options;
  cross->add_option("--max-n", options.max_n, "bound on sum(d_k + 1)");
  cross->add_option("--max-deg", options.max_deg, "bound on each degree");
  cross->add_option("--max-m", options.max_m, "highest series degree compared");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (golden->parsed()) return golden_check_file(corpus, out, err);
  if (cross->parsed()) return crosscheck(options, out, err);

  try {
    if (degrees.empty()) throw UsageError("--d is required (or use a subcommand); see --help");
    Request request{DegreeVector::parse(degrees), parse_kind(kind), parse_method(method), truncate,
                    parse_format(format)};
    return run(request, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace poincare::cli

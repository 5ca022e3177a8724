#include "poincare/cli.hpp"

namespace poincare::cli {

RequestKind parse_kind(const std::string& text) {
  if (text == "invariants") return RequestKind::invariants;
  if (text == "semiinvariants") return RequestKind::semiinvariants;
  if (text == "covariants") return RequestKind::covariants;
  if (text == "kernel") return RequestKind::kernel;
  throw UsageError("unknown kind '" + text + "' (expected invariants|semiinvariants|covariants|kernel)");
}

Method parse_method(const std::string& text) {
  if (text == "springer") return Method::springer;
  if (text == "counting") return Method::counting;
  if (text == "closedform") return Method::closedform;
  if (text == "all") return Method::all;
  throw UsageError("unknown method '" + text + "' (expected springer|counting|closedform|all)");
}

Format parse_format(const std::string& text) {
  if (text == "reduced") return Format::reduced;
  if (text == "factored") return Format::factored;
  if (text == "series") return Format::series;
  if (text == "json") return Format::json;
  throw UsageError("unknown format '" + text + "' (expected reduced|factored|series|json)");
}

std::string to_string(RequestKind kind) {
  switch (kind) {
    case RequestKind::invariants: return "invariants";
    case RequestKind::semiinvariants: return "semiinvariants";
    case RequestKind::covariants: return "covariants";
    case RequestKind::kernel: return "kernel";
  }
  return {};
}

std::string to_string(Method method) {
  switch (method) {
    case Method::springer: return "springer";
    case Method::counting: return "counting";
    case Method::closedform: return "closedform";
    case Method::all: return "all";
  }
  return {};
}

SeriesKind series_kind(RequestKind kind) {
  return kind == RequestKind::invariants ? SeriesKind::invariants : SeriesKind::semiinvariants;
}

}  // namespace poincare::cli

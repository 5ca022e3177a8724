#pragma once

// Command-line front end: request parsing, output rendering, and the golden
// corpus and cross-check verification runs. Everything writes to caller
// supplied streams so it can be driven from tests.

#include "poincare/factored.hpp"
#include "poincare/genfun.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace poincare::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerification = 2;

inline constexpr unsigned kDefaultTruncate = 10;

enum class RequestKind { invariants, semiinvariants, covariants, kernel };
enum class Method { springer, counting, closedform, all };
enum class Format { reduced, factored, series, json };

RequestKind parse_kind(const std::string& text);
Method parse_method(const std::string& text);
Format parse_format(const std::string& text);
std::string to_string(RequestKind kind);
std::string to_string(Method method);

/// covariants and kernel share the semi-invariant series.
SeriesKind series_kind(RequestKind kind);

struct Request {
  DegreeVector d;
  RequestKind kind = RequestKind::semiinvariants;
  Method method = Method::springer;
  std::optional<unsigned> truncate;
  Format format = Format::reduced;
};

/// Bad flags or a request the chosen method cannot serve.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Evaluates the request and writes the rendering to `out`. Returns an exit code.
int run(const Request& request, std::ostream& out, std::ostream& err);

struct GoldenRecord {
  DegreeVector d;
  SeriesKind kind;
  std::vector<BigInt> numerator;  // ascending
  FactorMap denominator;          // a -> e, prod (1 - z^a)^e
  bool sign_insensitive = false;
  std::size_t line = 0;
};

/// Parse failure, carrying the 1-based line and the offending field.
class CorpusError : public std::runtime_error {
 public:
  CorpusError(std::size_t line, const std::string& field, const std::string& what);
  [[nodiscard]] std::size_t line() const { return line_; }
  [[nodiscard]] const std::string& field() const { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

/// One record per line: `d=1,2,3; kind=semiinvariants; num=1,1,6; den=(4,2)(1,2); sign_insensitive=false`.
/// Blank lines and lines starting with '#' are skipped.
std::vector<GoldenRecord> parse_corpus(std::istream& in);
std::string format_record(const GoldenRecord& record);

/// Recomputes every record with the springer pipeline and compares by cross-multiplication.
int golden_check(std::istream& corpus, std::ostream& out, std::ostream& err);
int golden_check_file(const std::string& path, std::ostream& out, std::ostream& err);

struct CrosscheckOptions {
  unsigned max_n = 8;
  unsigned max_deg = 4;
  unsigned max_m = kDefaultTruncate;
};

/// Every degree multiset with entries in [1, max_deg] and sum (d_k + 1) <= max_n.
std::vector<DegreeVector> enumerate_degree_vectors(unsigned max_n, unsigned max_deg);

int crosscheck(const CrosscheckOptions& options, std::ostream& out, std::ostream& err);

/// Full command line, argv[0] included.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace poincare::cli

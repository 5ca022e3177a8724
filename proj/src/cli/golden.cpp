#include "poincare/cli.hpp"

#include "poincare/springer.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace poincare::cli {

CorpusError::CorpusError(std::size_t line, const std::string& field, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", field '" + field + "': " + what),
      line_(line),
      field_(field) {}

namespace {

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<BigInt> parse_integers(const std::string& text, std::size_t line, const std::string& field) {
  std::vector<BigInt> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    BigInt v;
    if (item.empty() || v.set_str(item, 10) != 0) throw CorpusError(line, field, "not an integer: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

// "(4,2)(1,2)(2,1)"
FactorMap parse_factors(const std::string& text, std::size_t line) {
  FactorMap f;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ' ') {
      ++pos;
      continue;
    }
    const auto close = text.find(')', pos);
    if (text[pos] != '(' || close == std::string::npos) throw CorpusError(line, "den", "expected '(a,e)'");
    const auto pair = parse_integers(text.substr(pos + 1, close - pos - 1), line, "den");
    if (pair.size() != 2 || pair[0] < 1 || pair[1] < 1 || !pair[0].fits_uint_p() || !pair[1].fits_uint_p()) {
      throw CorpusError(line, "den", "factor must be (a,e) with positive a and e");
    }
    f[static_cast<unsigned>(pair[0].get_ui())] += static_cast<unsigned>(pair[1].get_ui());
    pos = close + 1;
  }
  return f;
}

SeriesKind parse_record_kind(const std::string& text, std::size_t line) {
  try {
    return series_kind(parse_kind(text));
  } catch (const UsageError& e) {
    throw CorpusError(line, "kind", e.what());
  }
}

GoldenRecord parse_record(const std::string& text, std::size_t line) {
  std::map<std::string, std::string> fields;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    item = trim(item);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw CorpusError(line, item, "expected key=value");
    const std::string key = trim(item.substr(0, eq));
    if (!fields.emplace(key, trim(item.substr(eq + 1))).second) throw CorpusError(line, key, "duplicate field");
  }
  for (const char* required : {"d", "kind", "num", "den"}) {
    if (!fields.count(required)) throw CorpusError(line, required, "missing");
  }
  for (const auto& [key, value] : fields) {
    if (key != "d" && key != "kind" && key != "num" && key != "den" && key != "sign_insensitive") {
      throw CorpusError(line, key, "unknown field");
    }
  }
  std::optional<DegreeVector> d;
  try {
    d = DegreeVector::parse(fields["d"]);
  } catch (const std::invalid_argument& e) {
    throw CorpusError(line, "d", e.what());
  }
  GoldenRecord r{*d, parse_record_kind(fields["kind"], line), parse_integers(fields["num"], line, "num"),
                 parse_factors(fields["den"], line), false, line};
  if (auto it = fields.find("sign_insensitive"); it != fields.end()) {
    if (it->second == "true") {
      r.sign_insensitive = true;
    } else if (it->second != "false") {
      throw CorpusError(line, "sign_insensitive", "expected true or false");
    }
  }
  return r;
}

Poly record_numerator(const GoldenRecord& r) {
  std::vector<Rational> c;
  for (const auto& v : r.numerator) c.emplace_back(v);
  return Poly(std::move(c));
}

}  // namespace

std::vector<GoldenRecord> parse_corpus(std::istream& in) {
  std::vector<GoldenRecord> records;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    text = trim(text);
    if (text.empty() || text.front() == '#') continue;
    records.push_back(parse_record(text, line));
  }
  return records;
}

std::string format_record(const GoldenRecord& r) {
  std::ostringstream s;
  s << "d=" << r.d.to_string() << "; kind=" << to_string(r.kind) << "; num=";
  for (std::size_t i = 0; i < r.numerator.size(); ++i) s << (i ? "," : "") << r.numerator[i].get_str();
  s << "; den=";
  for (const auto& [a, e] : r.denominator) s << "(" << a << "," << e << ")";
  s << "; sign_insensitive=" << (r.sign_insensitive ? "true" : "false");
  return s.str();
}

int golden_check(std::istream& corpus, std::ostream& out, std::ostream& err) {
  std::vector<GoldenRecord> records;
  try {
    records = parse_corpus(corpus);
  } catch (const CorpusError& e) {
    err << "corpus error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (records.empty()) err << "warning: corpus contains no records\n";
  std::size_t failed = 0;
  for (const auto& r : records) {
    const RatFun computed = poincare_series(r.d, r.kind);
    const Poly num = record_numerator(r);
    const Poly den = expand_factors(r.denominator);
    const bool exact = same_value(computed.num(), computed.den(), num, den);
    const bool flipped = !exact && r.sign_insensitive && same_value(computed.num(), computed.den(), -num, den);
    const std::string label = "d=" + r.d.to_string() + " kind=" + std::string(to_string(r.kind));
    if (exact) {
      out << "PASS " << label << "\n";
    } else if (flipped) {
      out << "PASS " << label << " (up to overall sign)\n";
    } else {
      ++failed;
      out << "FAIL " << label << " (line " << r.line << "): computed " << computed.to_string() << "\n";
    }
  }
  out << "summary: " << records.size() - failed << " passed, " << failed << " failed\n";
  return failed == 0 ? kExitOk : kExitVerification;
}

int golden_check_file(const std::string& path, std::ostream& out, std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "cannot read corpus file '" << path << "'\n";
    return kExitUsage;
  }
  return golden_check(in, out, err);
}

}  // namespace poincare::cli

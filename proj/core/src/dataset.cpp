// Copyright 2026 The wfano Authors
// SPDX-License-Identifier: Apache-2.0

#include "wfano/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "wfano/error.hpp"

namespace wfano {

PencilCount PencilCount::finite(int n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "pencil count must be positive");
  PencilCount p;
  p.infinite_ = false;
  p.value_ = n;
  return p;
}

int PencilCount::value() const {
  if (infinite_) throw Error(Errc::InvalidArgument, "pencil count is infinite");
  return value_;
}

std::string PencilCount::to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

class LineParser {
 public:
  LineParser(std::size_t line_no, std::string_view line)
      : line_no_(line_no), line_(line), tokens_(tokenize(line)) {}

  const std::vector<Token>& tokens() const { return tokens_; }

  [[noreturn]] void fail(std::size_t index, const std::string& expected,
                         const std::string& detail = {}, Errc code = Errc::SyntaxError) const {
    const std::size_t col = index < tokens_.size() ? tokens_[index].column : line_.size() + 1;
    throw ParseError(code, line_no_, col, expected, detail);
  }

  void expect_count(std::size_t n, const std::string& what) const {
    if (tokens_.size() < n) fail(tokens_.size(), what);
    if (tokens_.size() > n) fail(n, "end of line");
  }

  int integer(std::size_t index, const std::string& what, int min_value) const {
    if (index >= tokens_.size()) fail(index, what);
    auto t = tokens_[index].text;
    int value = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc() || ptr != t.data() + t.size() || value < min_value) fail(index, what);
    return value;
  }

  Rational rational(std::size_t index, const std::string& what) const {
    if (index >= tokens_.size()) fail(index, what);
    auto r = parse_rational(tokens_[index].text);
    if (!r) fail(index, what);
    return *r;
  }

  /// Verbatim text from token `index` to end of line.
  std::string rest(std::size_t index, const std::string& what) const {
    if (index >= tokens_.size()) fail(index, what);
    std::string_view s = line_.substr(tokens_[index].column - 1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return std::string(s);
  }

  std::size_t line_no() const { return line_no_; }

 private:
  std::size_t line_no_;
  std::string_view line_;
  std::vector<Token> tokens_;
};

struct PartialRecord {
  FamilyRecord record;
  std::size_t start_line = 0;
  std::set<std::string> seen;
};

void parse_point(const LineParser& p, FamilyRecord& rec) {
  const auto& t = p.tokens();
  static const char* const kFields[] = {"", "locus", "count", "singularity type", "annotation"};
  if (t.size() < 5) p.fail(t.size(), kFields[t.size()]);
  BasketRow row;
  auto locus = parse_locus(t[1].text);
  if (!locus) p.fail(1, "locus such as P4 or P1P2");
  row.locus = *locus;
  row.count = p.integer(2, "positive point count", 1);
  if (locus->is_point() && row.count != 1) p.fail(2, "count 1 at a coordinate point");
  row.type_text = std::string(t[3].text);
  std::optional<QuotientSingularityType> type;
  try {
    type = parse_singularity(t[3].text);
  } catch (const Error& e) {
    p.fail(3, "terminal singularity type", e.what(), e.code());
  }
  if (!type) p.fail(3, "singularity type 1/r(x,y,z)");
  row.type = *type;

  const std::string_view kind = t[4].text;
  if (kind == "-") {
    p.expect_count(5, "end of line");
    row.annotation = NoAnnotation{};
  } else if (kind == "bc") {
    p.expect_count(7, "b and c");
    row.annotation = BcAnnotation{p.integer(5, "non-negative b", 0), p.integer(6, "non-negative c", 0)};
  } else if (kind == "qi" || kind == "ei") {
    UntwistingAnnotation u;
    u.kind = kind == "qi" ? UntwistingAnnotation::Kind::Quadratic : UntwistingAnnotation::Kind::Elliptic;
    u.text = p.rest(5, "untwisting text");
    row.annotation = std::move(u);
  } else {
    p.fail(4, "annotation '-', 'bc', 'qi' or 'ei'");
  }
  rec.basket.push_back(std::move(row));
}

}  // namespace

std::vector<FamilyRecord> parse_table(std::string_view source) {
  std::vector<FamilyRecord> records;
  std::set<int> gimels;
  std::optional<PartialRecord> current;
  std::optional<std::array<int, 4>> raw_weights;
  std::size_t weights_line = 0;
  int degree = 0;
  std::size_t degree_line = 0;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= source.size()) {
    std::size_t end = source.find('\n', pos);
    if (end == std::string_view::npos) end = source.size();
    std::string_view line = source.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    pos = end + 1;
    ++line_no;

    LineParser p(line_no, line);
    const auto& t = p.tokens();
    if (t.empty() || t[0].text.front() == '#') {
      if (end == source.size()) break;
      continue;
    }
    const std::string key(t[0].text);

    if (!current) {
      if (key != "family") p.fail(0, "'family'");
      p.expect_count(2, "gimel");
      const int g = p.integer(1, "gimel in 1..95", 1);
      if (g > kFamilyCount) p.fail(1, "gimel in 1..95");
      if (!gimels.insert(g).second) p.fail(1, "unused gimel", "family " + std::to_string(g) + " repeated", Errc::DuplicateGimel);
      current.emplace();
      current->record.gimel = g;
      current->start_line = line_no;
      raw_weights.reset();
      degree = 0;
    } else if (key == "end") {
      p.expect_count(1, "end of line");
      for (const char* required : {"weights", "degree", "minus_k_cube", "pencils"}) {
        if (!current->seen.count(required)) p.fail(0, std::string("'") + required + "' before 'end'");
      }
      try {
        current->record.weights = Weights(*raw_weights);
      } catch (const Error& e) {
        throw ParseError(Errc::SyntaxError, weights_line, 9, "well-formed weights", e.what());
      }
      if (degree != current->record.weights.degree()) {
        throw ParseError(Errc::SyntaxError, degree_line, 8, "degree equal to the sum of the weights");
      }
      records.push_back(std::move(current->record));
      current.reset();
    } else if (key == "point") {
      parse_point(p, current->record);
    } else {
      if (!current->seen.insert(key).second) p.fail(0, "a field not yet given", "duplicate '" + key + "'");
      auto& rec = current->record;
      if (key == "weights") {
        p.expect_count(5, "four weights");
        raw_weights = std::array<int, 4>{p.integer(1, "positive weight", 1), p.integer(2, "positive weight", 1),
                                         p.integer(3, "positive weight", 1), p.integer(4, "positive weight", 1)};
        weights_line = line_no;
      } else if (key == "degree") {
        p.expect_count(2, "degree");
        degree = p.integer(1, "positive degree", 1);
        degree_line = line_no;
      } else if (key == "minus_k_cube") {
        p.expect_count(2, "rational -K^3");
        rec.minus_k_cube = p.rational(1, "rational -K^3");
      } else if (key == "inv") {
        rec.inv = p.rest(1, "inv text");
      } else if (key == "ell") {
        p.expect_count(2, "ell value");
        rec.ell = std::string(t[1].text);
      } else if (key == "pencils") {
        p.expect_count(2, "pencil count");
        rec.pencils = t[1].text == "inf" ? PencilCount::infinite()
                                         : PencilCount::finite(p.integer(1, "positive count or 'inf'", 1));
      } else {
        p.fail(0, "'weights', 'degree', 'minus_k_cube', 'inv', 'ell', 'pencils', 'point' or 'end'");
      }
    }
    if (end == source.size()) break;
  }
  if (current) {
    throw ParseError(Errc::SyntaxError, line_no, 1, "'end'",
                     "family " + std::to_string(current->record.gimel) + " opened at line " +
                         std::to_string(current->start_line) + " is not closed");
  }
  std::string missing;
  for (int g = 1; g <= kFamilyCount; ++g) {
    if (!gimels.count(g)) missing += (missing.empty() ? "" : ",") + std::to_string(g);
  }
  if (!missing.empty()) throw Error(Errc::MissingGimel, "missing families: " + missing);
  std::sort(records.begin(), records.end(),
            [](const FamilyRecord& a, const FamilyRecord& b) { return a.gimel < b.gimel; });
  return records;
}

std::string serialize_table(const std::vector<FamilyRecord>& records) {
  std::ostringstream out;
  out << "# Weighted Fano threefold hypersurface families X_d in P(1,a1,a2,a3,a4), d = a1+a2+a3+a4.\n"
      << "# Grammar: see docs/dataset-format.md\n";
  for (const auto& r : records) {
    const auto& a = r.weights.quadruple();
    out << "\nfamily " << r.gimel << "\n"
        << "weights " << a[0] << ' ' << a[1] << ' ' << a[2] << ' ' << a[3] << "\n"
        << "degree " << r.weights.degree() << "\n"
        << "minus_k_cube " << to_string(r.minus_k_cube) << "\n";
    if (!r.inv.empty()) out << "inv " << r.inv << "\n";
    if (!r.ell.empty()) out << "ell " << r.ell << "\n";
    out << "pencils " << r.pencils.to_string() << "\n";
    for (const auto& row : r.basket) {
      out << "point " << row.locus.label() << ' ' << row.count << ' ' << row.type_text << ' ';
      if (const auto* bc = std::get_if<BcAnnotation>(&row.annotation)) {
        out << "bc " << bc->b << ' ' << bc->c;
      } else if (const auto* u = std::get_if<UntwistingAnnotation>(&row.annotation)) {
        out << (u->kind == UntwistingAnnotation::Kind::Quadratic ? "qi " : "ei ") << u->text;
      } else {
        out << '-';
      }
      out << "\n";
    }
    out << "end\n";
  }
  return out.str();
}

std::vector<FamilyRecord> load_table() {
  const char* path = std::getenv("WFANO_DATA");
  if (path == nullptr || *path == '\0') return parse_table(embedded_table());
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::InvalidArgument, std::string("cannot read WFANO_DATA file ") + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_table(buf.str());
}

}  // namespace wfano

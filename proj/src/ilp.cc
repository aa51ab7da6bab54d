// Copyright 2026 The pathilp Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pathilp/ilp.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "pathilp/errors.h"

namespace pathilp {
namespace {

constexpr std::string_view kMagic = "PATHILP";
constexpr std::string_view kVersion = "v1";

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

bool is_decimal(std::string_view token) {
  if (!token.empty() && token.front() == '-') token.remove_prefix(1);
  return !token.empty() && std::all_of(token.begin(), token.end(), [](char c) {
    return c >= '0' && c <= '9';
  });
}

bool has_whitespace(std::string_view s) {
  return std::any_of(s.begin(), s.end(),
                     [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next line split into tokens; nullopt at end of input.
  std::optional<std::vector<std::string_view>> next() {
    if (!std::getline(in_, buffer_)) return std::nullopt;
    ++line_no_;
    return split_ws(buffer_);
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError("line " + std::to_string(line_no_) + ": " + message);
  }

  std::vector<std::string_view> expect(std::string_view what) {
    auto tokens = next();
    if (!tokens) throw ParseError("unexpected end of input, expected " + std::string(what));
    return *std::move(tokens);
  }

  Integer integer(std::string_view token) const {
    if (!is_decimal(token)) fail("not an integer: '" + std::string(token) + "'");
    return Integer(std::string(token), 10);
  }

  long long small(std::string_view token) const {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      fail("not a machine integer: '" + std::string(token) + "'");
    }
    return value;
  }

  long long count(std::string_view token) const {
    long long value = small(token);
    if (value < 0) fail("negative count");
    return value;
  }

 private:
  std::istream& in_;
  std::string buffer_;
  int line_no_ = 0;
};

}  // namespace

std::optional<std::string> IpInstance::meta_value(std::string_view key) const {
  for (const auto& [k, v] : meta) {
    if (k == key) return v;
  }
  return std::nullopt;
}

int InstanceBuilder::add_column(std::string name, std::optional<Integer> lower,
                                std::optional<Integer> upper) {
  instance_.cols.push_back(ColumnDef{std::move(name), std::move(lower), std::move(upper)});
  return instance_.num_cols() - 1;
}

void InstanceBuilder::add_row(std::vector<RowEntry> entries, Integer rhs) {
  std::erase_if(entries, [](const RowEntry& e) { return e.coef == 0; });
  std::sort(entries.begin(), entries.end(),
            [](const RowEntry& a, const RowEntry& b) { return a.col < b.col; });
  instance_.rows.push_back(RowDef{std::move(entries), std::move(rhs)});
}

void InstanceBuilder::add_meta(std::string key, std::string value) {
  instance_.meta.emplace_back(std::move(key), std::move(value));
}

IpInstance InstanceBuilder::build() && {
  check_well_formed(instance_);
  return std::move(instance_);
}

void check_well_formed(const IpInstance& instance, std::int64_t coefficient_cap) {
  std::unordered_set<std::string> names;
  for (int c = 0; c < instance.num_cols(); ++c) {
    const ColumnDef& col = instance.cols[c];
    if (col.name.empty() || has_whitespace(col.name)) {
      throw InvalidInputError("column " + std::to_string(c) + " has an empty or blank name");
    }
    if (!names.insert(col.name).second) {
      throw InvalidInputError("duplicate column name '" + col.name + "'");
    }
    if (col.lower && col.upper && *col.lower > *col.upper) {
      throw InvalidInputError("column '" + col.name + "' has lower > upper");
    }
  }
  for (int r = 0; r < instance.num_rows(); ++r) {
    int previous = -1;
    for (const RowEntry& e : instance.rows[r].entries) {
      const std::string where = "row " + std::to_string(r) + ": ";
      if (e.col < 0 || e.col >= instance.num_cols()) {
        throw InvalidInputError(where + "column index " + std::to_string(e.col) +
                                " out of range");
      }
      if (e.col <= previous) {
        throw InvalidInputError(where + "entries not strictly sorted by column");
      }
      if (e.coef == 0) throw InvalidInputError(where + "zero coefficient stored");
      if (e.coef > coefficient_cap || e.coef < -coefficient_cap) {
        throw InvalidInputError(where + "coefficient exceeds cap");
      }
      previous = e.col;
    }
  }
  for (const auto& [key, value] : instance.meta) {
    if (key.empty() || value.empty() || has_whitespace(key) || has_whitespace(value)) {
      throw InvalidInputError("meta keys and values must be non-empty single tokens");
    }
  }
}

PathReport validate_pathlike(const IpInstance& instance) {
  PathReport report;
  report.num_rows = instance.num_rows();
  report.num_cols = instance.num_cols();
  std::vector<int> first(instance.num_cols(), -1);
  std::vector<int> last(instance.num_cols(), -1);
  std::vector<int> hits(instance.num_cols(), 0);
  for (int r = 0; r < instance.num_rows(); ++r) {
    for (const RowEntry& e : instance.rows[r].entries) {
      report.max_abs_coeff = std::max(report.max_abs_coeff, e.coef < 0 ? -e.coef : e.coef);
      if (first[e.col] < 0) first[e.col] = r;
      last[e.col] = r;
      ++hits[e.col];
    }
  }
  for (int c = 0; c < instance.num_cols(); ++c) {
    bool ok = hits[c] <= 1 || (hits[c] == 2 && last[c] == first[c] + 1);
    if (!ok) {
      report.is_path_like = false;
      report.offending_column = c;
      break;
    }
  }
  return report;
}

bool satisfies(const IpInstance& instance, std::span<const Integer> x) {
  if (static_cast<int>(x.size()) != instance.num_cols()) return false;
  for (int c = 0; c < instance.num_cols(); ++c) {
    const ColumnDef& col = instance.cols[c];
    if (col.lower && x[c] < *col.lower) return false;
    if (col.upper && x[c] > *col.upper) return false;
  }
  Integer lhs;
  for (const RowDef& row : instance.rows) {
    lhs = 0;
    for (const RowEntry& e : row.entries) lhs += Integer(static_cast<long>(e.coef)) * x[e.col];
    if (lhs != row.rhs) return false;
  }
  return true;
}

std::string format_bound(const std::optional<Integer>& bound, bool is_upper) {
  if (!bound) return is_upper ? "+inf" : "-inf";
  return bound->get_str();
}

void serialize(const IpInstance& instance, std::ostream& out) {
  out << kMagic << ' ' << kVersion << '\n';
  out << "vars " << instance.num_cols() << '\n';
  for (int c = 0; c < instance.num_cols(); ++c) {
    const ColumnDef& col = instance.cols[c];
    out << "var " << c << ' ' << col.name << ' ' << format_bound(col.lower, false) << ' '
        << format_bound(col.upper, true) << '\n';
  }
  out << "rows " << instance.num_rows() << '\n';
  for (int r = 0; r < instance.num_rows(); ++r) {
    const RowDef& row = instance.rows[r];
    out << "row " << r << ' ' << row.rhs.get_str() << ' ' << row.entries.size();
    for (const RowEntry& e : row.entries) out << ' ' << e.col << ' ' << e.coef;
    out << '\n';
  }
  for (const auto& [key, value] : instance.meta) out << "meta " << key << ' ' << value << '\n';
}

std::string serialize(const IpInstance& instance) {
  std::ostringstream out;
  serialize(instance, out);
  return out.str();
}

IpInstance deserialize(std::istream& in) {
  LineReader reader(in);
  IpInstance instance;

  auto header = reader.expect("header");
  if (header.size() != 2 || header[0] != kMagic) reader.fail("missing 'PATHILP v1' header");
  if (header[1] != kVersion) {
    reader.fail("unknown version '" + std::string(header[1]) + "'");
  }

  auto vars = reader.expect("'vars <N>'");
  if (vars.size() != 2 || vars[0] != "vars") reader.fail("expected 'vars <N>'");
  const long long num_cols = reader.count(vars[1]);
  for (long long c = 0; c < num_cols; ++c) {
    auto t = reader.expect("'var' record");
    if (t.size() != 5 || t[0] != "var") reader.fail("expected 'var <index> <name> <lower> <upper>'");
    if (reader.small(t[1]) != c) reader.fail("var records must be numbered consecutively");
    ColumnDef col;
    col.name = std::string(t[2]);
    if (t[3] != "-inf") col.lower = reader.integer(t[3]);
    if (t[4] != "+inf") col.upper = reader.integer(t[4]);
    instance.cols.push_back(std::move(col));
  }

  auto rows = reader.expect("'rows <M>'");
  if (rows.size() != 2 || rows[0] != "rows") reader.fail("expected 'rows <M>'");
  const long long num_rows = reader.count(rows[1]);
  for (long long r = 0; r < num_rows; ++r) {
    auto t = reader.expect("'row' record");
    if (t.size() < 4 || t[0] != "row") reader.fail("expected 'row <index> <rhs> <k> ...'");
    if (reader.small(t[1]) != r) reader.fail("row records must be numbered consecutively");
    RowDef row;
    row.rhs = reader.integer(t[2]);
    const long long k = reader.count(t[3]);
    if (static_cast<long long>(t.size()) != 4 + 2 * k) {
      reader.fail("row entry count does not match token count");
    }
    for (long long e = 0; e < k; ++e) {
      long long col = reader.small(t[4 + 2 * e]);
      long long coef = reader.small(t[5 + 2 * e]);
      if (col < 0 || col >= num_cols) reader.fail("column index out of range");
      if (coef == 0) reader.fail("zero coefficient");
      row.entries.push_back(RowEntry{static_cast<int>(col), coef});
    }
    std::sort(row.entries.begin(), row.entries.end(),
              [](const RowEntry& a, const RowEntry& b) { return a.col < b.col; });
    instance.rows.push_back(std::move(row));
  }

  while (auto t = reader.next()) {
    if (t->size() != 3 || (*t)[0] != "meta") reader.fail("trailing garbage");
    instance.meta.emplace_back(std::string((*t)[1]), std::string((*t)[2]));
  }

  try {
    check_well_formed(instance);
  } catch (const InvalidInputError& e) {
    throw ParseError(e.what());
  }
  return instance;
}

IpInstance deserialize(std::string_view text) {
  std::istringstream in{std::string(text)};
  return deserialize(in);
}

}  // namespace pathilp

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

#ifndef PATHILP_ILP_H_
#define PATHILP_ILP_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace pathilp {

using Integer = mpz_class;

// Coefficients of A are machine integers; every construction in this library
// stays within |a| <= 8, the cap only guards hand-written input.
inline constexpr std::int64_t kDefaultCoefficientCap = std::int64_t{1} << 31;

struct ColumnDef {
  std::string name;
  std::optional<Integer> lower;  // nullopt is -inf
  std::optional<Integer> upper;  // nullopt is +inf

  bool operator==(const ColumnDef&) const = default;
};

struct RowEntry {
  int col = 0;
  std::int64_t coef = 0;

  bool operator==(const RowEntry&) const = default;
};

// One equality row: sum(coef * x[col]) = rhs. Entries sorted by column and
// never zero.
struct RowDef {
  std::vector<RowEntry> entries;
  Integer rhs;

  bool operator==(const RowDef&) const = default;
};

// A x = b, l <= x <= u. Row order is semantic (path-likeness is checked
// against it).
struct IpInstance {
  std::vector<ColumnDef> cols;
  std::vector<RowDef> rows;
  std::vector<std::pair<std::string, std::string>> meta;

  int num_cols() const { return static_cast<int>(cols.size()); }
  int num_rows() const { return static_cast<int>(rows.size()); }
  std::optional<std::string> meta_value(std::string_view key) const;

  bool operator==(const IpInstance&) const = default;
};

// Accumulates columns and rows, normalizing row entries (sorted, zero
// coefficients dropped). build() checks well-formedness.
class InstanceBuilder {
 public:
  int add_column(std::string name, std::optional<Integer> lower,
                 std::optional<Integer> upper);
  void add_row(std::vector<RowEntry> entries, Integer rhs);
  void add_meta(std::string key, std::string value);

  int num_cols() const { return instance_.num_cols(); }
  int num_rows() const { return instance_.num_rows(); }

  IpInstance build() &&;

 private:
  IpInstance instance_;
};

// Throws InvalidInputError on: column index out of range, duplicate column
// within a row, zero or over-cap coefficient, unsorted entries, lower > upper,
// duplicate or whitespace-bearing names.
void check_well_formed(const IpInstance& instance,
                       std::int64_t coefficient_cap = kDefaultCoefficientCap);

struct PathReport {
  bool is_path_like = true;
  std::optional<int> offending_column;
  std::int64_t max_abs_coeff = 0;
  int num_rows = 0;
  int num_cols = 0;
};

// A column passes when its nonzeros sit in one row or in two rows with
// consecutive indices.
PathReport validate_pathlike(const IpInstance& instance);

// Exact check of A x = b and l <= x <= u.
bool satisfies(const IpInstance& instance, std::span<const Integer> x);

// Canonical PATHILP v1 text.
void serialize(const IpInstance& instance, std::ostream& out);
std::string serialize(const IpInstance& instance);

// Throws ParseError on any deviation from the canonical format.
IpInstance deserialize(std::istream& in);
IpInstance deserialize(std::string_view text);

std::string format_bound(const std::optional<Integer>& bound, bool is_upper);

}  // namespace pathilp

#endif  // PATHILP_ILP_H_

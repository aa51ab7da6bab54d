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

#include "pathilp/reduction.h"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

#include "pathilp/errors.h"
#include "pathilp/identities.h"

namespace pathilp {

namespace colname {
namespace {
std::string pair_name(const char* base, int i, int j) {
  return std::string(base) + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}
}  // namespace

std::string x(int i, int j) { return pair_name("x", i, j); }
std::string y(int i, int j) { return pair_name("y", i, j); }
std::string f(int i, int j) { return pair_name("f", i, j); }
std::string alpha0() { return "alpha0"; }
std::string alpha(int i, int j) { return pair_name("alpha", i, j); }
std::string alphap(int i, int j) { return pair_name("alphap", i, j); }
std::string beta(int i) { return "beta(" + std::to_string(i) + ")"; }
std::string z(int i, int j) { return pair_name("z", i, j); }
std::string gamma(int i, int j) { return pair_name("gamma", i, j); }
}  // namespace colname

int ReductionMap::column(std::string_view name) const {
  auto it = col_index.find(name);
  if (it == col_index.end()) {
    throw InvalidInputError("reduction has no column '" + std::string(name) + "'");
  }
  return it->second;
}

bool ReductionMap::has_column(std::string_view name) const {
  return col_index.find(name) != col_index.end();
}

namespace {

constexpr std::string_view kColPrefix = "col.";

enum class Occurrence { kAbsent, kPositive, kNegative };

Occurrence occurrence(const Clause& clause, int var) {
  for (Literal l : clause.literals) {
    if (l == var) return Occurrence::kPositive;
    if (l == -var) return Occurrence::kNegative;
  }
  return Occurrence::kAbsent;
}

void check_reducible(const CnfFormula& formula) {
  if (formula.num_vars < 1) throw InvalidInputError("reduce: formula has no variables");
  for (const Clause& clause : formula.clauses) {
    std::set<int> vars;
    for (Literal l : clause.literals) {
      if (l == 0 || std::abs(l) > formula.num_vars) {
        throw InvalidInputError("reduce: literal out of range");
      }
      if (!vars.insert(std::abs(l)).second) {
        throw InvalidInputError("reduce: clause repeats a variable; normalize first");
      }
    }
    if (vars.size() > static_cast<std::size_t>(kMaxClauseWidth)) {
      throw InvalidInputError("reduce: clause has more than 3 distinct variables");
    }
  }
}

// Owns the builder and the name map so every column is registered exactly
// once, in first-use order.
class Emitter {
 public:
  int column(const std::string& name, Integer lower, Integer upper) {
    int index = builder_.add_column(name, std::move(lower), std::move(upper));
    map_.col_index.emplace(name, index);
    return index;
  }

  void row(std::vector<RowEntry> entries, long rhs) {
    builder_.add_row(std::move(entries), Integer(rhs));
  }

  InstanceBuilder& builder() { return builder_; }
  ReductionMap& map() { return map_; }

 private:
  InstanceBuilder builder_;
  ReductionMap map_;
};

void write_meta(InstanceBuilder& builder, const ReductionMap& map) {
  builder.add_meta("n", std::to_string(map.n));
  builder.add_meta("m", std::to_string(map.m));
  builder.add_meta("final_x", std::to_string(map.final_x));
  builder.add_meta("trivial", map.trivial ? "1" : "0");
  builder.add_meta("final_restore", map.final_restore ? "1" : "0");
  std::vector<std::pair<int, std::string>> by_index;
  for (const auto& [name, index] : map.col_index) by_index.emplace_back(index, name);
  std::sort(by_index.begin(), by_index.end());
  for (const auto& [index, name] : by_index) {
    builder.add_meta(std::string(kColPrefix) + name, std::to_string(index));
  }
}

Reduction trivial_reduction(const CnfFormula& formula, const ReductionOptions& options) {
  InstanceBuilder builder;
  builder.add_column("v", Integer(0), Integer(0));
  builder.add_row({}, Integer(0));
  ReductionMap map;
  map.n = formula.num_vars;
  map.m = static_cast<int>(formula.clauses.size());
  map.trivial = true;
  map.final_restore = options.final_restore;
  write_meta(builder, map);
  return Reduction{std::move(builder).build(), std::move(map)};
}

}  // namespace

Reduction reduce(const CnfFormula& formula, const ReductionOptions& options) {
  check_reducible(formula);
  if (all_zero_satisfies(formula)) return trivial_reduction(formula, options);

  using namespace colname;
  const int n = formula.num_vars;
  const int m = static_cast<int>(formula.clauses.size());
  const Integer chain_upper = pow5(n) * pow2(n);
  const Integer zero(0);
  const Integer one(1);

  Emitter e;
  e.map().n = n;
  e.map().m = m;
  e.map().final_restore = options.final_restore;

  // x(0,0) ranges over every nonzero code.
  int x_prev = e.column(x(0, 0), zero, chain_upper);
  int a0 = e.column(alpha0(), one, pow2(n) - 1);
  e.row({{x_prev, 1}, {a0, -1}}, 0);

  for (int i = 1; i <= m; ++i) {
    const Clause& clause = formula.clauses[i - 1];
    const Integer f_upper(all_literals_positive(clause) ? 3 : 2);

    // Preparation: x(i-1, n) = 5^n x(i-1, 0).
    std::vector<int> xs{x_prev};
    for (int j = 0; j < n; ++j) {
      int next = e.column(x(i - 1, j + 1), zero, chain_upper);
      e.row({{xs.back(), 5}, {next, -1}}, 0);
      xs.push_back(next);
    }
    int y_col = e.column(y(i, 0), zero, chain_upper);
    e.row({{xs.back(), 1}, {y_col, -1}}, 0);

    // Clause check: one halving per variable, f counts true literals.
    int f_col = -1;
    for (int j = 0; j < n; ++j) {
      if (j == 0) f_col = e.column(f(i, 0), zero, zero);
      int f_next = e.column(f(i, j + 1), zero, f_upper);
      int y_next = e.column(y(i, j + 1), zero, chain_upper);
      int a = e.column(alpha(i, j), zero, one);
      std::vector<RowEntry> entries{{f_col, 1}, {f_next, -1}, {y_col, 4}, {y_next, -8}};
      switch (occurrence(clause, j + 1)) {
        case Occurrence::kAbsent:
          entries.push_back({a, -4});
          break;
        case Occurrence::kPositive:
          entries.push_back({a, -3});
          break;
        case Occurrence::kNegative: {
          int ap = e.column(alphap(i, j), zero, one);
          entries.push_back({a, -5});
          entries.push_back({ap, 1});
          break;
        }
      }
      e.row(std::move(entries), 0);
      f_col = f_next;
      y_col = y_next;
    }

    // Deletion: feasible iff f(i,n) > 0, then z(i,0) = y(i,n).
    int z_col = e.column(z(i, 0), zero, chain_upper);
    int b = e.column(beta(i), zero, Integer(2));
    e.row({{f_col, 1}, {y_col, 4}, {z_col, -4}, {b, -1}}, 1);

    if (i == m && !options.final_restore) break;

    // Restore: x(i,0) = floor(z(i,0) 2^n / 5^n) + 1.
    for (int j = 0; j < n; ++j) {
      int next = e.column(z(i, j + 1), zero, chain_upper);
      e.row({{z_col, 2}, {next, -1}}, 0);
      z_col = next;
    }
    for (int j = 0; j < n; ++j) {
      int next = e.column(z(i, n + j + 1), zero, chain_upper);
      int g = e.column(gamma(i, j), zero, Integer(4));
      e.row({{z_col, 1}, {next, -5}, {g, -1}}, 0);
      z_col = next;
    }
    x_prev = e.column(x(i, 0), zero, chain_upper);
    e.row({{z_col, 1}, {x_prev, -1}}, -1);
  }

  if (options.final_restore) e.map().final_x = e.map().column(x(m, 0));
  write_meta(e.builder(), e.map());
  ReductionMap map = std::move(e.map());
  return Reduction{std::move(e.builder()).build(), std::move(map)};
}

ReductionMap map_from_meta(const IpInstance& instance) {
  auto required_int = [&](std::string_view key) {
    auto value = instance.meta_value(key);
    if (!value) {
      throw InvalidInputError("instance lacks reduction metadata '" + std::string(key) + "'");
    }
    try {
      std::size_t used = 0;
      int parsed = std::stoi(*value, &used);
      if (used != value->size()) throw std::invalid_argument(*value);
      return parsed;
    } catch (const std::logic_error&) {
      throw InvalidInputError("reduction metadata '" + std::string(key) + "' is not an integer");
    }
  };
  ReductionMap map;
  map.n = required_int("n");
  map.m = required_int("m");
  map.final_x = required_int("final_x");
  map.trivial = required_int("trivial") != 0;
  map.final_restore = !instance.meta_value("final_restore") || required_int("final_restore") != 0;
  for (const auto& [key, value] : instance.meta) {
    if (key.starts_with(kColPrefix)) {
      int index = required_int(key);
      if (index < 0 || index >= instance.num_cols()) {
        throw InvalidInputError("reduction metadata references a missing column");
      }
      map.col_index.emplace(key.substr(kColPrefix.size()), index);
    }
  }
  if (map.final_x >= instance.num_cols()) {
    throw InvalidInputError("final_x references a missing column");
  }
  return map;
}

Assignment extract_assignment(const Integer& value_of_final_x, const ReductionMap& map) {
  if (map.trivial) {
    throw InvalidInputError("trivial reduction carries no assignment code");
  }
  Integer mask = scaled_residue(value_of_final_x, map.n);
  return Assignment{static_cast<std::uint64_t>(mask.get_ui())};
}

SizeReport size_accounting(const CnfFormula& formula, const ReductionOptions& options) {
  if (all_zero_satisfies(formula)) return SizeReport{1, 1, 0};
  const std::int64_t n = formula.num_vars;
  const std::int64_t m = static_cast<std::int64_t>(formula.clauses.size());
  SizeReport report;
  report.num_rows = 1 + m * (4 * n + 3);
  report.num_cols = 2;
  for (const Clause& clause : formula.clauses) {
    report.num_cols += 7 * n + 5 + count_negative_literals(clause);
  }
  report.max_abs_coeff = 8;
  if (!options.final_restore) {
    report.num_rows -= 2 * n + 1;
    report.num_cols -= 3 * n + 1;
  }
  return report;
}

}  // namespace pathilp

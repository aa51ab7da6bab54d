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

#ifndef PATHILP_FORMULA_H_
#define PATHILP_FORMULA_H_

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace pathilp {

// Signed variable index: +j is v_j, -j is its negation. Never zero.
using Literal = int;

struct Clause {
  std::vector<Literal> literals;

  bool operator==(const Clause&) const = default;
};

struct CnfFormula {
  int num_vars = 0;
  std::vector<Clause> clauses;

  bool operator==(const CnfFormula&) const = default;
};

// Truth assignment packed into a mask. Bit (j-1) holds the value of v_j, so
// v_1 is the least significant bit.
struct Assignment {
  std::uint64_t mask = 0;

  bool value_of(int var) const { return ((mask >> (var - 1)) & 1u) != 0; }

  auto operator<=>(const Assignment&) const = default;
};

inline constexpr int kMaxClauseWidth = 3;
inline constexpr int kDefaultOracleVarLimit = 24;

// Parses DIMACS CNF. Duplicate literals and tautologies are kept as written;
// call normalize() to clean them up. Throws ParseError.
CnfFormula parse_dimacs(std::istream& in);
CnfFormula parse_dimacs(std::string_view text);

std::string to_dimacs(const CnfFormula& formula);

// Drops duplicate literals inside a clause (first occurrence wins) and
// removes clauses containing a complementary pair.
CnfFormula normalize(const CnfFormula& formula);

bool is_true(Literal literal, std::uint64_t bits);
int count_true_literals(const Clause& clause, std::uint64_t bits);
bool satisfies(const CnfFormula& formula, Assignment assignment);

// Every satisfying assignment, ascending by mask. Tests all 2^n masks.
// Throws ResourceLimitError when num_vars > max_vars.
std::vector<Assignment> enumerate_satisfying(
    const CnfFormula& formula, int max_vars = kDefaultOracleVarLimit);

bool all_zero_satisfies(const CnfFormula& formula);

int count_negative_literals(const Clause& clause);
bool all_literals_positive(const Clause& clause);

}  // namespace pathilp

#endif  // PATHILP_FORMULA_H_

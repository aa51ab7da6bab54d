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

#include "pathilp/formula.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <istream>
#include <set>
#include <sstream>

#include "pathilp/errors.h"

namespace pathilp {
namespace {

bool parse_int(std::string_view token, long long* out) {
  if (!token.empty() && token.front() == '+') return false;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, *out);
  return ec == std::errc() && ptr == end;
}

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

int distinct_variables(const std::vector<Literal>& literals) {
  std::set<int> vars;
  for (Literal l : literals) vars.insert(std::abs(l));
  return static_cast<int>(vars.size());
}

}  // namespace

CnfFormula parse_dimacs(std::istream& in) {
  CnfFormula formula;
  bool have_header = false;
  long long declared_clauses = 0;
  std::vector<Literal> pending;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (tokens.front().front() == 'c') continue;
    auto where = [&] { return "line " + std::to_string(line_no) + ": "; };
    if (tokens.front() == "p") {
      if (have_header) throw ParseError(where() + "duplicate problem line");
      long long n = 0;
      if (tokens.size() != 4 || tokens[1] != "cnf" || !parse_int(tokens[2], &n) ||
          !parse_int(tokens[3], &declared_clauses)) {
        throw ParseError(where() + "malformed problem line, expected 'p cnf <n> <m>'");
      }
      if (n < 1 || n > 62) throw ParseError(where() + "variable count must lie in [1, 62]");
      if (declared_clauses < 0) throw ParseError(where() + "negative clause count");
      formula.num_vars = static_cast<int>(n);
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(where() + "clause before problem line");
    for (std::string_view token : tokens) {
      long long value = 0;
      if (!parse_int(token, &value)) {
        throw ParseError(where() + "not an integer literal: '" + std::string(token) + "'");
      }
      if (value == 0) {
        if (distinct_variables(pending) > kMaxClauseWidth) {
          throw ParseError(where() + "clause has more than 3 distinct variables");
        }
        formula.clauses.push_back(Clause{std::move(pending)});
        pending.clear();
        continue;
      }
      if (std::llabs(value) > formula.num_vars) {
        throw ParseError(where() + "literal " + std::to_string(value) +
                         " exceeds declared variable count " +
                         std::to_string(formula.num_vars));
      }
      pending.push_back(static_cast<Literal>(value));
    }
  }
  if (!have_header) throw ParseError("missing problem line 'p cnf <n> <m>'");
  if (!pending.empty()) throw ParseError("last clause is not terminated by 0");
  if (static_cast<long long>(formula.clauses.size()) != declared_clauses) {
    throw ParseError("clause count mismatch: header declares " +
                     std::to_string(declared_clauses) + ", found " +
                     std::to_string(formula.clauses.size()));
  }
  return formula;
}

CnfFormula parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dimacs(in);
}

std::string to_dimacs(const CnfFormula& formula) {
  std::ostringstream out;
  out << "p cnf " << formula.num_vars << ' ' << formula.clauses.size() << '\n';
  for (const Clause& clause : formula.clauses) {
    for (Literal l : clause.literals) out << l << ' ';
    out << "0\n";
  }
  return out.str();
}

CnfFormula normalize(const CnfFormula& formula) {
  CnfFormula result{formula.num_vars, {}};
  for (const Clause& clause : formula.clauses) {
    Clause cleaned;
    bool tautology = false;
    for (Literal l : clause.literals) {
      if (std::find(cleaned.literals.begin(), cleaned.literals.end(), -l) !=
          cleaned.literals.end()) {
        tautology = true;
        break;
      }
      if (std::find(cleaned.literals.begin(), cleaned.literals.end(), l) ==
          cleaned.literals.end()) {
        cleaned.literals.push_back(l);
      }
    }
    if (!tautology) result.clauses.push_back(std::move(cleaned));
  }
  return result;
}

bool is_true(Literal literal, std::uint64_t bits) {
  bool bit = ((bits >> (std::abs(literal) - 1)) & 1u) != 0;
  return literal > 0 ? bit : !bit;
}

int count_true_literals(const Clause& clause, std::uint64_t bits) {
  return static_cast<int>(std::count_if(clause.literals.begin(), clause.literals.end(),
                                        [bits](Literal l) { return is_true(l, bits); }));
}

bool satisfies(const CnfFormula& formula, Assignment assignment) {
  return std::all_of(formula.clauses.begin(), formula.clauses.end(), [&](const Clause& c) {
    return count_true_literals(c, assignment.mask) > 0;
  });
}

std::vector<Assignment> enumerate_satisfying(const CnfFormula& formula, int max_vars) {
  if (formula.num_vars > max_vars) {
    throw ResourceLimitError("brute-force oracle limited to " + std::to_string(max_vars) +
                             " variables, formula has " + std::to_string(formula.num_vars));
  }
  std::vector<Assignment> result;
  const std::uint64_t count = std::uint64_t{1} << formula.num_vars;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    if (satisfies(formula, Assignment{mask})) result.push_back(Assignment{mask});
  }
  return result;
}

bool all_zero_satisfies(const CnfFormula& formula) {
  return satisfies(formula, Assignment{0});
}

int count_negative_literals(const Clause& clause) {
  return static_cast<int>(std::count_if(clause.literals.begin(), clause.literals.end(),
                                        [](Literal l) { return l < 0; }));
}

bool all_literals_positive(const Clause& clause) {
  return count_negative_literals(clause) == 0;
}

}  // namespace pathilp

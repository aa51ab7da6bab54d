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

#include <random>

#include "gtest/gtest.h"
#include "pathilp/errors.h"
#include "support/oracles.h"

namespace pathilp {
namespace {

std::vector<std::uint64_t> masks(const std::vector<Assignment>& assignments) {
  std::vector<std::uint64_t> out;
  for (Assignment a : assignments) out.push_back(a.mask);
  return out;
}

CnfFormula formula(int n, std::vector<std::vector<Literal>> clauses) {
  CnfFormula f{n, {}};
  for (auto& c : clauses) f.clauses.push_back(Clause{std::move(c)});
  return f;
}

TEST(ParseDimacs, SingleClause) {
  EXPECT_EQ(parse_dimacs("p cnf 2 1\n1 2 0\n"), formula(2, {{1, 2}}));
}

TEST(ParseDimacs, MixedSigns) {
  EXPECT_EQ(parse_dimacs("p cnf 3 2\n1 -2 3 0\n-1 0\n"), formula(3, {{1, -2, 3}, {-1}}));
}

TEST(ParseDimacs, CommentsAndFreeFormLiterals) {
  EXPECT_EQ(parse_dimacs("c hello\nc p cnf 9 9\np cnf 3 2\n 1\n -2 0 3\n0\n"),
            formula(3, {{1, -2}, {3}}));
}

TEST(ParseDimacs, EmptyClauseIsKept) {
  EXPECT_EQ(parse_dimacs("p cnf 1 1\n0\n"), formula(1, {{}}));
}

TEST(ParseDimacs, RejectsLiteralAboveN) {
  EXPECT_THROW(parse_dimacs("p cnf 2 1\n1 2 3 0\n"), ParseError);
}

TEST(ParseDimacs, RejectsBadInput) {
  EXPECT_THROW(parse_dimacs("1 2 0\n"), ParseError);                       // no header
  EXPECT_THROW(parse_dimacs("p cnf 2\n1 2 0\n"), ParseError);              // short header
  EXPECT_THROW(parse_dimacs("p dnf 2 1\n1 2 0\n"), ParseError);            // wrong format
  EXPECT_THROW(parse_dimacs("p cnf 4 1\n1 2 3 4 0\n"), ParseError);        // four variables
  EXPECT_THROW(parse_dimacs("p cnf 2 2\n1 2 0\n"), ParseError);            // count mismatch
  EXPECT_THROW(parse_dimacs("p cnf 2 1\n1 2\n"), ParseError);              // unterminated
  EXPECT_THROW(parse_dimacs("p cnf 2 1\n1 x 0\n"), ParseError);            // junk token
  EXPECT_THROW(parse_dimacs("p cnf 2 1\np cnf 2 1\n1 0\n"), ParseError);   // two headers
  EXPECT_THROW(parse_dimacs("p cnf 0 0\n"), ParseError);                   // no variables
}

TEST(ParseDimacs, DuplicatesCountAsOneVariable) {
  EXPECT_EQ(parse_dimacs("p cnf 3 1\n1 1 -1 2 0\n"), formula(3, {{1, 1, -1, 2}}));
}

TEST(ToDimacs, ParsesBack) {
  CnfFormula f = formula(3, {{1, -2, 3}, {-1}, {}});
  EXPECT_EQ(parse_dimacs(to_dimacs(f)), f);
}

TEST(Normalize, Examples) {
  EXPECT_EQ(normalize(formula(2, {{1, 1, 2}})), formula(2, {{1, 2}}));
  EXPECT_EQ(normalize(formula(2, {{1, -1, 2}})), formula(2, {}));
  EXPECT_EQ(normalize(formula(1, {{1}})), formula(1, {{1}}));
}

TEST(Normalize, KeepsClauseOrder) {
  EXPECT_EQ(normalize(formula(3, {{3}, {2, -2}, {-1, 3, -1}})), formula(3, {{3}, {-1, 3}}));
}

TEST(Normalize, IsIdempotent) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> lit(1, 4);
  std::bernoulli_distribution neg(0.5);
  for (int trial = 0; trial < 300; ++trial) {
    CnfFormula f{4, {}};
    for (int c = 0; c < 4; ++c) {
      Clause clause;
      for (int k = 0; k < 4; ++k) clause.literals.push_back(neg(rng) ? -lit(rng) : lit(rng));
      f.clauses.push_back(clause);
    }
    CnfFormula once = normalize(f);
    EXPECT_EQ(normalize(once), once);
  }
}

TEST(EnumerateSatisfying, Examples) {
  EXPECT_EQ(masks(enumerate_satisfying(formula(2, {{1, 2}}))),
            (std::vector<std::uint64_t>{1, 2, 3}));
  EXPECT_TRUE(enumerate_satisfying(formula(1, {{1}, {-1}})).empty());
  EXPECT_EQ(masks(enumerate_satisfying(formula(1, {}))), (std::vector<std::uint64_t>{0, 1}));
}

TEST(EnumerateSatisfying, EmptyClauseForcesEmptySet) {
  EXPECT_TRUE(enumerate_satisfying(formula(2, {{1}, {}})).empty());
}

TEST(EnumerateSatisfying, BitConventionPutsV1InLowBit) {
  // v1 true, v2 false, v3 true.
  EXPECT_EQ(masks(enumerate_satisfying(formula(3, {{1}, {-2}, {3}}))),
            (std::vector<std::uint64_t>{0b101}));
}

TEST(EnumerateSatisfying, RejectsAboveLimit) {
  EXPECT_THROW(enumerate_satisfying(formula(5, {}), 4), ResourceLimitError);
}

TEST(EnumerateSatisfying, AgreesWithClauseFilteringOracle) {
  for (int n = 1; n <= 4; ++n) {
    for (const CnfFormula& f : testing::exhaustive_formulas(n, n <= 2 ? 3 : 2)) {
      ASSERT_EQ(masks(enumerate_satisfying(f)), testing::filter_satisfying(f)) << to_dimacs(f);
    }
  }
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    CnfFormula f = testing::random_formula(rng, 4, static_cast<int>(rng() % 7));
    ASSERT_EQ(masks(enumerate_satisfying(f)), testing::filter_satisfying(f)) << to_dimacs(f);
  }
}

TEST(AllZeroSatisfies, Examples) {
  EXPECT_TRUE(all_zero_satisfies(formula(1, {{-1}})));
  EXPECT_FALSE(all_zero_satisfies(formula(2, {{1, 2}})));
  EXPECT_TRUE(all_zero_satisfies(formula(1, {})));
}

TEST(AllZeroSatisfies, MatchesMembershipOfMaskZero) {
  for (const CnfFormula& f : testing::exhaustive_formulas(2, 3)) {
    auto sat = enumerate_satisfying(f);
    bool zero_in = !sat.empty() && sat.front().mask == 0;
    ASSERT_EQ(all_zero_satisfies(f), zero_in) << to_dimacs(f);
  }
}

}  // namespace
}  // namespace pathilp

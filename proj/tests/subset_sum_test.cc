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

#include "pathilp/subset_sum.h"

#include <random>

#include "gtest/gtest.h"
#include "pathilp/errors.h"
#include "support/oracles.h"

namespace pathilp {
namespace {

IpInstance make(std::vector<long> items, long target) {
  std::vector<Integer> a(items.begin(), items.end());
  return gen_subsetsum(a, Integer(target));
}

void expect_encoding_shape(const IpInstance& inst) {
  std::vector<int> nonzeros(inst.num_cols(), 0);
  for (const RowDef& row : inst.rows) {
    for (const RowEntry& e : row.entries) {
      ++nonzeros[e.col];
      EXPECT_TRUE(e.coef == -1 || e.coef == 1 || e.coef == 2) << e.coef;
    }
  }
  for (int count : nonzeros) EXPECT_LE(count, 3);
}

TEST(GenSubsetSum, Feasible) {
  IpInstance inst = make({1, 2}, 3);
  expect_encoding_shape(inst);
  auto witness = testing::box_search(inst);
  ASSERT_TRUE(witness.has_value());
  EXPECT_TRUE(satisfies(inst, *witness));
}

TEST(GenSubsetSum, Infeasible) {
  IpInstance inst = make({2, 4}, 3);
  expect_encoding_shape(inst);
  EXPECT_FALSE(testing::box_search(inst).has_value());
}

TEST(GenSubsetSum, ChainForcesPowersOfTwo) {
  IpInstance inst = make({5}, 5);
  ASSERT_EQ(inst.num_cols(), 3);
  ASSERT_EQ(inst.num_rows(), 3);
  EXPECT_EQ(inst.rows[0].entries, (std::vector<RowEntry>{{0, 1}, {2, 1}}));
  EXPECT_EQ(inst.rows[1].entries, (std::vector<RowEntry>{{0, -1}, {1, 2}}));
  EXPECT_EQ(inst.rows[2].entries, (std::vector<RowEntry>{{1, -1}, {2, 2}}));
  EXPECT_EQ(inst.cols[2].upper, Integer(1));
  auto witness = testing::box_search(inst);
  ASSERT_TRUE(witness.has_value());
  EXPECT_EQ(*witness, (std::vector<Integer>{4, 2, 1}));
}

TEST(GenSubsetSum, ItemOneHasASingleColumn) {
  IpInstance inst = make({1}, 1);
  EXPECT_EQ(inst.num_cols(), 1);
  EXPECT_EQ(inst.num_rows(), 1);
}

TEST(GenSubsetSum, Errors) {
  EXPECT_THROW(make({}, 0), InvalidInputError);
  EXPECT_THROW(make({3, 0}, 3), InvalidInputError);
}

TEST(GenSubsetSum, SelectionEnumerationMatchesSubsetSums) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::int64_t> items(1 + rng() % 5);
    for (auto& a : items) a = 1 + static_cast<std::int64_t>(rng() % 40);
    std::vector<Integer> big(items.begin(), items.end());
    IpInstance inst = gen_subsetsum(big, Integer(0));
    expect_encoding_shape(inst);
    std::vector<Integer> reached = testing::selection_row0_values(inst);
    std::vector<std::int64_t> sums = testing::subset_sums(items);
    ASSERT_EQ(reached, std::vector<Integer>(sums.begin(), sums.end()));
  }
}

TEST(GenSubsetSum, BoxSearchAgreesOnSmallItems) {
  for (long a = 1; a <= 6; ++a) {
    for (long b = 1; b <= 6; ++b) {
      for (long t = 0; t <= a + b + 1; ++t) {
        bool expected = t == 0 || t == a || t == b || t == a + b;
        EXPECT_EQ(testing::box_search(make({a, b}, t)).has_value(), expected)
            << a << "," << b << " t=" << t;
      }
    }
  }
}

}  // namespace
}  // namespace pathilp

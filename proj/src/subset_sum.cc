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

#include <string>

#include "pathilp/errors.h"
#include "pathilp/identities.h"

namespace pathilp {

IpInstance gen_subsetsum(std::span<const Integer> items, const Integer& target) {
  if (items.empty()) throw InvalidInputError("gen_subsetsum: empty item list");

  InstanceBuilder builder;
  std::vector<RowEntry> sum_row;
  std::vector<std::vector<RowEntry>> encoding_rows;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const Integer& a = items[i];
    if (a < 1) throw InvalidInputError("gen_subsetsum: items must be positive");
    const int k = static_cast<int>(mpz_sizeinbase(a.get_mpz_t(), 2));
    const std::string prefix = "c(" + std::to_string(i + 1) + ",";

    std::vector<int> chain;
    for (int j = 1; j <= k; ++j) {
      const bool selection_bit = j == k;
      int col = builder.add_column(prefix + std::to_string(j) + ")", Integer(0),
                                   selection_bit ? Integer(1) : pow2(k));
      chain.push_back(col);
      // c(i,j) carries weight 2^(k-j); it enters the sum iff that bit of a is set.
      if (mpz_tstbit(a.get_mpz_t(), static_cast<mp_bitcnt_t>(k - j)) != 0) {
        sum_row.push_back({col, 1});
      }
    }
    for (int j = 0; j + 1 < k; ++j) {
      encoding_rows.push_back({{chain[j], -1}, {chain[j + 1], 2}});
    }
    builder.add_meta("item." + std::to_string(i + 1), a.get_str());
  }

  builder.add_row(std::move(sum_row), target);
  for (auto& row : encoding_rows) builder.add_row(std::move(row), Integer(0));
  builder.add_meta("items", std::to_string(items.size()));
  return std::move(builder).build();
}

}  // namespace pathilp

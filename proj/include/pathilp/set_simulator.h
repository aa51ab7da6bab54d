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

#ifndef PATHILP_SET_SIMULATOR_H_
#define PATHILP_SET_SIMULATOR_H_

#include <cstdint>
#include <vector>

#include "pathilp/formula.h"
#include "pathilp/ilp.h"

namespace pathilp {

// Evolving candidate sets of the 3-SAT compiler, computed directly with big
// integers. All sets are sorted ascending.
//
//   codes[0]     = {1, ..., 2^n - 1}
//   scaled[i-1]  = {5^n a : a in codes[i-1]}
//   checked[i-1] = {floor(b / 2^n) : b in scaled[i-1], C_i true under b mod 2^n}
//   codes[i]     = {floor(d 2^n / 5^n) + 1 : d in checked[i-1]}
//
// scaled and checked hold one entry per clause; entry i-1 belongs to C_i.
struct SetTrace {
  std::vector<std::vector<Integer>> codes;
  std::vector<std::vector<Integer>> scaled;
  std::vector<std::vector<Integer>> checked;
};

inline constexpr std::uint64_t kDefaultSimulatorBudget = std::uint64_t{1} << 26;

// Throws InvalidInputError when the all-zero assignment satisfies the formula
// and ResourceLimitError when 2^n * m exceeds the budget.
SetTrace simulate_sets(const CnfFormula& formula,
                       std::uint64_t budget = kDefaultSimulatorBudget);

}  // namespace pathilp

#endif  // PATHILP_SET_SIMULATOR_H_

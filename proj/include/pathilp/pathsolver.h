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

#ifndef PATHILP_PATHSOLVER_H_
#define PATHILP_PATHSOLVER_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "pathilp/ilp.h"

namespace pathilp {

// Row t of a path-like instance viewed as one DP stage. Column lists are
// ascending. carried_out of layer t equals carried_in of layer t+1.
struct Layer {
  int row = 0;
  std::vector<int> carried_in;
  std::vector<int> introduced;
  std::vector<int> carried_out;
  std::vector<int> local;
  // Introduced column with the largest |coefficient| (lowest index on ties);
  // -1 when the row introduces nothing.
  int pivot = -1;
};

struct LayeredPath {
  std::vector<Layer> layers;
  std::vector<int> unused_columns;  // columns in no row
};

// Throws InvalidInputError when the instance is not path-like, a column that
// appears in some row has an infinite bound, or an unused column has an
// infinite lower bound.
LayeredPath build_layers(const IpInstance& instance);

enum class SolveStatus { kFeasible, kInfeasible, kResourceExceeded };

std::string_view to_string(SolveStatus status);

struct SolverLimits {
  std::size_t max_states_per_layer = 1'000'000;
  std::uint64_t max_transitions_total = 100'000'000;
};

struct SolveResult {
  SolveStatus status = SolveStatus::kInfeasible;
  std::optional<std::vector<Integer>> witness;
  std::optional<Integer> objective_value;
};

// Forward reachable-set DP over the rows. The state after row t is the tuple
// of values on carried_out(t); each state keeps one back-pointer, the first
// found when predecessors are scanned in ascending order and free columns are
// enumerated in ascending lexicographic order. The witness follows those
// back-pointers, so repeated runs return identical witnesses.
SolveResult solve_feasibility(const IpInstance& instance, const SolverLimits& limits = {});

// Same DP, keeping the cheapest predecessor per state. objective has one
// entry per column.
SolveResult minimize(const IpInstance& instance, std::span<const Integer> objective,
                     const SolverLimits& limits = {});

struct ColumnValues {
  SolveStatus status = SolveStatus::kInfeasible;
  std::vector<Integer> values;  // ascending
};

// Values col takes over all complete solutions. col must be carried into or
// introduced by the last row; throws InvalidInputError otherwise.
ColumnValues final_column_values(const IpInstance& instance, int col,
                                 const SolverLimits& limits = {});

struct ForwardValues {
  SolveStatus status = SolveStatus::kInfeasible;
  std::map<int, std::vector<Integer>> values;  // column -> ascending values
};

// Values each column takes over partial solutions of the rows up to and
// including the row that introduces it. For a column of the last row this is
// the same set final_column_values returns. Columns behind an empty layer get
// empty sets and status kInfeasible.
ForwardValues forward_values(const IpInstance& instance, std::span<const int> cols,
                             const SolverLimits& limits = {});

}  // namespace pathilp

#endif  // PATHILP_PATHSOLVER_H_

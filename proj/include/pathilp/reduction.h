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

#ifndef PATHILP_REDUCTION_H_
#define PATHILP_REDUCTION_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "pathilp/formula.h"
#include "pathilp/ilp.h"

namespace pathilp {

// Structured column names used by the 3-SAT compiler. Block i in 1..m checks
// clause C_i, reading the chain x(i-1, .) and producing x(i, 0).
namespace colname {
std::string x(int i, int j);
std::string y(int i, int j);
std::string f(int i, int j);
std::string alpha0();
std::string alpha(int i, int j);
std::string alphap(int i, int j);
std::string beta(int i);
std::string z(int i, int j);
std::string gamma(int i, int j);
}  // namespace colname

struct ReductionMap {
  int n = 0;
  int m = 0;
  std::map<std::string, int, std::less<>> col_index;
  int final_x = -1;  // column of x(m, 0); -1 when absent
  bool trivial = false;
  bool final_restore = true;

  // Throws InvalidInputError for an unknown name.
  int column(std::string_view name) const;
  bool has_column(std::string_view name) const;
};

struct ReductionOptions {
  // When false the restore rows of the last clause are omitted. The instance
  // keeps its feasibility but x(m, 0) is never produced, so extraction is
  // unavailable.
  bool final_restore = true;
};

struct Reduction {
  IpInstance instance;
  ReductionMap map;
};

// Compiles a normalized 3-SAT formula into a path-like IP with |A| <= 8.
// When the all-zero assignment already satisfies the formula the result is
// the trivial instance [0] v = [0], v in [0, 0].
// Throws InvalidInputError when n = 0 or a clause is wider than 3.
Reduction reduce(const CnfFormula& formula, const ReductionOptions& options = {});

// Rebuilds the map from the `meta` records written by reduce().
ReductionMap map_from_meta(const IpInstance& instance);

// Decodes the value of x(m, 0) into the satisfying assignment it represents.
Assignment extract_assignment(const Integer& value_of_final_x, const ReductionMap& map);

struct SizeReport {
  std::int64_t num_cols = 0;
  std::int64_t num_rows = 0;
  std::int64_t max_abs_coeff = 0;
};

// Closed-form size of reduce(formula) for a non-trivial formula:
//   rows = 1 + m (4n + 3)
//   cols = 2 + sum_i (7n + 5 + neg_i)
// Per clause: x(i-1,1..n), y(i,0..n), f(i,0..n), alpha(i,.), z(i,0..2n),
// gamma(i,.), beta(i), x(i,0), one alphap per negative literal.
// Dropping the last restore block removes 2n + 1 rows and 3n + 1 columns.
// A formula satisfied by the all-zero assignment reports the trivial 1 x 1
// instance.
SizeReport size_accounting(const CnfFormula& formula, const ReductionOptions& options = {});

}  // namespace pathilp

#endif  // PATHILP_REDUCTION_H_

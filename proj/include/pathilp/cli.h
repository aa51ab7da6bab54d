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

#ifndef PATHILP_CLI_H_
#define PATHILP_CLI_H_

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>

#include "pathilp/formula.h"
#include "pathilp/pathsolver.h"

namespace pathilp {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // infeasible, not path-like, unequal
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInput = 3;
inline constexpr int kExitResource = 4;
inline constexpr int kExitInternal = 5;

struct RoundtripReport {
  SolveStatus status = SolveStatus::kFeasible;  // kResourceExceeded aborts the comparison
  bool trivial = false;
  bool equal = false;
  std::size_t sat_count = 0;    // all satisfying assignments, zero included
  std::size_t ip_set_size = 0;  // distinct codes at the final column
};

// Compares the assignments decoded from the reduced IP's final column against
// brute force. A formula satisfied by the all-zero assignment compiles to the
// trivial instance; it counts as equal when brute force agrees that mask 0
// satisfies it.
RoundtripReport roundtrip(const CnfFormula& formula, const SolverLimits& limits = {});

// Runs one command line (args excludes the program name). Results go to out
// as key=value records, diagnostics to err.
int run(std::span<const std::string> args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace pathilp

#endif  // PATHILP_CLI_H_

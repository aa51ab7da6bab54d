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

#include "pathilp/set_simulator.h"

#include <algorithm>
#include <string>

#include "pathilp/errors.h"
#include "pathilp/identities.h"

namespace pathilp {

SetTrace simulate_sets(const CnfFormula& formula, std::uint64_t budget) {
  const int n = formula.num_vars;
  if (n < 1 || n > 62) throw InvalidInputError("simulate_sets: n must lie in [1, 62]");
  if (all_zero_satisfies(formula)) {
    throw InvalidInputError("simulate_sets: the all-zero assignment satisfies the formula");
  }
  const std::uint64_t codes = (std::uint64_t{1} << n) - 1;
  const std::uint64_t m = formula.clauses.size();
  if (m > 0 && codes > budget / m) {
    throw ResourceLimitError("simulate_sets: 2^n * m exceeds budget " + std::to_string(budget));
  }

  const Integer p5 = pow5(n);
  const Integer p2 = pow2(n);
  SetTrace trace;
  std::vector<Integer> current;
  current.reserve(codes);
  for (std::uint64_t a = 1; a <= codes; ++a) current.emplace_back(static_cast<unsigned long>(a));
  trace.codes.push_back(current);

  Integer low;
  Integer high;
  for (const Clause& clause : formula.clauses) {
    std::vector<Integer> scaled;
    scaled.reserve(current.size());
    for (const Integer& a : current) scaled.push_back(p5 * a);

    std::vector<Integer> checked;
    for (const Integer& b : scaled) {
      mpz_fdiv_r_2exp(low.get_mpz_t(), b.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
      if (count_true_literals(clause, low.get_ui()) >= 1) {
        mpz_fdiv_q_2exp(high.get_mpz_t(), b.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
        checked.push_back(high);
      }
    }

    std::vector<Integer> next;
    next.reserve(checked.size());
    for (const Integer& d : checked) {
      Integer product = d * p2;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), product.get_mpz_t(), p5.get_mpz_t());
      next.push_back(q + 1);
    }

    for (auto* set : {&scaled, &checked, &next}) {
      std::sort(set->begin(), set->end());
      set->erase(std::unique(set->begin(), set->end()), set->end());
    }
    trace.scaled.push_back(std::move(scaled));
    trace.checked.push_back(std::move(checked));
    trace.codes.push_back(next);
    current = std::move(next);
  }
  return trace;
}

}  // namespace pathilp

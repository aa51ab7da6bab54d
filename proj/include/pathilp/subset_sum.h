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

#ifndef PATHILP_SUBSET_SUM_H_
#define PATHILP_SUBSET_SUM_H_

#include <span>

#include "pathilp/ilp.h"

namespace pathilp {

// Subset sum as an IP over binary-encoded items. Item i with bit length k
// gets columns c(i,1..k); the encoding rows -c(i,j) + 2 c(i,j+1) = 0 force
// c(i,j) = 2^(k-j) s_i for the selection bit s_i = c(i,k), and row 0 reads
// a_i s_i off the bits of a_i. Every column has at most three nonzeros, all in
// {-1, 1, 2}.
//
// Columns are named c(i,j) with 1-based i. Throws InvalidInputError for an
// empty list or a non-positive item.
IpInstance gen_subsetsum(std::span<const Integer> items, const Integer& target);

}  // namespace pathilp

#endif  // PATHILP_SUBSET_SUM_H_

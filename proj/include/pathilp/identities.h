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

#ifndef PATHILP_IDENTITIES_H_
#define PATHILP_IDENTITIES_H_

#include "pathilp/ilp.h"

namespace pathilp {

Integer pow5(int n);
Integer pow2(int n);

// (5^n * x) mod 2^n. Because 5 and 2 are coprime this permutes [1, 2^n - 1].
// Throws InvalidInputError unless 1 <= x <= 2^n - 1.
Integer scaled_residue(const Integer& x, int n);

// floor(floor(x * 5^n / 2^n) * 2^n / 5^n) + 1, evaluated with exact floor
// division. Equals x on [1, 2^n - 1]; the reduction's restore phase relies on
// this to recover a code after dividing off the n low bits.
Integer restore_identity(const Integer& x, int n);

}  // namespace pathilp

#endif  // PATHILP_IDENTITIES_H_

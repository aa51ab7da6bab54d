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

#include "pathilp/identities.h"

#include <string>

#include "pathilp/errors.h"

namespace pathilp {
namespace {

void check_code_range(const Integer& x, int n, const char* what) {
  if (n < 1) throw InvalidInputError(std::string(what) + ": n must be positive");
  if (x < 1 || x >= pow2(n)) {
    throw InvalidInputError(std::string(what) + ": x = " + x.get_str() +
                            " outside [1, 2^" + std::to_string(n) + " - 1]");
  }
}

}  // namespace

Integer pow5(int n) {
  Integer result;
  mpz_ui_pow_ui(result.get_mpz_t(), 5, static_cast<unsigned long>(n));
  return result;
}

Integer pow2(int n) {
  Integer result;
  mpz_ui_pow_ui(result.get_mpz_t(), 2, static_cast<unsigned long>(n));
  return result;
}

Integer scaled_residue(const Integer& x, int n) {
  check_code_range(x, n, "scaled_residue");
  Integer scaled = x * pow5(n);
  Integer result;
  mpz_fdiv_r_2exp(result.get_mpz_t(), scaled.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
  return result;
}

Integer restore_identity(const Integer& x, int n) {
  check_code_range(x, n, "restore_identity");
  const Integer p5 = pow5(n);
  const Integer p2 = pow2(n);
  Integer quotient;
  Integer scaled = x * p5;
  mpz_fdiv_q(quotient.get_mpz_t(), scaled.get_mpz_t(), p2.get_mpz_t());
  Integer back = quotient * p2;
  Integer restored;
  mpz_fdiv_q(restored.get_mpz_t(), back.get_mpz_t(), p5.get_mpz_t());
  return restored + 1;
}

}  // namespace pathilp

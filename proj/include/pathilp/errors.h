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

#ifndef PATHILP_ERRORS_H_
#define PATHILP_ERRORS_H_

#include <stdexcept>

namespace pathilp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input (DIMACS or PATHILP).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Well-formed data that violates an operation's precondition.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

// A configured budget (oracle size, simulator budget) was exceeded.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace pathilp

#endif  // PATHILP_ERRORS_H_

// Copyright 2026 The graphmub Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace graphmub {

// A requested object could not be built (no suitable diagonal, reducible
// input, search exhausted). Distinct from precondition violations, which
// throw std::invalid_argument.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when the symmetrization of a companion matrix needs a primitive
// polynomial (n mod 4 == 2 and -1 is a non-residue) but got a merely
// irreducible one. Callers may re-seed with a primitive polynomial.
class PrimitiveRequired : public ConstructionError {
 public:
  PrimitiveRequired()
      : ConstructionError("primitive polynomial required") {}
};

// The requested input size is outside what an operation supports.
class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input document or text could not be parsed into a valid object.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace graphmub

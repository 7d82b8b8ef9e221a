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

#include <cstdint>
#include <vector>

#include "graphmub/zp.hpp"

namespace graphmub {

// A published tridiagonal diagonal d together with its characteristic
// polynomial, stored as the low coefficients in descending order
// (c_{n-1}, ..., c_0).
struct TridiagTableRow {
  std::uint64_t p;
  std::vector<Residue> d;
  std::vector<Residue> coeffs_desc;
};

// Reference rows for p in {2, 3, 5, 7}; every listed polynomial is
// primitive.
const std::vector<TridiagTableRow>& tridiag_reference_table();

}  // namespace graphmub

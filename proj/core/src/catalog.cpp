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

#include "graphmub/catalog.hpp"

namespace graphmub {

const std::vector<TridiagTableRow>& tridiag_reference_table() {
  static const std::vector<TridiagTableRow> rows = {
      {2, {1,0}, {1,1}},
      {2, {1,1,0}, {0,1,1}},
      {2, {1,0,0}, {1,0,1}},
      {2, {1,0,1,0}, {0,0,1,1}},
      {2, {1,1,0,1}, {1,0,0,1}},
      {2, {1,1,1,1,0}, {0,0,1,0,1}},
      {2, {0,1,1,0,0}, {0,1,0,0,1}},
      {2, {1,1,0,0,0}, {0,1,1,1,1}},
      {2, {1,0,0,0,0}, {1,0,1,1,1}},
      {2, {0,1,1,0,0,0}, {0,0,0,0,1,1}},
      {2, {1,0,1,1,1,0}, {0,1,1,0,1,1}},
      {2, {0,1,1,0,1,0}, {1,0,0,0,0,1}},
      {2, {1,0,1,0,0,1}, {1,0,0,1,1,1}},
      {2, {1,0,1,1,0,0,1}, {0,0,0,0,0,1,1}},
      {2, {0,1,1,1,0,1,0}, {0,0,0,1,0,0,1}},
      {2, {1,1,1,0,0,0,1}, {0,0,0,1,1,1,1}},
      {2, {1,1,1,0,1,0,0}, {0,0,1,0,0,0,1}},
      {2, {0,1,1,0,0,0,0,0}, {0,0,0,1,1,1,0,1}},
      {2, {1,1,1,1,1,0,1,0}, {0,0,1,0,1,0,1,1}},
      {2, {1,1,1,0,1,1,1,0}, {0,0,1,0,1,1,0,1}},
      {2, {0,1,1,0,1,1,0,0}, {0,1,0,0,1,1,0,1}},
      {3, {2,0}, {1,2}},
      {3, {1,0}, {2,2}},
      {3, {1,1,0}, {1,2,1}},
      {3, {2,1,1}, {2,0,1}},
      {3, {1,0,0}, {2,1,1}},
      {3, {1,1,0,1}, {0,0,1,2}},
      {3, {2,2,0,2}, {0,0,2,2}},
      {3, {1,2,1,1}, {1,0,0,2}},
      {3, {1,2,2,0}, {1,2,2,2}},
      {3, {2,1,2,0,1}, {0,0,0,2,1}},
      {3, {2,2,1,1,0}, {0,0,2,1,1}},
      {3, {0,1,2,0,0}, {0,1,0,1,1}},
      {3, {2,1,1,1,1}, {0,1,2,0,1}},
      {3, {1,0,2,2,1,0}, {0,2,1,1,1,2}},
      {3, {2,0,1,1,2,0}, {0,2,2,1,2,2}},
      {3, {1,0,2,0,2,0}, {1,0,0,0,0,2}},
      {3, {2,2,0,1,0,0}, {1,0,1,0,0,2}},
      {5, {3,1}, {1,2}},
      {5, {4,2}, {4,2}},
      {5, {2,3,0}, {0,4,2}},
      {5, {3,2,0}, {0,4,3}},
      {5, {3,1,0}, {1,1,3}},
      {5, {4,2,3}, {1,4,3}},
      {5, {3,0,1,1}, {0,4,1,2}},
      {5, {1,3,0,1}, {0,4,4,2}},
      {5, {3,1,0,0}, {1,0,2,3}},
      {5, {2,3,2,1}, {2,0,3,3}},
      {5, {2,3,0,0,0}, {0,2,2,1,3}},
      {5, {3,2,0,0,0}, {0,2,3,1,2}},
      {5, {3,2,3,0,2}, {0,3,0,0,2}},
      {5, {3,0,2,3,2}, {0,3,0,0,3}},
      {5, {4,2,2,4,1,2}, {0,0,0,1,1,3}},
      {5, {3,4,1,3,3,1}, {0,0,0,1,4,3}},
      {5, {1,3,2,0,4,0}, {0,0,1,2,0,2}},
      {5, {3,3,3,0,3,3}, {0,0,1,2,4,3}},
      {7, {4,1}, {2,3}},
      {7, {3,2}, {2,5}},
      {7, {6,3}, {5,3}},
      {7, {5,4}, {5,5}},
      {7, {2,4,1}, {0,5,2}},
      {7, {3,3,1}, {0,6,2}},
      {7, {2,3,1}, {1,2,4}},
      {7, {6,3,3}, {2,1,4}},
      {7, {5,4,4,1}, {0,3,3,3}},
      {7, {6,3,3,2}, {0,3,4,3}},
      {7, {6,0,5,3}, {0,4,3,3}},
      {7, {4,2,0,1}, {0,4,4,3}},
      {7, {5,1,0,1,0}, {0,0,0,2,2}},
      {7, {6,3,4,0,1}, {0,0,0,5,2}},
      {7, {6,4,0,1,3}, {0,0,2,2,4}},
      {7, {6,5,4,4,2}, {0,0,3,0,2}},
      {7, {6,6,0,1,0,1}, {0,0,0,3,1,5}},
      {7, {2,4,5,5,5,0}, {0,0,0,3,3,3}},
      {7, {5,3,2,2,2,0}, {0,0,0,3,4,3}},
      {7, {6,0,6,0,1,1}, {0,0,0,3,6,5}},
  };
  return rows;
}

}  // namespace graphmub

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

#include <cstddef>
#include <string>
#include <vector>

#include "graphmub/matrix.hpp"
#include "graphmub/statevector.hpp"

namespace graphmub {

struct Circuit {
  PrimeModulus p;
  std::size_t n;
  std::vector<Gate> gates;

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

// Measurement in the graph basis of a: undo every phase gate of the graph
// state (controlled phases first, row-major over i < j, then self-loops),
// then F^dagger on each qupit. A computational-basis readout of the result
// gives the label m.
Circuit emit_circuit(const MatZp& a);

// Probabilities of every computational outcome after running c on s.
std::vector<double> simulate_measurement(const Circuit& c, const StateVector& s);

// Text form: header "#qupits n prime p", then one gate per line.
std::string to_text(const Circuit& c);
// Throws ParseError on malformed input.
Circuit parse_circuit(const std::string& text);

// Conventional qubit names (H, R_pi/4 powers, CZ, Z); generic names for
// other p.
std::string gate_display_name(const Gate& g, const PrimeModulus& p);

}  // namespace graphmub

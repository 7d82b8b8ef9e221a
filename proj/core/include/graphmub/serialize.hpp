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
#include <optional>
#include <string>
#include <vector>

#include "graphmub/entanglement.hpp"
#include "graphmub/matrix.hpp"
#include "graphmub/mub_set.hpp"
#include "graphmub/symrep.hpp"

namespace graphmub {

std::string poly_to_json(const PolyZp& f);
std::string matrix_to_json(const MatZp& m);
std::string witness_to_json(const SymRepWitness& w);

// Canonical document: fixed key order, one matrix per line, trailing
// newline. Equal sets serialize to identical bytes.
std::string to_json(const MubSet& s);

// Validates shape, modulus, symmetry and entry ranges; throws ParseError.
// The result never carries the field-closure flag.
MubSet parse_mub_set(const std::string& text);

// Per bipartition: ranks, purities and the design identity; plus the label
// census. With an empty list every bipartition is reported.
std::string analysis_report_json(const MubSet& s,
                                 const std::vector<Bipartition>& bipartitions);

// Recomputes every reference table row (optionally for one p).
std::string tables_report_json(std::optional<std::uint64_t> p = std::nullopt);

// Undirected multigraph: vertices 1..n, edge labels carry multiplicities,
// self-loops are loop edges.
std::string to_dot(const MatZp& a, const std::string& name = "G");

}  // namespace graphmub

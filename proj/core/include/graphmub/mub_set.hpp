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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graphmub/matrix.hpp"
#include "graphmub/symrep.hpp"

namespace graphmub {

// The p^n graph-state adjacency matrices of a complete MUB family. The
// computational basis is implicit. For generated sets matrices[i] is
// sum_k a_k Q^k with i = sum_k a_k p^k (a_0 varies fastest).
struct MubSet {
  PrimeModulus p;
  std::size_t n;
  std::string method;
  std::optional<PolyZp> polynomial;
  std::optional<std::vector<Residue>> d;
  std::vector<MatZp> matrices;
  // Set by generate_rep_set; cleared by shift_set and parsing.
  bool field_closure = false;
  // Collective shifts applied since generation, in order.
  std::vector<MatZp> shifts;

  std::size_t dimension() const;  // p^n
  std::size_t basis_count() const { return matrices.size() + 1; }
  bool complete() const { return matrices.size() == dimension(); }
};

MubSet generate_rep_set(const SymRepWitness& w, std::size_t threads = 1);

// [0, Q^0, Q^1, ..., Q^(p^n - 2)]. Throws std::invalid_argument when f is
// not primitive and std::logic_error if the result differs (as a set) from
// generate_rep_set.
MubSet generate_power_set(const SymRepWitness& w);

std::vector<MatZp> fundamental_graphs(const SymRepWitness& w);

struct Lemma1Result {
  bool pass = true;
  std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
  std::size_t determinants = 0;
};

struct Lemma1Options {
  bool force_pairwise = false;
  std::size_t threads = 1;
};

// det(A_r - A_s) != 0 for all r != s. Sets with field_closure only need
// every nonzero element to be invertible; a failure there is reported as
// the pair (r, index of the zero matrix).
Lemma1Result verify_lemma1(const MubSet& s, const Lemma1Options& options = {});

// Adds the symmetric matrix m to every element.
MubSet shift_set(const MubSet& s, const MatZp& m);

enum class Method { kAuto, kTridiag, kCompanion };

std::string to_string(Method m);
Method parse_method(const std::string& text);

struct MubSetOptions {
  Method method = Method::kAuto;
  std::optional<PolyZp> polynomial;
  std::optional<std::vector<Residue>> d;
  bool primitive_required = false;
  std::size_t threads = 1;
};

// Chooses a witness, generates the set and checks the determinant
// condition. Throws ConstructionError when no witness can be built.
SymRepWitness find_witness(const PrimeModulus& p, std::size_t n,
                           const MubSetOptions& options);
MubSet mub_set(const PrimeModulus& p, std::size_t n,
               const MubSetOptions& options = {});

// Linear index of the coefficient vector (a_0 fastest).
std::size_t coefficient_index(const std::vector<Residue>& a,
                              const PrimeModulus& p);
std::vector<Residue> coefficient_vector(std::size_t index, std::size_t n,
                                        const PrimeModulus& p);

}  // namespace graphmub

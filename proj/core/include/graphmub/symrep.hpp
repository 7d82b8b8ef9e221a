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
#include <variant>
#include <vector>

#include "graphmub/matrix.hpp"
#include "graphmub/poly.hpp"

namespace graphmub {

// Symmetric tridiagonal matrix with diagonal d and unit off-diagonals.
struct TridiagSpec {
  PrimeModulus p;
  std::vector<Residue> d;

  MatZp matrix() const;
  friend bool operator==(const TridiagSpec&, const TridiagSpec&) = default;
};

enum class SymRepMethod { kCompanionSymmetrized, kTridiagonal };

std::string to_string(SymRepMethod m);

// Either a scalar multiplier or the companion matrix itself.
using GChoice = std::variant<Residue, MatZp>;

std::string describe(const GChoice& g);

// A symmetric matrix Q with char_poly(Q) == f. For the companion route the
// intermediate matrices are kept so they can be printed and re-checked.
struct SymRepWitness {
  PolyZp f;
  MatZp q;
  SymRepMethod method;
  std::optional<std::vector<Residue>> d;  // tridiagonal route
  std::optional<MatZp> c;                 // companion route from here on
  std::optional<MatZp> b0;                // B (p == 2) or B_0 (p odd)
  std::optional<GChoice> g;               // p odd only
  std::optional<MatZp> p_mat;

  std::size_t n() const { return q.rows(); }
  const PrimeModulus& modulus() const { return q.modulus(); }
};

// Throws std::invalid_argument unless Q is symmetric with
// char_poly(Q) == f and, for the companion route, P C P^-1 == Q.
void validate_witness(const SymRepWitness& w);

SymRepWitness witness_from_tridiag(const TridiagSpec& spec);

MatZp build_B_p2(const PolyZp& f);
MatZp build_B0_podd(const PolyZp& f);

// Throws PrimitiveRequired when n mod 4 == 2, -1 is a non-residue and f is
// not primitive.
GChoice choose_g(const PolyZp& f, const MatZp& c);

// Returns P with P B P^T == 1. Throws std::invalid_argument for inputs that
// are not symmetric, singular, or (p == 2) have an all-zero diagonal, and
// (p odd) have a non-residue determinant.
MatZp congruence_reduce_p2(const MatZp& b);
MatZp congruence_reduce_podd(const MatZp& b);

SymRepWitness symmetrize_companion(const PolyZp& f);

PolyZp tridiag_char_poly(const TridiagSpec& spec);

enum class TridiagRequirement { kIrreducible, kPrimitive };

// Enumerates d in index order sum d_i p^(i-1) (d_1 varies fastest). With a
// target, returns the first d whose polynomial equals it; otherwise the
// first d whose polynomial meets the requirement. A target that fails the
// requirement itself gives nullopt at once. Otherwise nullopt means the whole
// space was searched without success. Throws std::invalid_argument when
// p^n > 10^7.
std::optional<TridiagSpec> tridiag_search(
    const PrimeModulus& p, std::size_t n,
    const std::optional<PolyZp>& target = std::nullopt,
    TridiagRequirement requirement = TridiagRequirement::kIrreducible,
    std::size_t threads = 1);

// All d whose tridiagonal matrix has characteristic polynomial f, found by
// matching the power-sum traces tr(Q^k) given by Newton's identities.
// Results are in the same index order as tridiag_search. Throws Unsupported
// for degree > 4.
std::vector<TridiagSpec> newton_identities_solve(const PolyZp& f);

// Power sums t_1..t_n of the roots of a monic f via Newton's identities.
std::vector<Residue> newton_power_sums(const PolyZp& f);

}  // namespace graphmub

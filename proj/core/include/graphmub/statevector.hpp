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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "graphmub/matrix.hpp"
#include "graphmub/mub_set.hpp"

namespace graphmub {

using Complex = std::complex<double>;

// Roots of unity omega_p^k and omega_4^k, tabulated once so that phases are
// looked up rather than accumulated.
class PhaseTable {
 public:
  explicit PhaseTable(const PrimeModulus& p);

  Complex omega_p(std::uint64_t k) const { return roots_p_[k % roots_p_.size()]; }
  Complex omega_4(std::uint64_t k) const { return roots_4_[k % 4]; }
  // The one-qupit phase U_{i,i} raised to `power`, on basis state k.
  Complex local_phase(std::uint64_t k, std::uint64_t power) const;

 private:
  std::vector<Complex> roots_p_;
  std::vector<Complex> roots_4_;
};

// Amplitudes over |k_1 ... k_n>, qupit 1 the most significant digit.
struct StateVector {
  PrimeModulus p;
  std::size_t n;
  std::vector<Complex> amp;

  std::size_t dimension() const { return amp.size(); }
  double norm() const;
};

enum class GateKind { kFourier, kFourierDag, kLocalPhase, kControlledPhase, kPauliZ };

// Qupit indices are 1-based; j is only used by kControlledPhase. power is
// taken mod 4 for kLocalPhase with p == 2 and mod p otherwise.
struct Gate {
  GateKind kind;
  std::size_t i;
  std::size_t j = 0;
  std::uint64_t power = 0;

  friend bool operator==(const Gate&, const Gate&) = default;
};

StateVector plus_state(const PrimeModulus& p, std::size_t n);
StateVector computational_state(const PrimeModulus& p, std::size_t n,
                                const std::vector<Residue>& k);

// Throws std::out_of_range for bad qupit indices.
void apply_gate(StateVector& s, const Gate& g, const PhaseTable& phases);
void apply_gate(StateVector& s, const Gate& g);

StateVector graph_state(const MatZp& a);
StateVector graph_state(const MatZp& a, const PhaseTable& phases);
// Z^{m_1} x ... x Z^{m_n} |G>.
StateVector basis_element(const MatZp& a, const std::vector<Residue>& m);

// |<u|v>|^2. Throws std::invalid_argument on dimension mismatch.
double overlap(const StateVector& u, const StateVector& v);

// Label vector m <-> index with m_1 the most significant digit.
std::vector<Residue> label_vector(std::size_t index, std::size_t n,
                                  const PrimeModulus& p);
std::size_t label_index(const std::vector<Residue>& m, const PrimeModulus& p);

struct OverlapViolation {
  // Basis 0 is the computational basis, basis r + 1 is matrices[r].
  std::size_t basis_a;
  std::size_t element_a;
  std::size_t basis_b;
  std::size_t element_b;
  double value;
};

struct MuReport {
  bool pass = true;
  double worst_deviation = 0.0;
  std::size_t overlaps_checked = 0;
  std::size_t violations = 0;
  std::optional<OverlapViolation> first_violation;
};

struct MuOptions {
  double tol = 1e-10;
  // Unset: every cross-basis pair. Set: this many random pairs.
  std::optional<std::size_t> samples;
  std::uint64_t seed = 20260101;
  std::size_t threads = 1;
};

MuReport verify_mu_numeric(const MubSet& s, const MuOptions& options = {});

// Builds every generator S_i densely and checks S_i |G(m)> = lambda_i |G(m)>
// with lambda_i = (-1)^{m_i} for p == 2 and omega_p^{-m_i} otherwise.
bool stabilizer_check(const MatZp& a, const std::vector<Residue>& m,
                      double tol = 1e-10);

// tr(rho_X^2) for the reduced state on the 1-based qupits in x.
double partial_trace_purity(const StateVector& s, const std::vector<std::size_t>& x);

}  // namespace graphmub

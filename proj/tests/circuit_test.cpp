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

#include <gtest/gtest.h>

#include "graphmub/circuit.hpp"
#include "graphmub/errors.hpp"
#include "graphmub/mub_set.hpp"
#include "support.hpp"

namespace graphmub {
namespace {

using testing::Gen;

TEST(EmitCircuit, QubitFundamentalGraph) {
  PrimeModulus const p(2);
  auto const c = emit_circuit(MatZp(p, {{1, 1, 0}, {1, 0, 1}, {0, 1, 0}}));
  std::vector<Gate> const want{
      {GateKind::kControlledPhase, 1, 2, 1}, {GateKind::kControlledPhase, 2, 3, 1},
      {GateKind::kLocalPhase, 1, 0, 3},      {GateKind::kFourierDag, 1, 0, 0},
      {GateKind::kFourierDag, 2, 0, 0},      {GateKind::kFourierDag, 3, 0, 0}};
  EXPECT_EQ(c.gates, want);
  EXPECT_EQ(gate_display_name(c.gates[0], p), "CZ(1,2)");
  EXPECT_EQ(gate_display_name(c.gates[2], p), "R_pi/4^3(1)");
  EXPECT_EQ(gate_display_name(c.gates[3], p), "H(1)");
}

TEST(EmitCircuit, EmptyAndSingleQupit) {
  auto const zero = emit_circuit(MatZp::zero(PrimeModulus(5), 2));
  EXPECT_EQ(zero.gates, (std::vector<Gate>{{GateKind::kFourierDag, 1, 0, 0}, {GateKind::kFourierDag, 2, 0, 0}}));
  PrimeModulus const p(3);
  for (std::int64_t r = 1; r < 3; ++r) {
    auto const c = emit_circuit(MatZp(p, {{r}}));
    EXPECT_EQ(c.gates, (std::vector<Gate>{{GateKind::kLocalPhase, 1, 0, static_cast<std::uint64_t>(3 - r)},
                                          {GateKind::kFourierDag, 1, 0, 0}}));
  }
  EXPECT_THROW(emit_circuit(MatZp(p, {{0, 1}, {0, 0}})), std::invalid_argument);
}

TEST(SimulateMeasurement, BasisElementsRoundTrip) {
  for (auto [pv, n] : std::vector<std::pair<std::uint64_t, std::size_t>>{{2, 3}, {3, 2}, {3, 3}, {5, 2}}) {
    PrimeModulus const p(pv);
    auto const s = mub_set(p, n);
    for (auto const& a : s.matrices) {
      auto const c = emit_circuit(a);
      for (std::size_t idx = 0; idx < s.dimension(); ++idx) {
        auto const probs = simulate_measurement(c, basis_element(a, label_vector(idx, n, p)));
        ASSERT_NEAR(probs[idx], 1.0, 1e-10) << a << " label " << idx;
      }
    }
  }
}

TEST(SimulateMeasurement, PlusStateAndComputationalInputs) {
  PrimeModulus const p(3);
  auto const probs = simulate_measurement(emit_circuit(MatZp::zero(p, 2)), plus_state(p, 2));
  EXPECT_NEAR(probs[0], 1.0, 1e-12);

  Gen gen(1515);
  for (int t = 0; t < 20; ++t) {
    auto const a = gen.symmetric(p, 2);
    auto const k = label_vector(static_cast<std::size_t>(gen.uniform(0, 8)), 2, p);
    for (double v : simulate_measurement(emit_circuit(a), computational_state(p, 2, k))) EXPECT_NEAR(v, 1.0 / 9.0, 1e-12);
  }
  EXPECT_THROW(simulate_measurement(emit_circuit(MatZp::zero(p, 2)), plus_state(p, 3)), std::invalid_argument);
}

TEST(CircuitText, FormatAndRoundTrip) {
  PrimeModulus const p(3);
  auto const c = emit_circuit(MatZp(p, {{1, 2}, {2, 0}}));
  EXPECT_EQ(to_text(c), "#qupits 2 prime 3\nCP 1 2 1\nP 1 2\nFDAG 1\nFDAG 2\n");
  EXPECT_EQ(parse_circuit(to_text(c)), c);

  Gen gen(1616);
  for (int t = 0; t < 50; ++t) {
    PrimeModulus const q(std::vector<std::uint64_t>{2, 3, 5, 7}[static_cast<std::size_t>(gen.uniform(0, 3))]);
    auto const circuit = emit_circuit(gen.symmetric(q, static_cast<std::size_t>(gen.uniform(1, 4))));
    auto const text = to_text(circuit);
    auto const back = parse_circuit(text);
    EXPECT_EQ(back, circuit);
    EXPECT_EQ(to_text(back), text);
  }

  auto const all = parse_circuit("#qupits 2 prime 5\nF 1\nZ 2 4\nCP 2 1 3\n");
  EXPECT_EQ(all.gates, (std::vector<Gate>{{GateKind::kFourier, 1, 0, 0},
                                          {GateKind::kPauliZ, 2, 0, 4},
                                          {GateKind::kControlledPhase, 2, 1, 3}}));
}

TEST(CircuitText, RejectsMalformedInput) {
  EXPECT_THROW(parse_circuit(""), ParseError);
  EXPECT_THROW(parse_circuit("#qupits 2 prime 4\n"), ParseError);
  EXPECT_THROW(parse_circuit("#qupits 2 prime 3\nF 3\n"), ParseError);
  EXPECT_THROW(parse_circuit("#qupits 2 prime 3\nCP 1 1 1\n"), ParseError);
  EXPECT_THROW(parse_circuit("#qupits 2 prime 3\nP 1 5\n"), ParseError);
  EXPECT_THROW(parse_circuit("#qupits 2 prime 3\nSWAP 1 2\n"), ParseError);
}

}  // namespace
}  // namespace graphmub

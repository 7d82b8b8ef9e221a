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

#include "graphmub/circuit.hpp"

#include <sstream>
#include <stdexcept>

#include "graphmub/errors.hpp"

namespace graphmub {

Circuit emit_circuit(const MatZp& a) {
  if (!a.is_symmetric()) throw std::invalid_argument("emit_circuit: matrix not symmetric");
  auto const& p = a.modulus();
  auto const n = a.rows();
  Circuit c{p, n, {}};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (a(i, j) != 0) {
        c.gates.push_back({GateKind::kControlledPhase, i + 1, j + 1, p.neg(a(i, j))});
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto const r = a(i, i);
    if (r == 0) continue;
    // The qubit self-loop gate has period 4.
    auto const inverse = p.is_two() ? (4 - r) % 4 : p.neg(r);
    c.gates.push_back({GateKind::kLocalPhase, i + 1, 0, inverse});
  }
  for (std::size_t i = 1; i <= n; ++i) c.gates.push_back({GateKind::kFourierDag, i, 0, 0});
  return c;
}

std::vector<double> simulate_measurement(const Circuit& c, const StateVector& s) {
  if (c.p != s.p || c.n != s.n) {
    throw std::invalid_argument("simulate_measurement: circuit and state differ in shape");
  }
  PhaseTable const phases(s.p);
  auto state = s;
  for (auto const& g : c.gates) apply_gate(state, g, phases);
  std::vector<double> probs(state.amp.size());
  for (std::size_t k = 0; k < probs.size(); ++k) probs[k] = std::norm(state.amp[k]);
  return probs;
}

std::string to_text(const Circuit& c) {
  std::ostringstream os;
  os << "#qupits " << c.n << " prime " << c.p.value() << '\n';
  for (auto const& g : c.gates) {
    switch (g.kind) {
      case GateKind::kFourier:
        os << "F " << g.i;
        break;
      case GateKind::kFourierDag:
        os << "FDAG " << g.i;
        break;
      case GateKind::kLocalPhase:
        os << "P " << g.i << ' ' << g.power;
        break;
      case GateKind::kControlledPhase:
        os << "CP " << g.i << ' ' << g.j << ' ' << g.power;
        break;
      case GateKind::kPauliZ:
        os << "Z " << g.i << ' ' << g.power;
        break;
    }
    os << '\n';
  }
  return os.str();
}

Circuit parse_circuit(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& why) {
    throw ParseError("circuit line " + std::to_string(line_no) + ": " + why);
  };
  if (!std::getline(in, line)) throw ParseError("circuit: empty input");
  ++line_no;
  std::istringstream header(line);
  std::string tag;
  std::string prime_tag;
  long long n = 0;
  long long pv = 0;
  if (!(header >> tag >> n >> prime_tag >> pv) || tag != "#qupits" || prime_tag != "prime" ||
      n < 1 || pv < 2) {
    fail("expected '#qupits <n> prime <p>'");
  }
  std::string extra;
  if (header >> extra) fail("trailing text in header");
  if (!is_prime(static_cast<std::uint64_t>(pv))) fail("modulus is not prime");
  Circuit c{PrimeModulus(static_cast<std::uint64_t>(pv)), static_cast<std::size_t>(n), {}};
  auto const power_limit = c.p.is_two() ? 4ULL : c.p.value();

  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string op;
    ls >> op;
    auto read_index = [&]() {
      long long v = 0;
      if (!(ls >> v) || v < 1 || v > n) fail("bad qupit index");
      return static_cast<std::size_t>(v);
    };
    auto read_power = [&](unsigned long long limit) {
      long long v = 0;
      if (!(ls >> v) || v < 0 || static_cast<unsigned long long>(v) >= limit) fail("bad power");
      return static_cast<std::uint64_t>(v);
    };
    Gate g{GateKind::kFourier, 0, 0, 0};
    if (op == "F") {
      g = {GateKind::kFourier, read_index(), 0, 0};
    } else if (op == "FDAG") {
      g = {GateKind::kFourierDag, read_index(), 0, 0};
    } else if (op == "P") {
      auto const i = read_index();
      g = {GateKind::kLocalPhase, i, 0, read_power(power_limit)};
    } else if (op == "CP") {
      auto const i = read_index();
      auto const j = read_index();
      if (i == j) fail("controlled phase needs distinct qupits");
      g = {GateKind::kControlledPhase, i, j, read_power(c.p.value())};
    } else if (op == "Z") {
      auto const i = read_index();
      g = {GateKind::kPauliZ, i, 0, read_power(c.p.value())};
    } else {
      fail("unknown gate '" + op + "'");
    }
    if (ls >> extra) fail("trailing text");
    c.gates.push_back(g);
  }
  return c;
}

std::string gate_display_name(const Gate& g, const PrimeModulus& p) {
  auto const i = std::to_string(g.i);
  if (p.is_two()) {
    switch (g.kind) {
      case GateKind::kFourier:
      case GateKind::kFourierDag:
        return "H(" + i + ")";
      case GateKind::kLocalPhase:
        return "R_pi/4^" + std::to_string(g.power) + "(" + i + ")";
      case GateKind::kControlledPhase:
        return "CZ(" + i + "," + std::to_string(g.j) + ")";
      case GateKind::kPauliZ:
        return "Z(" + i + ")";
    }
  }
  switch (g.kind) {
    case GateKind::kFourier:
      return "F(" + i + ")";
    case GateKind::kFourierDag:
      return "F^dag(" + i + ")";
    case GateKind::kLocalPhase:
      return "U_" + i + i + "^" + std::to_string(g.power);
    case GateKind::kControlledPhase:
      return "U_" + i + std::to_string(g.j) + "^" + std::to_string(g.power);
    case GateKind::kPauliZ:
      break;
  }
  return "Z(" + i + ")^" + std::to_string(g.power);
}

}  // namespace graphmub

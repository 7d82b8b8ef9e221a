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

#include "graphmub/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <random>
#include <stdexcept>
#include <tuple>

#include "graphmub/parallel.hpp"

namespace graphmub {
namespace {

std::size_t stride_of(std::size_t n, std::size_t qupit, std::uint64_t p) {
  std::size_t stride = 1;
  for (std::size_t q = qupit; q < n; ++q) stride *= p;
  return stride;
}

std::size_t digit(std::size_t index, std::size_t stride, std::uint64_t p) {
  return (index / stride) % p;
}

void check_qupit(const StateVector& s, std::size_t i) {
  if (i < 1 || i > s.n) throw std::out_of_range("qupit index out of range");
}

void apply_fourier(StateVector& s, std::size_t qupit, bool dagger,
                   const PhaseTable& phases) {
  auto const p = s.p.value();
  auto const stride = stride_of(s.n, qupit, p);
  auto const scale = 1.0 / std::sqrt(static_cast<double>(p));
  std::vector<Complex> in(p);
  for (std::size_t base = 0; base < s.amp.size(); ++base) {
    if (digit(base, stride, p) != 0) continue;
    for (std::size_t j = 0; j < p; ++j) in[j] = s.amp[base + j * stride];
    for (std::size_t i = 0; i < p; ++i) {
      Complex acc = 0.0;
      for (std::size_t j = 0; j < p; ++j) {
        auto const e = (i * j) % p;
        acc += phases.omega_p(dagger ? (p - e) % p : e) * in[j];
      }
      s.amp[base + i * stride] = acc * scale;
    }
  }
}

}  // namespace

PhaseTable::PhaseTable(const PrimeModulus& p) {
  auto const pv = p.value();
  roots_p_.reserve(pv);
  for (std::uint64_t k = 0; k < pv; ++k) {
    roots_p_.push_back(std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) /
                                           static_cast<double>(pv)));
  }
  roots_4_ = {Complex(1, 0), Complex(0, 1), Complex(-1, 0), Complex(0, -1)};
}

Complex PhaseTable::local_phase(std::uint64_t k, std::uint64_t power) const {
  auto const pv = roots_p_.size();
  if (pv == 2) return omega_4((k % 2) * (power % 4));
  auto const tri = k == 0 ? 0 : (k * (k - 1) / 2) % pv;
  return omega_p(tri * (power % pv));
}

double StateVector::norm() const {
  double acc = 0.0;
  for (auto const& a : amp) acc += std::norm(a);
  return std::sqrt(acc);
}

StateVector plus_state(const PrimeModulus& p, std::size_t n) {
  auto const d = checked_power(p.value(), static_cast<unsigned>(n), std::uint64_t{1} << 28);
  return StateVector{p, n, std::vector<Complex>(d, 1.0 / std::sqrt(static_cast<double>(d)))};
}

StateVector computational_state(const PrimeModulus& p, std::size_t n,
                                const std::vector<Residue>& k) {
  if (k.size() != n) throw std::invalid_argument("computational_state: need n digits");
  auto const d = checked_power(p.value(), static_cast<unsigned>(n), std::uint64_t{1} << 28);
  StateVector s{p, n, std::vector<Complex>(d, 0.0)};
  s.amp[label_index(k, p)] = 1.0;
  return s;
}

void apply_gate(StateVector& s, const Gate& g, const PhaseTable& phases) {
  check_qupit(s, g.i);
  auto const p = s.p.value();
  switch (g.kind) {
    case GateKind::kFourier:
    case GateKind::kFourierDag:
      apply_fourier(s, g.i, g.kind == GateKind::kFourierDag, phases);
      return;
    case GateKind::kLocalPhase: {
      auto const stride = stride_of(s.n, g.i, p);
      for (std::size_t idx = 0; idx < s.amp.size(); ++idx) {
        s.amp[idx] *= phases.local_phase(digit(idx, stride, p), g.power);
      }
      return;
    }
    case GateKind::kPauliZ: {
      auto const stride = stride_of(s.n, g.i, p);
      auto const power = g.power % p;
      for (std::size_t idx = 0; idx < s.amp.size(); ++idx) {
        s.amp[idx] *= phases.omega_p(digit(idx, stride, p) * power);
      }
      return;
    }
    case GateKind::kControlledPhase: {
      check_qupit(s, g.j);
      if (g.i == g.j) throw std::out_of_range("controlled phase needs two qupits");
      auto const si = stride_of(s.n, g.i, p);
      auto const sj = stride_of(s.n, g.j, p);
      auto const power = g.power % p;
      for (std::size_t idx = 0; idx < s.amp.size(); ++idx) {
        auto const e = (digit(idx, si, p) * digit(idx, sj, p)) % p;
        s.amp[idx] *= phases.omega_p(e * power);
      }
      return;
    }
  }
}

void apply_gate(StateVector& s, const Gate& g) { apply_gate(s, g, PhaseTable(s.p)); }

StateVector graph_state(const MatZp& a) { return graph_state(a, PhaseTable(a.modulus())); }

StateVector graph_state(const MatZp& a, const PhaseTable& phases) {
  if (!a.is_symmetric()) throw std::invalid_argument("graph_state: matrix not symmetric");
  auto const n = a.rows();
  auto s = plus_state(a.modulus(), n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      auto const power = a(i, j);
      if (power == 0) continue;
      if (i == j) {
        apply_gate(s, {GateKind::kLocalPhase, i + 1, 0, power}, phases);
      } else {
        apply_gate(s, {GateKind::kControlledPhase, i + 1, j + 1, power}, phases);
      }
    }
  }
  return s;
}

StateVector basis_element(const MatZp& a, const std::vector<Residue>& m) {
  if (m.size() != a.rows()) throw std::invalid_argument("basis_element: need n labels");
  PhaseTable const phases(a.modulus());
  auto s = graph_state(a, phases);
  for (std::size_t i = 0; i < m.size(); ++i) {
    auto const power = a.modulus().reduce_unsigned(m[i]);
    if (power != 0) apply_gate(s, {GateKind::kPauliZ, i + 1, 0, power}, phases);
  }
  return s;
}

double overlap(const StateVector& u, const StateVector& v) {
  if (u.amp.size() != v.amp.size()) throw std::invalid_argument("overlap: dimension mismatch");
  Complex acc = 0.0;
  for (std::size_t k = 0; k < u.amp.size(); ++k) acc += std::conj(u.amp[k]) * v.amp[k];
  return std::norm(acc);
}

std::vector<Residue> label_vector(std::size_t index, std::size_t n, const PrimeModulus& p) {
  std::vector<Residue> m(n, 0);
  for (std::size_t i = n; i-- > 0;) {
    m[i] = index % p.value();
    index /= p.value();
  }
  return m;
}

std::size_t label_index(const std::vector<Residue>& m, const PrimeModulus& p) {
  std::size_t index = 0;
  for (auto v : m) index = index * p.value() + p.reduce_unsigned(v);
  return index;
}

MuReport verify_mu_numeric(const MubSet& s, const MuOptions& options) {
  MuReport report;
  PhaseTable const phases(s.p);
  auto const d = s.dimension();
  auto const target = 1.0 / static_cast<double>(d);
  auto const bases = s.matrices.size() + 1;

  std::mutex merge_mutex;
  auto record = [&](MuReport& local, std::size_t ba, std::size_t ea, std::size_t bb,
                    std::size_t eb, double value) {
    auto const dev = std::abs(value - target);
    ++local.overlaps_checked;
    local.worst_deviation = std::max(local.worst_deviation, dev);
    if (dev > options.tol) {
      ++local.violations;
      if (!local.first_violation) local.first_violation = OverlapViolation{ba, ea, bb, eb, value};
    }
  };
  auto merge = [&](const MuReport& local) {
    std::lock_guard<std::mutex> lock(merge_mutex);
    report.overlaps_checked += local.overlaps_checked;
    report.violations += local.violations;
    report.worst_deviation = std::max(report.worst_deviation, local.worst_deviation);
    if (local.first_violation) {
      auto const& v = *local.first_violation;
      auto const key = [](const OverlapViolation& o) {
        return std::tie(o.basis_a, o.basis_b, o.element_a, o.element_b);
      };
      if (!report.first_violation || key(v) < key(*report.first_violation)) {
        report.first_violation = v;
      }
    }
  };

  // Graph states |G_r> for every basis; |G_r(m)> = Z^m |G_r>.
  constexpr std::size_t kCacheLimit = std::size_t{1} << 24;
  bool const cache = bases * d <= kCacheLimit;
  std::vector<StateVector> graphs;
  if (cache) {
    graphs.resize(s.matrices.size(), StateVector{s.p, s.n, {}});
    parallel_for(s.matrices.size(), options.threads, [&](std::size_t b, std::size_t e) {
      for (auto r = b; r < e; ++r) graphs[r] = graph_state(s.matrices[r], phases);
    });
  }
  auto graph_of = [&](std::size_t r) {
    return cache ? graphs[r] : graph_state(s.matrices[r], phases);
  };

  if (!options.samples) {
    // Computational basis against each graph basis: |<k|G_r(m)>|^2 = |G_r[k]|^2.
    parallel_for(s.matrices.size(), options.threads, [&](std::size_t b, std::size_t e) {
      MuReport local;
      for (auto r = b; r < e; ++r) {
        auto const g = graph_of(r);
        for (std::size_t k = 0; k < d; ++k) {
          auto const v = std::norm(g.amp[k]);
          for (std::size_t m = 0; m < d; ++m) record(local, 0, k, r + 1, m, v);
        }
      }
      merge(local);
    });
    // Graph bases pairwise. The overlap of |G_r(m)> and |G_s(m')> depends on
    // m' - m only; the Fourier transform of conj(G_r) G_s lists all of them.
    auto const pairs = s.matrices.size() * (s.matrices.size() - 1) / 2;
    std::vector<std::pair<std::size_t, std::size_t>> pair_list;
    pair_list.reserve(pairs);
    for (std::size_t r = 0; r < s.matrices.size(); ++r) {
      for (auto t = r + 1; t < s.matrices.size(); ++t) pair_list.emplace_back(r, t);
    }
    parallel_for(pair_list.size(), options.threads, [&](std::size_t b, std::size_t e) {
      MuReport local;
      for (auto idx = b; idx < e; ++idx) {
        auto const [r, t] = pair_list[idx];
        auto const gr = graph_of(r);
        auto const gt = graph_of(t);
        StateVector prod{s.p, s.n, std::vector<Complex>(d)};
        for (std::size_t k = 0; k < d; ++k) prod.amp[k] = std::conj(gr.amp[k]) * gt.amp[k];
        for (std::size_t q = 1; q <= s.n; ++q) {
          apply_gate(prod, {GateKind::kFourier, q, 0, 0}, phases);
        }
        auto const scale = static_cast<double>(d);
        for (std::size_t delta = 0; delta < d; ++delta) {
          auto const value = std::norm(prod.amp[delta]) * scale;
          // Every element pair (m, m + delta) shares this value.
          for (std::size_t m = 0; m < d; ++m) {
            auto const mv = label_vector(m, s.n, s.p);
            auto const dv = label_vector(delta, s.n, s.p);
            std::vector<Residue> mp(s.n);
            for (std::size_t i = 0; i < s.n; ++i) mp[i] = s.p.add(mv[i], dv[i]);
            record(local, r + 1, m, t + 1, label_index(mp, s.p), value);
          }
        }
      }
      merge(local);
    });
  } else {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::size_t> pick_basis(0, bases - 1);
    std::uniform_int_distribution<std::size_t> pick_element(0, d - 1);
    MuReport local;
    if (bases < 2) {
      report.pass = true;
      return report;
    }
    for (std::size_t t = 0; t < *options.samples; ++t) {
      auto ba = pick_basis(rng);
      auto bb = pick_basis(rng);
      while (bb == ba) bb = pick_basis(rng);
      auto const ea = pick_element(rng);
      auto const eb = pick_element(rng);
      auto state = [&](std::size_t basis, std::size_t element) {
        auto const m = label_vector(element, s.n, s.p);
        if (basis == 0) return computational_state(s.p, s.n, m);
        auto g = graph_of(basis - 1);
        for (std::size_t i = 0; i < s.n; ++i) {
          if (m[i] != 0) apply_gate(g, {GateKind::kPauliZ, i + 1, 0, m[i]}, phases);
        }
        return g;
      };
      record(local, ba, ea, bb, eb, overlap(state(ba, ea), state(bb, eb)));
    }
    merge(local);
  }
  report.pass = report.violations == 0;
  return report;
}

bool stabilizer_check(const MatZp& a, const std::vector<Residue>& m, double tol) {
  auto const& p = a.modulus();
  auto const pv = p.value();
  auto const n = a.rows();
  if (m.size() != n) throw std::invalid_argument("stabilizer_check: need n labels");
  PhaseTable const phases(p);
  auto const state = basis_element(a, m);
  auto const d = state.dimension();

  using Dense = std::vector<Complex>;  // row-major square
  auto kron = [](const Dense& x, std::size_t dx, const Dense& y, std::size_t dy) {
    Dense out(dx * dy * dx * dy);
    auto const w = dx * dy;
    for (std::size_t r1 = 0; r1 < dx; ++r1)
      for (std::size_t c1 = 0; c1 < dx; ++c1)
        for (std::size_t r2 = 0; r2 < dy; ++r2)
          for (std::size_t c2 = 0; c2 < dy; ++c2)
            out[(r1 * dy + r2) * w + c1 * dy + c2] = x[r1 * dx + c1] * y[r2 * dy + c2];
    return out;
  };
  auto local_mul = [&](const Dense& x, const Dense& y) {
    Dense out(pv * pv, 0.0);
    for (std::size_t r = 0; r < pv; ++r)
      for (std::size_t k = 0; k < pv; ++k)
        for (std::size_t c = 0; c < pv; ++c) out[r * pv + c] += x[r * pv + k] * y[k * pv + c];
    return out;
  };
  Dense x_op(pv * pv, 0.0);  // X|k> = |k+1>
  for (std::size_t k = 0; k < pv; ++k) x_op[((k + 1) % pv) * pv + k] = 1.0;
  auto z_pow = [&](std::uint64_t e) {
    Dense z(pv * pv, 0.0);
    for (std::size_t k = 0; k < pv; ++k) z[k * pv + k] = phases.omega_p(k * (e % pv));
    return z;
  };

  for (std::size_t i = 0; i < n; ++i) {
    Dense op{1.0};
    std::size_t dim = 1;
    for (std::size_t j = 0; j < n; ++j) {
      auto const local = (j == i) ? local_mul(x_op, z_pow(a(i, i))) : z_pow(a(i, j));
      op = kron(op, dim, local, pv);
      dim *= pv;
    }
    Complex prefactor = 1.0;
    Complex eigenvalue = phases.omega_p((pv - m[i] % pv) % pv);
    if (p.is_two()) {
      prefactor = phases.omega_4(a(i, i));
      eigenvalue = (m[i] % 2 == 0) ? 1.0 : -1.0;
    }
    for (std::size_t r = 0; r < d; ++r) {
      Complex acc = 0.0;
      for (std::size_t c = 0; c < d; ++c) acc += op[r * d + c] * state.amp[c];
      if (std::abs(prefactor * acc - eigenvalue * state.amp[r]) > tol) return false;
    }
  }
  return true;
}

double partial_trace_purity(const StateVector& s, const std::vector<std::size_t>& x) {
  auto const p = s.p.value();
  std::vector<bool> in_x(s.n + 1, false);
  for (auto q : x) {
    if (q < 1 || q > s.n || in_x[q]) throw std::invalid_argument("partial_trace_purity: bad subset");
    in_x[q] = true;
  }
  std::size_t dx = 1;
  std::size_t dy = 1;
  for (std::size_t q = 1; q <= s.n; ++q) (in_x[q] ? dx : dy) *= p;
  // Split every index into (row in X, column in Y), preserving digit order.
  std::vector<Complex> mat(dx * dy, 0.0);
  for (std::size_t idx = 0; idx < s.amp.size(); ++idx) {
    std::size_t row = 0;
    std::size_t col = 0;
    for (std::size_t q = 1; q <= s.n; ++q) {
      auto const dq = digit(idx, stride_of(s.n, q, p), p);
      if (in_x[q]) {
        row = row * p + dq;
      } else {
        col = col * p + dq;
      }
    }
    mat[row * dy + col] = s.amp[idx];
  }
  double purity = 0.0;
  for (std::size_t r = 0; r < dx; ++r) {
    for (std::size_t c = 0; c < dx; ++c) {
      Complex rho = 0.0;
      for (std::size_t k = 0; k < dy; ++k) rho += mat[r * dy + k] * std::conj(mat[c * dy + k]);
      purity += std::norm(rho);
    }
  }
  return purity;
}

}  // namespace graphmub

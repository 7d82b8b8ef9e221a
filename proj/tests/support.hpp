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

// Independent reference implementations and seeded generators shared by the
// unit and acceptance tests. Nothing here calls into the algorithms under
// test beyond the basic value types.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <set>
#include <vector>

#include "graphmub/matrix.hpp"
#include "graphmub/poly.hpp"

namespace graphmub::testing {

using IntPoly = std::vector<std::int64_t>;  // ascending, reduced mod p

inline std::int64_t mod(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }

inline void trim(IntPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline IntPoly poly_mul(const IntPoly& a, const IntPoly& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = mod(out[i + j] + a[i] * b[j], p);
  trim(out);
  return out;
}

inline IntPoly poly_add(const IntPoly& a, const IntPoly& b, std::int64_t p, std::int64_t sign = 1) {
  IntPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    auto const x = i < a.size() ? a[i] : 0;
    auto const y = i < b.size() ? b[i] : 0;
    out[i] = mod(x + sign * y, p);
  }
  trim(out);
  return out;
}

// Remainder of a modulo a monic b.
inline IntPoly poly_rem_monic(IntPoly a, const IntPoly& b, std::int64_t p) {
  trim(a);
  while (a.size() >= b.size()) {
    auto const shift = a.size() - b.size();
    auto const lead = a.back();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = mod(a[shift + i] - lead * b[i], p);
    trim(a);
  }
  return a;
}

// Irreducible iff no monic polynomial of degree 1..deg/2 divides f.
inline bool brute_irreducible(const IntPoly& f, std::int64_t p) {
  auto const n = static_cast<int>(f.size()) - 1;
  for (int k = 1; 2 * k <= n; ++k) {
    std::int64_t count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    for (std::int64_t idx = 0; idx < count; ++idx) {
      IntPoly g(k + 1, 0);
      auto t = idx;
      for (int i = 0; i < k; ++i) {
        g[i] = t % p;
        t /= p;
      }
      g[k] = 1;
      if (poly_rem_monic(f, g, p).empty()) return false;
    }
  }
  return true;
}

// Multiplicative order of x modulo f by repeated multiplication.
inline std::int64_t brute_order_of_x(const IntPoly& f, std::int64_t p, std::int64_t limit) {
  IntPoly cur{1};
  for (std::int64_t k = 1; k <= limit; ++k) {
    cur = poly_rem_monic(poly_mul(cur, {0, 1}, p), f, p);
    if (cur == IntPoly{1}) return k;
    if (cur.empty()) return -1;
  }
  return -1;
}

inline std::int64_t int_pow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

inline IntPoly to_int_poly(const PolyZp& f) {
  return IntPoly(f.coeffs().begin(), f.coeffs().end());
}

using IntMat = std::vector<std::vector<std::int64_t>>;

inline IntMat to_int_mat(const MatZp& m) {
  IntMat out(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = static_cast<std::int64_t>(m(r, c));
  return out;
}

inline IntMat minor_of(const IntMat& a, std::size_t row, std::size_t col) {
  IntMat out;
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (r == row) continue;
    std::vector<std::int64_t> line;
    for (std::size_t c = 0; c < a.size(); ++c)
      if (c != col) line.push_back(a[r][c]);
    out.push_back(line);
  }
  return out;
}

// Cofactor expansion along the first row.
inline std::int64_t laplace_det(const IntMat& a, std::int64_t p) {
  if (a.size() == 1) return mod(a[0][0], p);
  std::int64_t acc = 0;
  for (std::size_t c = 0; c < a.size(); ++c) {
    auto const term = mod(a[0][c] * laplace_det(minor_of(a, 0, c), p), p);
    acc = mod(acc + ((c % 2 == 0) ? term : -term), p);
  }
  return acc;
}

// det(x*1 - a) by cofactor expansion with polynomial entries.
inline IntPoly laplace_char_poly(const IntMat& a, std::int64_t p) {
  auto const n = a.size();
  std::vector<std::vector<IntPoly>> m(n, std::vector<IntPoly>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      IntPoly e{mod(-a[r][c], p)};
      if (r == c) e.push_back(1);
      trim(e);
      m[r][c] = e;
    }
  auto rec = [&](auto&& self, const std::vector<std::vector<IntPoly>>& x) -> IntPoly {
    if (x.size() == 1) return x[0][0];
    IntPoly acc;
    for (std::size_t c = 0; c < x.size(); ++c) {
      std::vector<std::vector<IntPoly>> sub;
      for (std::size_t r = 1; r < x.size(); ++r) {
        std::vector<IntPoly> line;
        for (std::size_t k = 0; k < x.size(); ++k)
          if (k != c) line.push_back(x[r][k]);
        sub.push_back(line);
      }
      auto const term = poly_mul(x[0][c], self(self, sub), p);
      acc = poly_add(acc, term, p, c % 2 == 0 ? 1 : -1);
    }
    return acc;
  };
  return rec(rec, m);
}

inline std::set<std::int64_t> squares_mod(std::int64_t p) {
  std::set<std::int64_t> out;
  for (std::int64_t s = 1; s < p; ++s) out.insert(s * s % p);
  return out;
}

// Graph-state amplitudes straight from the phase formula, one root of unity
// evaluated per basis state.
inline std::vector<std::complex<double>> formula_graph_state(const IntMat& a, std::int64_t p,
                                                             const std::vector<std::int64_t>& m) {
  auto const n = a.size();
  auto const d = int_pow(p, static_cast<int>(n));
  std::vector<std::complex<double>> out(static_cast<std::size_t>(d));
  for (std::int64_t idx = 0; idx < d; ++idx) {
    std::vector<std::int64_t> k(n);
    auto t = idx;
    for (std::size_t i = n; i-- > 0;) {
      k[i] = t % p;
      t /= p;
    }
    // Phase in units of 2 pi / (4p), which covers omega_4 and omega_p.
    std::int64_t units = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) units += 4 * a[i][j] * k[i] * k[j];
      if (p == 2) {
        units += 2 * a[i][i] * k[i];  // omega_4^{A_ii k} = exp(2 pi i (2 A_ii k)/8)
      } else {
        units += 4 * a[i][i] * (k[i] * (k[i] - 1) / 2);
      }
      units += 4 * m[i] * k[i];
    }
    auto const angle = 2.0 * std::numbers::pi * static_cast<double>(units % (4 * p)) /
                       static_cast<double>(4 * p);
    out[static_cast<std::size_t>(idx)] = std::polar(1.0 / std::sqrt(static_cast<double>(d)), angle);
  }
  return out;
}

// Seeded generators for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

  MatZp matrix(const PrimeModulus& p, std::size_t n) {
    MatZp m(p, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m.set(r, c, uniform(0, static_cast<std::int64_t>(p.value()) - 1));
    return m;
  }

  MatZp symmetric(const PrimeModulus& p, std::size_t n) {
    MatZp m(p, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = r; c < n; ++c) {
        auto const v = uniform(0, static_cast<std::int64_t>(p.value()) - 1);
        m.set(r, c, v);
        m.set(c, r, v);
      }
    return m;
  }

  MatZp invertible(const PrimeModulus& p, std::size_t n) {
    for (;;) {
      auto m = matrix(p, n);
      if (laplace_det(to_int_mat(m), static_cast<std::int64_t>(p.value())) != 0) return m;
    }
  }

  PolyZp monic(const PrimeModulus& p, std::size_t n) {
    std::vector<std::int64_t> c(n + 1);
    for (std::size_t i = 0; i < n; ++i) c[i] = uniform(0, static_cast<std::int64_t>(p.value()) - 1);
    c[n] = 1;
    return PolyZp(p, c);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace graphmub::testing

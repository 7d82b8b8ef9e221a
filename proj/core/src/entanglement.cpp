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

#include "graphmub/entanglement.hpp"

#include <algorithm>
#include <stdexcept>

namespace graphmub {
namespace {

std::int64_t int_power(std::uint64_t p, std::size_t k) {
  return static_cast<std::int64_t>(checked_power(p, static_cast<unsigned>(k),
                                                 std::uint64_t{1} << 62));
}

bool offdiag(const MatZp& a, std::size_t i, std::size_t j) { return i != j && a(i, j) != 0; }

bool is_complete_graph(const MatZp& a) {
  auto const n = a.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!offdiag(a, i, j)) return false;
    }
  }
  return true;
}

bool is_star_graph(const MatZp& a) {
  auto const n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (std::size_t j = i + 1; j < n && ok; ++j) {
        bool const spoke = (i == c || j == c);
        ok = offdiag(a, i, j) == spoke;
      }
    }
    if (ok) return true;
  }
  return false;
}

bool is_connected(const MatZp& a) {
  auto const n = a.rows();
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    auto const v = stack.back();
    stack.pop_back();
    for (std::size_t w = 0; w < n; ++w) {
      if (!seen[w] && offdiag(a, v, w)) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

}  // namespace

std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Bipartition Bipartition::from_x(std::size_t n, std::vector<std::size_t> x) {
  std::sort(x.begin(), x.end());
  x.erase(std::unique(x.begin(), x.end()), x.end());
  if (x.empty() || x.size() >= n) {
    throw std::invalid_argument("bipartition: both parts must be nonempty");
  }
  if (x.front() < 1 || x.back() > n) {
    throw std::invalid_argument("bipartition: qupit index out of range");
  }
  Bipartition b{x, {}};
  for (std::size_t q = 1; q <= n; ++q) {
    if (!std::binary_search(x.begin(), x.end(), q)) b.y.push_back(q);
  }
  return b;
}

std::string Bipartition::label() const {
  std::string out;
  auto append = [&](const std::vector<std::size_t>& part) {
    bool const wide = std::any_of(part.begin(), part.end(), [](auto q) { return q > 9; });
    for (std::size_t k = 0; k < part.size(); ++k) {
      if (wide && k > 0) out += ',';
      out += std::to_string(part[k]);
    }
  };
  append(x);
  out += '|';
  append(y);
  return out;
}

std::vector<Bipartition> all_bipartitions(std::size_t n) {
  std::vector<Bipartition> out;
  if (n < 2 || n > 30) return out;
  // Subsets of {2..n} added to qupit 1, excluding the full set.
  std::uint64_t const subsets = std::uint64_t{1} << (n - 1);
  for (std::uint64_t mask = 0; mask + 1 < subsets; ++mask) {
    std::vector<std::size_t> x{1};
    for (std::size_t q = 2; q <= n; ++q) {
      if (mask & (std::uint64_t{1} << (q - 2))) x.push_back(q);
    }
    out.push_back(Bipartition::from_x(n, std::move(x)));
  }
  return out;
}

std::size_t connectivity_rank(const MatZp& a, const Bipartition& b) {
  if (!a.is_square() || b.x.size() + b.y.size() != a.rows()) {
    throw std::invalid_argument("connectivity_rank: bipartition does not match matrix");
  }
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  for (auto q : b.x) rows.push_back(q - 1);
  for (auto q : b.y) cols.push_back(q - 1);
  return mat_rank(a.submatrix(rows, cols));
}

Rational purity(const MatZp& a, const Bipartition& b) {
  return Rational(1, int_power(a.modulus().value(), connectivity_rank(a, b)));
}

DesignCheck design_purity_check(const MubSet& s, const Bipartition& b) {
  if (!s.complete()) throw std::invalid_argument("design_purity_check: incomplete set");
  auto const pv = s.p.value();
  Rational sum(1);  // computational basis: product states
  for (auto const& a : s.matrices) sum += purity(a, b);
  auto const d = int_power(pv, s.n);
  Rational const lhs = sum / Rational(d + 1);
  auto const dx = int_power(pv, b.x.size());
  auto const dy = int_power(pv, b.y.size());
  Rational const rhs(dx + dy, dx * dy + 1);
  return {lhs, rhs, lhs == rhs};
}

std::string to_string(EntanglementLabel label) {
  switch (label) {
    case EntanglementLabel::kFullySeparable:
      return "fully-separable";
    case EntanglementLabel::kGhzType:
      return "GHZ-type";
    case EntanglementLabel::kGenuinelyMultipartite:
      return "genuinely-multipartite";
    case EntanglementLabel::kBiseparableStructure:
      break;
  }
  return "biseparable-structure";
}

EntanglementLabel classify_basis(const MatZp& a) {
  if (!a.is_symmetric()) throw std::invalid_argument("classify_basis: matrix not symmetric");
  auto const n = a.rows();
  bool any_edge = false;
  for (std::size_t i = 0; i < n && !any_edge; ++i) {
    for (std::size_t j = i + 1; j < n && !any_edge; ++j) any_edge = offdiag(a, i, j);
  }
  if (!any_edge) return EntanglementLabel::kFullySeparable;
  if (a.modulus().is_two() && (is_star_graph(a) || is_complete_graph(a))) {
    return EntanglementLabel::kGhzType;
  }
  // Some edge crosses every bipartition exactly when the graph is connected.
  return is_connected(a) ? EntanglementLabel::kGenuinelyMultipartite
                         : EntanglementLabel::kBiseparableStructure;
}

Census census(const MubSet& s) {
  Census c;
  for (auto const& a : s.matrices) ++c.graphs[static_cast<std::size_t>(classify_basis(a))];
  return c;
}

}  // namespace graphmub

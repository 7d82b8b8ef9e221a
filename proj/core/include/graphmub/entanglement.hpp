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

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "graphmub/matrix.hpp"
#include "graphmub/mub_set.hpp"

namespace graphmub {

using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& r);

// Split of the qupits {1..n} into two nonempty parts.
struct Bipartition {
  std::vector<std::size_t> x;  // ascending, 1-based
  std::vector<std::size_t> y;

  // Throws std::invalid_argument for an empty, full, or out-of-range x.
  static Bipartition from_x(std::size_t n, std::vector<std::size_t> x);
  std::string label() const;  // e.g. "1|23"
};

// Every unordered bipartition once, with qupit 1 always in x.
std::vector<Bipartition> all_bipartitions(std::size_t n);

// Rank over Z_p of the |x| by |y| off-diagonal block.
std::size_t connectivity_rank(const MatZp& a, const Bipartition& b);

// Purity of the reduced graph state, p^-rank.
Rational purity(const MatZp& a, const Bipartition& b);

struct DesignCheck {
  Rational lhs;
  Rational rhs;
  bool pass;
};

// Average purity over the complete family (computational basis included)
// against the Haar value (d_X + d_Y) / (d_X d_Y + 1). Throws
// std::invalid_argument for an incomplete set.
DesignCheck design_purity_check(const MubSet& s, const Bipartition& b);

enum class EntanglementLabel {
  kFullySeparable,
  kGhzType,
  kGenuinelyMultipartite,
  kBiseparableStructure,
};
inline constexpr std::size_t kLabelCount = 4;

std::string to_string(EntanglementLabel label);
EntanglementLabel classify_basis(const MatZp& a);

struct Census {
  // Indexed by EntanglementLabel; graph bases only.
  std::array<std::size_t, kLabelCount> graphs{};
  std::size_t count(EntanglementLabel label) const {
    return graphs[static_cast<std::size_t>(label)];
  }
  // Graph bases plus the computational basis.
  std::size_t fully_separable_bases() const {
    return count(EntanglementLabel::kFullySeparable) + 1;
  }
};

Census census(const MubSet& s);

}  // namespace graphmub

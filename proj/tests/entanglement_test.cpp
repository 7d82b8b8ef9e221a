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

#include <cmath>

#include "graphmub/entanglement.hpp"
#include "graphmub/statevector.hpp"
#include "reference_table.hpp"
#include "support.hpp"

namespace graphmub {
namespace {

using testing::Gen;

std::vector<Residue> digits(const std::string& s) {
  std::vector<Residue> out;
  for (char ch : s) out.push_back(static_cast<Residue>(ch - '0'));
  return out;
}

MubSet qubit_example() { return generate_rep_set(witness_from_tridiag({PrimeModulus(2), {1, 0, 0}})); }

MubSet shifted_qubit_example() {
  PrimeModulus const p(2);
  return shift_set(qubit_example(), MatZp(p, {{0, 1, 0}, {1, 0, 0}, {0, 0, 0}}));
}

TEST(Bipartition, Construction) {
  auto const b = Bipartition::from_x(3, {1});
  EXPECT_EQ(b.y, (std::vector<std::size_t>{2, 3}));
  EXPECT_EQ(b.label(), "1|23");
  EXPECT_EQ(Bipartition::from_x(4, {3, 1}).label(), "13|24");
  EXPECT_THROW(Bipartition::from_x(3, {}), std::invalid_argument);
  EXPECT_THROW(Bipartition::from_x(3, {1, 2, 3}), std::invalid_argument);
  EXPECT_THROW(Bipartition::from_x(3, {4}), std::invalid_argument);
  EXPECT_EQ(Bipartition::from_x(3, {1, 1}).label(), "1|23");
  auto const all = all_bipartitions(4);
  EXPECT_EQ(all.size(), 7u);  // 2^(n-1) - 1
  for (auto const& bp : all) EXPECT_EQ(bp.x.front(), 1u);
  EXPECT_TRUE(all_bipartitions(1).empty());
}

TEST(ConnectivityRank, Examples) {
  PrimeModulus const p(2);
  auto const b = Bipartition::from_x(3, {1});
  EXPECT_EQ(connectivity_rank(MatZp::zero(p, 3), b), 0u);
  EXPECT_EQ(connectivity_rank(MatZp(p, {{1, 1, 0}, {1, 0, 1}, {0, 1, 0}}), b), 1u);
  std::size_t rank_one = 0, rank_zero = 0;
  for (auto const& a : qubit_example().matrices) (connectivity_rank(a, b) == 1 ? rank_one : rank_zero)++;
  EXPECT_EQ(rank_one, 6u);
  EXPECT_EQ(rank_zero, 2u);
}

TEST(Purity, Examples) {
  PrimeModulus const p2(2);
  auto const b = Bipartition::from_x(3, {1});
  EXPECT_EQ(purity(MatZp::zero(p2, 3), b), Rational(1));
  EXPECT_EQ(purity(MatZp(p2, {{1, 1, 0}, {1, 0, 1}, {0, 1, 0}}), b), Rational(1, 2));
  PrimeModulus const p3(3);
  EXPECT_EQ(purity(MatZp(p3, {{0, 2}, {2, 1}}), Bipartition::from_x(2, {1})), Rational(1, 3));
  EXPECT_EQ(to_string(Rational(1, 9)), "1/9");
}

TEST(Purity, AgreesWithPartialTrace) {
  MubSetOptions companion;
  companion.method = Method::kCompanion;
  companion.polynomial = PolyZp(PrimeModulus(3), {1, 2, 1, 1});
  for (auto const& s : {qubit_example(), mub_set(PrimeModulus(3), 3, companion)}) {
    for (auto const& a : s.matrices)
      for (auto const& b : all_bipartitions(3)) {
        auto const exact = purity(a, b);
        double const want = static_cast<double>(exact.numerator()) / static_cast<double>(exact.denominator());
        EXPECT_NEAR(partial_trace_purity(graph_state(a), b.x), want, 1e-10);
        EXPECT_NEAR(partial_trace_purity(graph_state(a), b.y), want, 1e-10);
      }
  }
  Gen gen(1717);
  for (int t = 0; t < 30; ++t) {
    PrimeModulus const p(std::vector<std::uint64_t>{2, 3, 5}[static_cast<std::size_t>(gen.uniform(0, 2))]);
    auto const n = static_cast<std::size_t>(p.value() == 2 ? gen.uniform(2, 6) : gen.uniform(2, 4));
    auto const a = gen.symmetric(p, n);
    auto const bps = all_bipartitions(n);
    auto const& b = bps[static_cast<std::size_t>(gen.uniform(0, static_cast<std::int64_t>(bps.size()) - 1))];
    auto const exact = purity(a, b);
    EXPECT_NEAR(partial_trace_purity(graph_state(a), b.x),
                static_cast<double>(exact.numerator()) / static_cast<double>(exact.denominator()), 1e-10);
  }
}

Rational haar_value(std::int64_t dx, std::int64_t dy) { return Rational(dx + dy, dx * dy + 1); }

TEST(DesignPurity, QubitExample) {
  auto const r = design_purity_check(qubit_example(), Bipartition::from_x(3, {1}));
  EXPECT_EQ(r.lhs, Rational(6, 9));
  EXPECT_EQ(r.rhs, Rational(6, 9));
  EXPECT_TRUE(r.pass);
  EXPECT_TRUE(design_purity_check(shifted_qubit_example(), Bipartition::from_x(3, {1})).pass);
}

TEST(DesignPurity, TripartiteQupits) {
  for (std::uint64_t pv : {2u, 3u, 5u}) {
    auto const s = mub_set(PrimeModulus(pv), 3);
    auto const q = static_cast<std::int64_t>(pv);
    for (auto const& b : all_bipartitions(3)) {
      auto const r = design_purity_check(s, b);
      EXPECT_EQ(r.lhs, Rational(q + q * q, q * q * q + 1));
      EXPECT_TRUE(r.pass);
    }
  }
}

TEST(DesignPurity, EveryBipartitionUpTo625) {
  for (auto const& row : testing::reference_rows()) {
    auto const pv = static_cast<std::int64_t>(row.p);
    auto const n = row.d.size();
    if (testing::int_pow(pv, static_cast<int>(n)) > 625 || n < 2) continue;
    auto const s = generate_rep_set(witness_from_tridiag({PrimeModulus(static_cast<std::uint64_t>(pv)), digits(row.d)}));
    for (auto const& b : all_bipartitions(n)) {
      auto const r = design_purity_check(s, b);
      EXPECT_EQ(r.rhs, haar_value(testing::int_pow(pv, static_cast<int>(b.x.size())),
                                  testing::int_pow(pv, static_cast<int>(b.y.size()))));
      EXPECT_TRUE(r.pass) << "p=" << row.p << " d=" << row.d << " " << b.label();
    }
  }
}

TEST(DesignPurity, RejectsIncompleteSet) {
  auto s = qubit_example();
  s.matrices.pop_back();
  EXPECT_THROW(design_purity_check(s, Bipartition::from_x(3, {1})), std::invalid_argument);
}

TEST(Classify, Examples) {
  PrimeModulus const p(2);
  EXPECT_EQ(classify_basis(MatZp::identity(PrimeModulus(5), 3).scaled(3)), EntanglementLabel::kFullySeparable);
  auto const s = qubit_example();
  for (auto const& a : s.matrices) {
    auto const label = classify_basis(a);
    bool const diagonal = a == MatZp::zero(p, 3) || a == MatZp::identity(p, 3);
    EXPECT_EQ(label, diagonal ? EntanglementLabel::kFullySeparable : EntanglementLabel::kGhzType) << a;
  }
  EXPECT_EQ(classify_basis(MatZp(p, {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}})),
            EntanglementLabel::kBiseparableStructure);
  EXPECT_EQ(classify_basis(MatZp(p, {{0, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 0}})),
            EntanglementLabel::kGenuinelyMultipartite);
  EXPECT_EQ(classify_basis(MatZp(PrimeModulus(3), {{0, 1, 1}, {1, 0, 0}, {1, 0, 0}})),
            EntanglementLabel::kGenuinelyMultipartite);
  EXPECT_EQ(to_string(EntanglementLabel::kGhzType), "GHZ-type");
}

TEST(Classify, ShiftedQubitExample) {
  auto const s = shifted_qubit_example();
  std::size_t ghz = 0;
  for (auto const& a : s.matrices) {
    auto const label = classify_basis(a);
    if (label == EntanglementLabel::kGhzType) {
      ++ghz;
      // Both GHZ-type graphs are the complete graph.
      EXPECT_EQ(a(0, 1) * a(0, 2) * a(1, 2), 1u);
    } else {
      EXPECT_EQ(label, EntanglementLabel::kBiseparableStructure);
    }
  }
  EXPECT_EQ(ghz, 2u);
}

TEST(Classify, InvariantUnderSelfLoops) {
  Gen gen(1818);
  for (int t = 0; t < 100; ++t) {
    PrimeModulus const p(std::vector<std::uint64_t>{2, 3, 5}[static_cast<std::size_t>(gen.uniform(0, 2))]);
    auto const n = static_cast<std::size_t>(gen.uniform(1, 5));
    auto const a = gen.symmetric(p, n);
    auto b = a;
    for (std::size_t i = 0; i < n; ++i) b.set(i, i, gen.uniform(0, static_cast<std::int64_t>(p.value()) - 1));
    EXPECT_EQ(classify_basis(a), classify_basis(b)) << a;
  }
}

TEST(Census, Examples) {
  auto const c = census(qubit_example());
  EXPECT_EQ(c.count(EntanglementLabel::kFullySeparable), 2u);
  EXPECT_EQ(c.fully_separable_bases(), 3u);
  EXPECT_EQ(c.count(EntanglementLabel::kGhzType), 6u);

  auto const shifted = census(shifted_qubit_example());
  EXPECT_EQ(shifted.count(EntanglementLabel::kBiseparableStructure), 6u);
  EXPECT_EQ(shifted.count(EntanglementLabel::kGhzType), 2u);
}

TEST(Census, TripartiteTheorem) {
  for (std::uint64_t pv : {2u, 3u, 5u}) {
    auto const s = mub_set(PrimeModulus(pv), 3);
    auto const c = census(s);
    EXPECT_EQ(c.count(EntanglementLabel::kFullySeparable), pv);
    EXPECT_EQ(c.count(EntanglementLabel::kBiseparableStructure), 0u);
    std::size_t no_zero_rank = 0;
    for (auto const& a : s.matrices) {
      bool all_positive = true;
      for (auto const& b : all_bipartitions(3)) all_positive = all_positive && connectivity_rank(a, b) > 0;
      no_zero_rank += all_positive;
    }
    EXPECT_EQ(no_zero_rank, pv * pv * pv - pv);
  }
}

}  // namespace
}  // namespace graphmub

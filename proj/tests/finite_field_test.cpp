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

#include <stdexcept>

#include "graphmub/errors.hpp"
#include "graphmub/poly.hpp"
#include "graphmub/zp.hpp"
#include "support.hpp"

namespace graphmub {
namespace {

using testing::Gen;
using testing::IntPoly;

TEST(PrimeModulus, RejectsComposites) {
  EXPECT_THROW(PrimeModulus(1), std::invalid_argument);
  EXPECT_THROW(PrimeModulus(4), std::invalid_argument);
  EXPECT_THROW(PrimeModulus(91), std::invalid_argument);
  EXPECT_NO_THROW(PrimeModulus(2));
  EXPECT_NO_THROW(PrimeModulus(97));
}

TEST(PrimeModulus, ArithmeticAndInverse) {
  PrimeModulus const p(7);
  EXPECT_EQ(p.reduce(-1), 6u);
  EXPECT_EQ(p.add(5, 4), 2u);
  EXPECT_EQ(p.sub(2, 5), 4u);
  EXPECT_EQ(p.mul(3, 5), 1u);
  for (Residue a = 1; a < 7; ++a) EXPECT_EQ(p.mul(a, p.inv(a)), 1u);
  EXPECT_THROW(p.inv(0), std::domain_error);
}

TEST(QuadraticResidue, SmallCases) {
  EXPECT_TRUE(qr_test(1, PrimeModulus(3)));
  EXPECT_FALSE(qr_test(2, PrimeModulus(3)));
  EXPECT_TRUE(qr_test(4, PrimeModulus(5)));
  EXPECT_THROW(qr_test(0, PrimeModulus(5)), std::invalid_argument);
}

TEST(QuadraticResidue, MatchesSquaresAndCountsForOddPrimesUpTo97) {
  for (std::uint64_t pv = 3; pv <= 97; ++pv) {
    if (!is_prime(pv)) continue;
    PrimeModulus const p(pv);
    auto const squares = testing::squares_mod(static_cast<std::int64_t>(pv));
    std::size_t residues = 0;
    for (Residue a = 1; a < pv; ++a) {
      bool const qr = qr_test(a, p);
      EXPECT_EQ(qr, squares.count(static_cast<std::int64_t>(a)) == 1) << "p=" << pv << " a=" << a;
      residues += qr ? 1 : 0;
    }
    EXPECT_EQ(residues, (pv - 1) / 2) << "p=" << pv;
  }
}

TEST(QuadraticResidue, ProductOfTwoNonResiduesIsResidue) {
  for (std::uint64_t pv = 3; pv <= 97; ++pv) {
    if (!is_prime(pv)) continue;
    PrimeModulus const p(pv);
    for (Residue a = 1; a < pv; ++a) {
      if (qr_test(a, p)) continue;
      for (Residue b = 1; b < pv; ++b) {
        if (!qr_test(b, p)) {
          EXPECT_TRUE(qr_test(p.mul(a, b), p));
        }
      }
    }
  }
}

TEST(QuadraticResidue, SmallestNonResidue) {
  EXPECT_EQ(find_nonresidue(PrimeModulus(3)), 2u);
  EXPECT_EQ(find_nonresidue(PrimeModulus(5)), 2u);
  EXPECT_EQ(find_nonresidue(PrimeModulus(7)), 3u);
  EXPECT_THROW(find_nonresidue(PrimeModulus(2)), std::invalid_argument);
}

TEST(QuadraticResidue, SqrtByScan) {
  PrimeModulus const p(11);
  for (Residue a = 1; a < 11; ++a) {
    if (!qr_test(a, p)) {
      EXPECT_THROW(sqrt_mod(a, p), std::invalid_argument);
      continue;
    }
    auto const s = sqrt_mod(a, p);
    EXPECT_EQ(p.mul(s, s), a);
  }
}

TEST(PolyZp, NormalizesAndReportsDegree) {
  PrimeModulus const p(3);
  PolyZp const f(p, {4, -1, 3, 0});
  EXPECT_EQ(f.coeffs(), (std::vector<Residue>{1, 2}));
  EXPECT_EQ(f.degree(), 1u);
  EXPECT_FALSE(PolyZp::zero(p).degree().has_value());
  EXPECT_TRUE(PolyZp(p, {3, 6}).is_zero());
}

TEST(PolyZp, DivisionByHand) {
  PrimeModulus const p(2);
  auto const r = divmod(PolyZp(p, {1, 0, 1}), PolyZp(p, {1, 1}));
  EXPECT_TRUE(r.remainder.is_zero());
  EXPECT_EQ(r.quotient, PolyZp(p, {1, 1}));
  EXPECT_EQ(poly_gcd(PolyZp(p, {1, 1, 0, 1}), PolyZp(p, {0, 1, 1})), PolyZp::constant(p, 1));
}

TEST(PolyZp, ErrorsOnMismatchAndZeroDivisor) {
  PolyZp const a(PrimeModulus(2), {1, 1});
  PolyZp const b(PrimeModulus(3), {1, 1});
  EXPECT_THROW(a + b, std::invalid_argument);
  EXPECT_THROW(divmod(a, PolyZp::zero(PrimeModulus(2))), std::domain_error);
}

TEST(PolyZp, DivisionIdentityOnRandomPolynomials) {
  Gen gen(11);
  for (std::uint64_t pv : {2u, 3u, 5u, 7u}) {
    PrimeModulus const p(pv);
    for (int t = 0; t < 50; ++t) {
      auto const a = gen.monic(p, static_cast<std::size_t>(gen.uniform(0, 9)));
      auto b = gen.monic(p, static_cast<std::size_t>(gen.uniform(1, 5))).scaled(
          static_cast<Residue>(gen.uniform(1, static_cast<std::int64_t>(pv) - 1)));
      auto const r = divmod(a, b);
      EXPECT_EQ(r.quotient * b + r.remainder, a);
      if (!r.remainder.is_zero()) {
        EXPECT_LT(*r.remainder.degree(), *b.degree());
      }
      EXPECT_EQ(a * PolyZp::constant(p, 1), a);
      auto const g = poly_gcd(a, b);
      EXPECT_TRUE(g.is_monic());
      EXPECT_TRUE(divmod(a, g).remainder.is_zero());
      EXPECT_TRUE(divmod(b, g).remainder.is_zero());
    }
  }
}

TEST(Irreducibility, KnownCases) {
  EXPECT_FALSE(poly_is_irreducible(PolyZp(PrimeModulus(2), {1, 0, 1})));
  EXPECT_TRUE(poly_is_irreducible(PolyZp(PrimeModulus(3), {2, 1, 1})));
  EXPECT_TRUE(poly_is_irreducible(PolyZp(PrimeModulus(3), {1, 2, 1, 1})));
  EXPECT_THROW(poly_is_irreducible(PolyZp(PrimeModulus(3), {1, 2})), std::invalid_argument);
  EXPECT_THROW(poly_is_irreducible(PolyZp::constant(PrimeModulus(3), 1)), std::invalid_argument);
}

TEST(Irreducibility, MatchesTrialDivisionExhaustively) {
  // Every monic polynomial with p^n up to a few thousand.
  for (auto [pv, max_n] : std::vector<std::pair<std::int64_t, int>>{{2, 10}, {3, 6}, {5, 4}, {7, 3}}) {
    PrimeModulus const p(static_cast<std::uint64_t>(pv));
    for (int n = 1; n <= max_n; ++n) {
      auto const count = testing::int_pow(pv, n);
      for (std::int64_t idx = 0; idx < count; ++idx) {
        IntPoly c(static_cast<std::size_t>(n) + 1, 0);
        auto t = idx;
        for (int i = 0; i < n; ++i) {
          c[static_cast<std::size_t>(i)] = t % pv;
          t /= pv;
        }
        c.back() = 1;
        PolyZp const f(p, c);
        ASSERT_EQ(poly_is_irreducible(f), testing::brute_irreducible(c, pv)) << f << " p=" << pv;
      }
    }
  }
}

TEST(Irreducibility, IrreducibleIsCoprimeToAllLowerDegreeMonics) {
  Gen gen(5);
  for (std::uint64_t pv : {2u, 3u, 5u}) {
    PrimeModulus const p(pv);
    for (std::size_t n = 2; n <= 5; ++n) {
      auto const f = find_irreducible(p, n, false);
      for (std::size_t k = 1; k < n; ++k) {
        if (testing::int_pow(static_cast<std::int64_t>(pv), static_cast<int>(k)) > 10'000) continue;
        auto const count = testing::int_pow(static_cast<std::int64_t>(pv), static_cast<int>(k));
        for (std::int64_t idx = 0; idx < count; ++idx) {
          std::vector<Residue> low(k);
          auto t = idx;
          for (std::size_t i = 0; i < k; ++i) {
            low[i] = static_cast<Residue>(t % static_cast<std::int64_t>(pv));
            t /= static_cast<std::int64_t>(pv);
          }
          auto const g = PolyZp::monic_from_low(p, low);
          EXPECT_EQ(poly_gcd(f, g), PolyZp::constant(p, 1));
        }
      }
    }
  }
}

TEST(Primitivity, KnownCases) {
  EXPECT_TRUE(poly_is_primitive(PolyZp(PrimeModulus(2), {1, 1, 0, 1})));
  EXPECT_FALSE(poly_is_primitive(PolyZp(PrimeModulus(3), {1, 0, 1})));
  EXPECT_TRUE(poly_is_primitive(PolyZp(PrimeModulus(2), {1, 1})));
  EXPECT_THROW(poly_is_primitive(PolyZp(PrimeModulus(2), {1, 0, 1})), std::invalid_argument);
}

TEST(Primitivity, MatchesBruteForceOrder) {
  for (auto [pv, max_n] : std::vector<std::pair<std::int64_t, int>>{{2, 8}, {3, 5}, {5, 3}, {7, 3}}) {
    PrimeModulus const p(static_cast<std::uint64_t>(pv));
    for (int n = 1; n <= max_n; ++n) {
      auto const count = testing::int_pow(pv, n);
      auto const group = count - 1;
      for (std::int64_t idx = 0; idx < count; ++idx) {
        IntPoly c(static_cast<std::size_t>(n) + 1, 0);
        auto t = idx;
        for (int i = 0; i < n; ++i) {
          c[static_cast<std::size_t>(i)] = t % pv;
          t /= pv;
        }
        c.back() = 1;
        if (!testing::brute_irreducible(c, pv)) continue;
        PolyZp const f(p, c);
        bool const expected = testing::brute_order_of_x(c, pv, group) == group;
        ASSERT_EQ(poly_is_primitive(f), expected) << f;
        if (expected) {
          EXPECT_TRUE(poly_is_irreducible(f));
        }
      }
    }
  }
}

TEST(FindIrreducible, FirstInEnumerationOrder) {
  PrimeModulus const p(2);
  EXPECT_EQ(find_irreducible(p, 3, false), PolyZp(p, {1, 1, 0, 1}));
  EXPECT_EQ(find_irreducible(PrimeModulus(3), 2, false), PolyZp(PrimeModulus(3), {1, 0, 1}));
  EXPECT_EQ(find_irreducible(PrimeModulus(3), 2, true), PolyZp(PrimeModulus(3), {2, 1, 1}));
}

}  // namespace
}  // namespace graphmub

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
#include <ostream>
#include <string>
#include <vector>

#include "graphmub/zp.hpp"

namespace graphmub {

// Polynomial over Z_p stored as ascending coefficients; coeffs()[i] is the
// coefficient of x^i. Trailing zeros are stripped, so the zero polynomial
// has no stored coefficients and degree() == std::nullopt.
class PolyZp {
 public:
  PolyZp(PrimeModulus p, std::vector<std::int64_t> coeffs);
  explicit PolyZp(PrimeModulus p) : p_(p) {}

  static PolyZp zero(PrimeModulus p) { return PolyZp(p); }
  static PolyZp constant(PrimeModulus p, std::int64_t c);
  static PolyZp monomial(PrimeModulus p, std::size_t degree,
                         std::int64_t c = 1);
  // x^n + c_{n-1} x^{n-1} + ... + c_0 from the n low coefficients.
  static PolyZp monic_from_low(PrimeModulus p,
                               const std::vector<Residue>& low);

  const PrimeModulus& modulus() const { return p_; }
  const std::vector<Residue>& coeffs() const { return coeffs_; }
  std::optional<std::size_t> degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }
  // Coefficient of x^i, zero beyond the degree.
  Residue coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : 0;
  }
  Residue leading() const { return is_zero() ? 0 : coeffs_.back(); }
  Residue evaluate(Residue x) const;

  PolyZp monic() const;

  friend PolyZp operator+(const PolyZp& a, const PolyZp& b);
  friend PolyZp operator-(const PolyZp& a, const PolyZp& b);
  friend PolyZp operator*(const PolyZp& a, const PolyZp& b);
  PolyZp scaled(Residue s) const;
  friend bool operator==(const PolyZp&, const PolyZp&) = default;

  std::string to_string() const;

 private:
  void normalize();

  PrimeModulus p_;
  std::vector<Residue> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const PolyZp& f);

struct PolyDivision {
  PolyZp quotient;
  PolyZp remainder;
};

// Long division a = q*b + r with deg r < deg b. Throws std::invalid_argument
// on modulus mismatch and std::domain_error when b is zero.
PolyDivision divmod(const PolyZp& a, const PolyZp& b);
PolyZp poly_gcd(const PolyZp& a, const PolyZp& b);  // monic, or zero
PolyZp mulmod(const PolyZp& a, const PolyZp& b, const PolyZp& m);
PolyZp powmod(const PolyZp& base, std::uint64_t exp, const PolyZp& m);

// Distinct-degree test: x^(p^n) == x mod f and gcd(x^(p^k) - x, f) == 1 for
// k <= n/2. f must be monic of degree >= 1.
bool poly_is_irreducible(const PolyZp& f);

// Order of x in Z_p[x]/(f) equals p^n - 1. f must be monic irreducible;
// reducible input throws std::invalid_argument.
bool poly_is_primitive(const PolyZp& f);

// First monic polynomial of degree n (low coefficients enumerated with c_0
// varying fastest) that is irreducible, or primitive when requested.
PolyZp find_irreducible(const PrimeModulus& p, std::size_t n,
                        bool primitive);

}  // namespace graphmub

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

#include "graphmub/zp.hpp"

#include <stdexcept>
#include <string>

namespace graphmub {

bool is_prime(std::uint64_t value) {
  if (value < 2) return false;
  if (value % 2 == 0) return value == 2;
  for (std::uint64_t d = 3; d * d <= value; d += 2) {
    if (value % d == 0) return false;
  }
  return true;
}

PrimeModulus::PrimeModulus(std::uint64_t p) : p_(p) {
  if (p > (std::uint64_t{1} << 31)) {
    throw std::invalid_argument("modulus too large: " + std::to_string(p));
  }
  if (!is_prime(p)) {
    throw std::invalid_argument("modulus is not prime: " + std::to_string(p));
  }
}

Residue PrimeModulus::reduce(std::int64_t v) const {
  auto const m = static_cast<std::int64_t>(p_);
  auto r = v % m;
  if (r < 0) r += m;
  return static_cast<Residue>(r);
}

Residue PrimeModulus::pow(Residue base, std::uint64_t exp) const {
  Residue result = 1 % p_;
  base %= p_;
  while (exp > 0) {
    if (exp & 1U) result = mul(result, base);
    base = mul(base, base);
    exp >>= 1U;
  }
  return result;
}

Residue PrimeModulus::inv(Residue a) const {
  a %= p_;
  if (a == 0) throw std::domain_error("zero has no inverse mod p");
  return pow(a, p_ - 2);
}

bool qr_test(Residue a, const PrimeModulus& p) {
  a = p.reduce_unsigned(a);
  if (a == 0) throw std::invalid_argument("qr_test: zero is excluded");
  if (p.is_two()) return true;
  return p.pow(a, (p.value() - 1) / 2) == 1;
}

Residue find_nonresidue(const PrimeModulus& p) {
  if (p.is_two()) {
    throw std::invalid_argument("find_nonresidue: p must be odd");
  }
  for (Residue q = 2; q < p.value(); ++q) {
    if (!qr_test(q, p)) return q;
  }
  throw std::logic_error("odd prime without a non-residue");
}

Residue sqrt_mod(Residue a, const PrimeModulus& p) {
  a = p.reduce_unsigned(a);
  if (a == 0) throw std::invalid_argument("sqrt_mod: zero");
  for (Residue s = 1; s < p.value(); ++s) {
    if (p.mul(s, s) == a) return s;
  }
  throw std::invalid_argument("sqrt_mod: not a quadratic residue");
}

std::vector<std::uint64_t> prime_factors(std::uint64_t value) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= value; d += (d == 2 ? 1 : 2)) {
    if (value % d == 0) {
      out.push_back(d);
      while (value % d == 0) value /= d;
    }
  }
  if (value > 1) out.push_back(value);
  return out;
}

std::uint64_t checked_power(std::uint64_t p, unsigned n, std::uint64_t cap) {
  std::uint64_t result = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (result > cap / p) {
      throw std::invalid_argument("p^n exceeds the supported size");
    }
    result *= p;
  }
  return result;
}

}  // namespace graphmub

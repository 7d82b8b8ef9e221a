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

#include <cstdint>
#include <vector>

namespace graphmub {

using Residue = std::uint64_t;

bool is_prime(std::uint64_t value);

// The prime modulus p of Z_p. Construction runs a deterministic primality
// check; p is capped at 2^31 so residue products fit in 64 bits.
class PrimeModulus {
 public:
  explicit PrimeModulus(std::uint64_t p);

  std::uint64_t value() const { return p_; }
  bool is_two() const { return p_ == 2; }

  Residue reduce(std::int64_t v) const;
  Residue reduce_unsigned(std::uint64_t v) const { return v % p_; }

  Residue add(Residue a, Residue b) const { return (a + b) % p_; }
  Residue sub(Residue a, Residue b) const { return (a + p_ - b) % p_; }
  Residue mul(Residue a, Residue b) const { return (a * b) % p_; }
  Residue neg(Residue a) const { return a == 0 ? 0 : p_ - a; }
  Residue pow(Residue base, std::uint64_t exp) const;
  // Throws std::domain_error for a == 0.
  Residue inv(Residue a) const;

  friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;

 private:
  std::uint64_t p_;
};

// Euler criterion: a^((p-1)/2) == 1. For p == 2 every nonzero element is a
// residue. Throws std::invalid_argument when a == 0 mod p.
bool qr_test(Residue a, const PrimeModulus& p);

// Smallest q in [2, p) that is a quadratic non-residue. p must be odd.
Residue find_nonresidue(const PrimeModulus& p);

// Smallest s in [1, p) with s^2 == a, found by scanning. Throws
// std::invalid_argument when a is zero or a non-residue.
Residue sqrt_mod(Residue a, const PrimeModulus& p);

// Distinct prime factors of value (trial division), ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t value);

// p^n with overflow check against the given cap; throws
// std::invalid_argument if p^n exceeds cap.
std::uint64_t checked_power(std::uint64_t p, unsigned n,
                            std::uint64_t cap = (std::uint64_t{1} << 62));

}  // namespace graphmub

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

#include "graphmub/poly.hpp"

#include "graphmub/errors.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace graphmub {
namespace {

void require_same_modulus(const PolyZp& a, const PolyZp& b) {
  if (a.modulus() != b.modulus()) {
    throw std::invalid_argument("polynomial modulus mismatch");
  }
}

void require_monic_nonconstant(const PolyZp& f, const char* op) {
  if (!f.is_monic() || *f.degree() == 0) {
    throw std::invalid_argument(std::string(op) +
                                ": expected monic polynomial of degree >= 1");
  }
}

}  // namespace

PolyZp::PolyZp(PrimeModulus p, std::vector<std::int64_t> coeffs) : p_(p) {
  coeffs_.reserve(coeffs.size());
  for (auto c : coeffs) coeffs_.push_back(p_.reduce(c));
  normalize();
}

PolyZp PolyZp::constant(PrimeModulus p, std::int64_t c) {
  return PolyZp(p, {c});
}

PolyZp PolyZp::monomial(PrimeModulus p, std::size_t degree, std::int64_t c) {
  std::vector<std::int64_t> v(degree + 1, 0);
  v[degree] = c;
  return PolyZp(p, std::move(v));
}

PolyZp PolyZp::monic_from_low(PrimeModulus p,
                              const std::vector<Residue>& low) {
  PolyZp f(p);
  f.coeffs_.reserve(low.size() + 1);
  for (auto c : low) f.coeffs_.push_back(p.reduce_unsigned(c));
  f.coeffs_.push_back(1);
  return f;
}

void PolyZp::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> PolyZp::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Residue PolyZp::evaluate(Residue x) const {
  Residue acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = p_.add(p_.mul(acc, x), *it);
  }
  return acc;
}

PolyZp PolyZp::scaled(Residue s) const {
  PolyZp out(p_);
  out.coeffs_.reserve(coeffs_.size());
  for (auto c : coeffs_) out.coeffs_.push_back(p_.mul(c, s));
  out.normalize();
  return out;
}

PolyZp PolyZp::monic() const {
  if (is_zero()) return *this;
  return scaled(p_.inv(leading()));
}

PolyZp operator+(const PolyZp& a, const PolyZp& b) {
  require_same_modulus(a, b);
  PolyZp out(a.p_);
  auto const len = std::max(a.coeffs_.size(), b.coeffs_.size());
  out.coeffs_.resize(len);
  for (std::size_t i = 0; i < len; ++i) {
    out.coeffs_[i] = a.p_.add(a.coeff(i), b.coeff(i));
  }
  out.normalize();
  return out;
}

PolyZp operator-(const PolyZp& a, const PolyZp& b) {
  require_same_modulus(a, b);
  PolyZp out(a.p_);
  auto const len = std::max(a.coeffs_.size(), b.coeffs_.size());
  out.coeffs_.resize(len);
  for (std::size_t i = 0; i < len; ++i) {
    out.coeffs_[i] = a.p_.sub(a.coeff(i), b.coeff(i));
  }
  out.normalize();
  return out;
}

PolyZp operator*(const PolyZp& a, const PolyZp& b) {
  require_same_modulus(a, b);
  PolyZp out(a.p_);
  if (a.is_zero() || b.is_zero()) return out;
  out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      auto& slot = out.coeffs_[i + j];
      slot = a.p_.add(slot, a.p_.mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  out.normalize();
  return out;
}

std::string PolyZp::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    auto const c = coeffs_[i];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c;
    os << 'x';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const PolyZp& f) {
  return os << f.to_string();
}

PolyDivision divmod(const PolyZp& a, const PolyZp& b) {
  require_same_modulus(a, b);
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  auto const& p = a.modulus();
  auto const db = *b.degree();
  auto const lead_inv = p.inv(b.leading());

  std::vector<Residue> rem = a.coeffs();
  if (rem.size() <= db) {
    return {PolyZp::zero(p), a};
  }
  std::vector<std::int64_t> quot(rem.size() - db, 0);
  for (std::size_t i = rem.size(); i-- > db;) {
    auto const factor = p.mul(rem[i], lead_inv);
    if (factor == 0) continue;
    quot[i - db] = static_cast<std::int64_t>(factor);
    for (std::size_t j = 0; j <= db; ++j) {
      rem[i - db + j] = p.sub(rem[i - db + j], p.mul(factor, b.coeff(j)));
    }
  }
  std::vector<std::int64_t> rem_signed(rem.begin(), rem.end());
  return {PolyZp(p, std::move(quot)), PolyZp(p, std::move(rem_signed))};
}

PolyZp poly_gcd(const PolyZp& a, const PolyZp& b) {
  require_same_modulus(a, b);
  PolyZp x = a;
  PolyZp y = b;
  while (!y.is_zero()) {
    auto r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

PolyZp mulmod(const PolyZp& a, const PolyZp& b, const PolyZp& m) {
  return divmod(a * b, m).remainder;
}

PolyZp powmod(const PolyZp& base, std::uint64_t exp, const PolyZp& m) {
  auto const& p = base.modulus();
  PolyZp result = divmod(PolyZp::constant(p, 1), m).remainder;
  PolyZp b = divmod(base, m).remainder;
  while (exp > 0) {
    if (exp & 1U) result = mulmod(result, b, m);
    b = mulmod(b, b, m);
    exp >>= 1U;
  }
  return result;
}

bool poly_is_irreducible(const PolyZp& f) {
  require_monic_nonconstant(f, "poly_is_irreducible");
  auto const& p = f.modulus();
  auto const n = *f.degree();
  if (n == 1) return true;

  auto const x = PolyZp::monomial(p, 1);
  // h tracks x^(p^k) mod f.
  PolyZp h = x;
  for (std::size_t k = 1; k <= n; ++k) {
    h = powmod(h, p.value(), f);
    if (k <= n / 2) {
      auto const g = poly_gcd(h - x, f);
      if (!(g.degree() == std::size_t{0})) return false;
    }
  }
  return h == x;
}

bool poly_is_primitive(const PolyZp& f) {
  if (!poly_is_irreducible(f)) {
    throw std::invalid_argument("poly_is_primitive: polynomial is reducible");
  }
  auto const& p = f.modulus();
  auto const n = static_cast<unsigned>(*f.degree());
  // x itself is not a unit modulo f = x.
  if (f.coeff(0) == 0) return false;
  auto const order = checked_power(p.value(), n, 1'000'000'000'000ULL) - 1;
  auto const x = PolyZp::monomial(p, 1);
  auto const one = PolyZp::constant(p, 1);
  if (!(powmod(x, order, f) == one)) return false;
  for (auto q : prime_factors(order)) {
    if (powmod(x, order / q, f) == one) return false;
  }
  return true;
}

PolyZp find_irreducible(const PrimeModulus& p, std::size_t n,
                        bool primitive) {
  if (n == 0) throw std::invalid_argument("find_irreducible: n must be >= 1");
  auto const count = checked_power(p.value(), static_cast<unsigned>(n),
                                   10'000'000'000ULL);
  std::vector<Residue> low(n, 0);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    auto rest = idx;
    for (std::size_t i = 0; i < n; ++i) {
      low[i] = rest % p.value();
      rest /= p.value();
    }
    auto f = PolyZp::monic_from_low(p, low);
    if (!poly_is_irreducible(f)) continue;
    if (primitive && !poly_is_primitive(f)) continue;
    return f;
  }
  throw ConstructionError("no suitable polynomial found");
}

}  // namespace graphmub

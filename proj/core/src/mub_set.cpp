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

#include "graphmub/mub_set.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>

#include "graphmub/errors.hpp"
#include "graphmub/parallel.hpp"

namespace graphmub {
namespace {

constexpr std::uint64_t kMaxSetSize = 1'000'000;

MubSet empty_set_for(const SymRepWitness& w) {
  MubSet s{w.modulus(), w.n(), to_string(w.method), w.f, w.d, {}, false, {}};
  return s;
}

bool search_feasible(const PrimeModulus& p, std::size_t n) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= p.value();
    if (total > 10'000'000) return false;
  }
  return true;
}

MatZp combination(const std::vector<MatZp>& powers, std::size_t index,
                  const PrimeModulus& p) {
  auto const n = powers.front().rows();
  MatZp acc = MatZp::zero(p, n);
  for (auto const& q : powers) {
    auto const a = index % p.value();
    index /= p.value();
    if (a != 0) acc = acc + q.scaled(a);
  }
  return acc;
}

std::vector<MatZp> sorted(std::vector<MatZp> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

std::size_t MubSet::dimension() const {
  return checked_power(p.value(), static_cast<unsigned>(n));
}

MubSet generate_rep_set(const SymRepWitness& w, std::size_t threads) {
  auto const& p = w.modulus();
  auto const total = checked_power(p.value(), static_cast<unsigned>(w.n()), kMaxSetSize);
  auto const powers = fundamental_graphs(w);
  auto s = empty_set_for(w);
  s.matrices.assign(total, MatZp::zero(p, w.n()));
  parallel_for(total, threads, [&](std::size_t begin, std::size_t end) {
    for (auto i = begin; i < end; ++i) s.matrices[i] = combination(powers, i, p);
  });
  s.field_closure = true;
  return s;
}

MubSet generate_power_set(const SymRepWitness& w) {
  if (!poly_is_primitive(w.f)) {
    throw std::invalid_argument("generate_power_set: char poly is not primitive");
  }
  auto const& p = w.modulus();
  auto const total = checked_power(p.value(), static_cast<unsigned>(w.n()), kMaxSetSize);
  auto s = empty_set_for(w);
  s.matrices.reserve(total);
  s.matrices.push_back(MatZp::zero(p, w.n()));
  auto power = MatZp::identity(p, w.n());
  for (std::size_t i = 0; i + 1 < total; ++i) {
    s.matrices.push_back(power);
    power = power * w.q;
  }
  if (sorted(s.matrices) != sorted(generate_rep_set(w).matrices)) {
    throw std::logic_error("generate_power_set: power set differs from span");
  }
  s.field_closure = true;
  return s;
}

std::vector<MatZp> fundamental_graphs(const SymRepWitness& w) {
  std::vector<MatZp> out;
  out.reserve(w.n());
  auto power = MatZp::identity(w.modulus(), w.n());
  for (std::size_t i = 0; i < w.n(); ++i) {
    out.push_back(power);
    power = power * w.q;
  }
  return out;
}

Lemma1Result verify_lemma1(const MubSet& s, const Lemma1Options& options) {
  Lemma1Result result;
  auto const count = s.matrices.size();
  if (count < 2) return result;

  if (s.field_closure && !options.force_pairwise) {
    auto const zero = MatZp::zero(s.p, s.n);
    auto const zero_it = std::find(s.matrices.begin(), s.matrices.end(), zero);
    if (zero_it != s.matrices.end()) {
      auto const zero_index = static_cast<std::size_t>(zero_it - s.matrices.begin());
      std::atomic<std::size_t> bad{std::numeric_limits<std::size_t>::max()};
      parallel_for(count, options.threads, [&](std::size_t begin, std::size_t end) {
        for (auto i = begin; i < end; ++i) {
          if (i == zero_index || mat_det(s.matrices[i]) != 0) continue;
          auto seen = bad.load();
          while (i < seen && !bad.compare_exchange_weak(seen, i)) {
          }
          return;
        }
      });
      result.determinants = count - 1;
      if (bad.load() != std::numeric_limits<std::size_t>::max()) {
        result.pass = false;
        result.failing_pair = std::minmax(bad.load(), zero_index);
      }
      return result;
    }
  }

  std::atomic<std::size_t> bad_row{std::numeric_limits<std::size_t>::max()};
  std::vector<std::size_t> bad_col(count, 0);
  parallel_for(count, options.threads, [&](std::size_t begin, std::size_t end) {
    for (auto r = begin; r < end && r < bad_row.load(); ++r) {
      for (auto c = r + 1; c < count; ++c) {
        if (mat_det(s.matrices[r] - s.matrices[c]) != 0) continue;
        bad_col[r] = c;
        auto seen = bad_row.load();
        while (r < seen && !bad_row.compare_exchange_weak(seen, r)) {
        }
        return;
      }
    }
  });
  result.determinants = count * (count - 1) / 2;
  if (bad_row.load() != std::numeric_limits<std::size_t>::max()) {
    result.pass = false;
    result.failing_pair = std::make_pair(bad_row.load(), bad_col[bad_row.load()]);
  }
  return result;
}

MubSet shift_set(const MubSet& s, const MatZp& m) {
  if (m.modulus() != s.p || m.rows() != s.n || !m.is_square()) {
    throw std::invalid_argument("shift_set: shape or modulus mismatch");
  }
  if (!m.is_symmetric()) throw std::invalid_argument("shift_set: shift not symmetric");
  MubSet out = s;
  for (auto& a : out.matrices) a = a + m;
  out.field_closure = false;
  out.shifts.push_back(m);
  return out;
}

std::string to_string(Method m) {
  switch (m) {
    case Method::kTridiag:
      return "tridiag";
    case Method::kCompanion:
      return "companion";
    case Method::kAuto:
      break;
  }
  return "auto";
}

Method parse_method(const std::string& text) {
  if (text == "auto") return Method::kAuto;
  if (text == "tridiag") return Method::kTridiag;
  if (text == "companion") return Method::kCompanion;
  throw std::invalid_argument("unknown method: " + text);
}

SymRepWitness find_witness(const PrimeModulus& p, std::size_t n,
                           const MubSetOptions& options) {
  if (n == 0) throw std::invalid_argument("n must be >= 1");
  auto const requirement = options.primitive_required ? TridiagRequirement::kPrimitive
                                                      : TridiagRequirement::kIrreducible;
  auto check_poly = [&](const PolyZp& f) {
    if (!poly_is_irreducible(f)) {
      throw ConstructionError("characteristic polynomial " + f.to_string() +
                              " is reducible");
    }
    if (options.primitive_required && !poly_is_primitive(f)) {
      throw ConstructionError("characteristic polynomial " + f.to_string() +
                              " is not primitive");
    }
  };

  if (options.d) {
    if (options.method == Method::kCompanion) {
      throw std::invalid_argument("--d requires the tridiagonal method");
    }
    if (options.d->size() != n) throw std::invalid_argument("d must have n entries");
    auto w = witness_from_tridiag(TridiagSpec{p, *options.d});
    check_poly(w.f);
    if (options.polynomial && *options.polynomial != w.f) {
      throw ConstructionError("d does not realize the requested polynomial");
    }
    return w;
  }

  if (options.polynomial) {
    auto const& f = *options.polynomial;
    if (f.modulus() != p) throw std::invalid_argument("polynomial modulus mismatch");
    if (!f.is_monic() || *f.degree() != n) {
      throw std::invalid_argument("polynomial must be monic of degree n");
    }
    check_poly(f);
    if (options.method != Method::kCompanion) {
      if (search_feasible(p, n)) {
        if (auto spec = tridiag_search(p, n, f, requirement, options.threads)) {
          return witness_from_tridiag(*spec);
        }
      }
      if (options.method == Method::kTridiag) {
        throw ConstructionError("no tridiagonal matrix realizes " + f.to_string());
      }
    }
    return symmetrize_companion(f);
  }

  if (options.method == Method::kTridiag ||
      (options.method == Method::kAuto && search_feasible(p, n))) {
    if (auto spec = tridiag_search(p, n, std::nullopt, requirement, options.threads)) {
      return witness_from_tridiag(*spec);
    }
    if (options.method == Method::kTridiag) {
      throw ConstructionError("no tridiagonal matrix with irreducible char poly");
    }
    return symmetrize_companion(find_irreducible(p, n, true));
  }
  try {
    return symmetrize_companion(find_irreducible(p, n, options.primitive_required));
  } catch (const PrimitiveRequired&) {
    return symmetrize_companion(find_irreducible(p, n, true));
  }
}

MubSet mub_set(const PrimeModulus& p, std::size_t n, const MubSetOptions& options) {
  auto const w = find_witness(p, n, options);
  auto s = generate_rep_set(w, options.threads);
  auto const check = verify_lemma1(s, {false, options.threads});
  if (!check.pass) {
    throw std::logic_error("mub_set: generated set violates the determinant condition");
  }
  return s;
}

std::size_t coefficient_index(const std::vector<Residue>& a, const PrimeModulus& p) {
  std::size_t index = 0;
  for (std::size_t i = a.size(); i-- > 0;) index = index * p.value() + p.reduce_unsigned(a[i]);
  return index;
}

std::vector<Residue> coefficient_vector(std::size_t index, std::size_t n,
                                        const PrimeModulus& p) {
  std::vector<Residue> a(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = index % p.value();
    index /= p.value();
  }
  return a;
}

}  // namespace graphmub

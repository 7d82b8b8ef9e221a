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

#include "graphmub/symrep.hpp"

#include <atomic>
#include <limits>
#include <algorithm>
#include <stdexcept>

#include "graphmub/errors.hpp"
#include "graphmub/parallel.hpp"

namespace graphmub {
namespace {

void require_monic_irreducible(const PolyZp& f, const char* op) {
  if (!f.is_monic() || *f.degree() == 0) {
    throw std::invalid_argument(std::string(op) +
                                ": expected monic polynomial of degree >= 1");
  }
  if (!poly_is_irreducible(f)) {
    throw std::invalid_argument(std::string(op) + ": polynomial is reducible");
  }
}

// Working state for a congruence reduction: m tracks E m E^T and pm tracks
// E P for every elementary step E.
class Reducer {
 public:
  explicit Reducer(const MatZp& b)
      : p_(b.modulus()),
        n_(b.rows()),
        m_(b.to_rows()),
        pm_(MatZp::identity(b.modulus(), b.rows()).to_rows()) {}

  Residue at(std::size_t r, std::size_t c) const { return m_[r][c]; }
  std::size_t n() const { return n_; }
  const PrimeModulus& p() const { return p_; }

  void swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(m_[i], m_[j]);
    for (auto& row : m_) std::swap(row[i], row[j]);
    std::swap(pm_[i], pm_[j]);
  }

  // row j += a * row i (and the matching column operation).
  void add_multiple(std::size_t i, std::size_t j, Residue a) {
    if (a == 0) return;
    for (std::size_t c = 0; c < n_; ++c) {
      m_[j][c] = p_.add(m_[j][c], p_.mul(a, m_[i][c]));
      pm_[j][c] = p_.add(pm_[j][c], p_.mul(a, pm_[i][c]));
    }
    for (std::size_t r = 0; r < n_; ++r) {
      m_[r][j] = p_.add(m_[r][j], p_.mul(a, m_[r][i]));
    }
  }

  void scale(std::size_t i, Residue s) {
    for (std::size_t c = 0; c < n_; ++c) {
      m_[i][c] = p_.mul(m_[i][c], s);
      pm_[i][c] = p_.mul(pm_[i][c], s);
    }
    for (std::size_t r = 0; r < n_; ++r) m_[r][i] = p_.mul(m_[r][i], s);
  }

  // Applies a general block operation e (rows of e act on rows idx).
  void block(const std::vector<std::size_t>& idx,
             const std::vector<std::vector<Residue>>& e) {
    auto const k = idx.size();
    auto mix_rows = [&](std::vector<std::vector<Residue>>& target) {
      std::vector<std::vector<Residue>> fresh(k, std::vector<Residue>(n_, 0));
      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
          if (e[a][b] == 0) continue;
          for (std::size_t c = 0; c < n_; ++c) {
            fresh[a][c] = p_.add(fresh[a][c], p_.mul(e[a][b], target[idx[b]][c]));
          }
        }
      }
      for (std::size_t a = 0; a < k; ++a) target[idx[a]] = std::move(fresh[a]);
    };
    mix_rows(m_);
    mix_rows(pm_);
    for (std::size_t r = 0; r < n_; ++r) {
      std::vector<Residue> fresh(k, 0);
      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
          fresh[a] = p_.add(fresh[a], p_.mul(e[a][b], m_[r][idx[b]]));
        }
      }
      for (std::size_t a = 0; a < k; ++a) m_[r][idx[a]] = fresh[a];
    }
  }

  // Clears column k below the diagonal using the pivot at (k, k).
  void eliminate_below(std::size_t k) {
    auto const pivot_inv = p_.inv(m_[k][k]);
    for (std::size_t j = k + 1; j < n_; ++j) {
      if (m_[j][k] == 0) continue;
      add_multiple(k, j, p_.neg(p_.mul(m_[j][k], pivot_inv)));
    }
  }

  MatZp transform() const {
    MatZp out(p_, n_);
    for (std::size_t r = 0; r < n_; ++r) {
      for (std::size_t c = 0; c < n_; ++c) {
        out.set(r, c, static_cast<std::int64_t>(pm_[r][c]));
      }
    }
    return out;
  }

 private:
  PrimeModulus p_;
  std::size_t n_;
  std::vector<std::vector<Residue>> m_;
  std::vector<std::vector<Residue>> pm_;
};

void require_symmetric_nonsingular(const MatZp& b, const char* op) {
  if (!b.is_symmetric()) {
    throw std::invalid_argument(std::string(op) + ": matrix is not symmetric");
  }
  if (mat_det(b) == 0) {
    throw std::invalid_argument(std::string(op) + ": matrix is singular");
  }
}

void check_identity(const MatZp& pmat, const MatZp& b, const char* op) {
  if (congruence(pmat, b) != MatZp::identity(b.modulus(), b.rows())) {
    throw std::logic_error(std::string(op) + ": reduction did not reach 1");
  }
}

MatZp reversal(const PrimeModulus& p, std::size_t n) {
  MatZp j(p, n);
  for (std::size_t i = 0; i < n; ++i) j.set(i, n - 1 - i, 1);
  return j;
}

MatZp reduce_podd_forward(const MatZp& b) {
  Reducer r(b);
  auto const& p = r.p();
  auto const n = r.n();

  for (std::size_t k = 0; k < n; ++k) {
    if (r.at(k, k) == 0) {
      for (std::size_t j = k + 1; j < n; ++j) {
        if (r.at(j, j) != 0) {
          r.swap(k, j);
          break;
        }
      }
    }
    if (r.at(k, k) == 0) {
      // Empty diagonal from here on: bring a partner to k + 1 and split the
      // 2x2 block [[0,d],[d,0]] into diag(2d, -2d).
      std::size_t j = k + 1;
      while (j < n && r.at(j, k) == 0) ++j;
      if (j == n) throw std::invalid_argument("congruence_reduce_podd: singular");
      r.swap(k + 1, j);
      r.block({k, k + 1}, {{1, 1}, {1, p.neg(1)}});
    }
    r.eliminate_below(k);
  }

  auto const q_hat = find_nonresidue(p);
  std::vector<std::size_t> nonresidues;
  for (std::size_t i = 0; i < n; ++i) {
    auto const a = r.at(i, i);
    if (qr_test(a, p)) {
      r.scale(i, p.inv(sqrt_mod(a, p)));
    } else {
      r.scale(i, p.inv(sqrt_mod(p.mul(a, p.inv(q_hat)), p)));
      nonresidues.push_back(i);
    }
  }
  if (nonresidues.size() % 2 != 0) {
    throw std::invalid_argument(
        "congruence_reduce_podd: determinant is a non-residue");
  }
  if (!nonresidues.empty()) {
    Residue b_phi = 1;
    while (qr_test(p.add(1, p.mul(b_phi, b_phi)), p)) ++b_phi;
    // q_hat * (1 + b^2) is a product of two non-residues.
    auto const s_inv =
        p.inv(sqrt_mod(p.mul(q_hat, p.add(1, p.mul(b_phi, b_phi))), p));
    for (std::size_t t = 0; t < nonresidues.size(); t += 2) {
      auto const i = nonresidues[t];
      auto const j = nonresidues[t + 1];
      r.block({i, j}, {{1, b_phi}, {p.neg(b_phi), 1}});
      r.scale(i, s_inv);
      r.scale(j, s_inv);
    }
  }
  return r.transform();
}

}  // namespace

MatZp TridiagSpec::matrix() const {
  if (d.empty()) throw std::invalid_argument("TridiagSpec: empty diagonal");
  MatZp q(p, d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    q.set(i, i, static_cast<std::int64_t>(p.reduce_unsigned(d[i])));
    if (i + 1 < d.size()) {
      q.set(i, i + 1, 1);
      q.set(i + 1, i, 1);
    }
  }
  return q;
}

std::string to_string(SymRepMethod m) {
  return m == SymRepMethod::kTridiagonal ? "tridiagonal"
                                         : "companion-symmetrized";
}

std::string describe(const GChoice& g) {
  if (auto const* s = std::get_if<Residue>(&g)) return std::to_string(*s);
  return "C";
}

void validate_witness(const SymRepWitness& w) {
  if (!w.q.is_symmetric()) throw std::invalid_argument("witness: Q not symmetric");
  if (char_poly(w.q) != w.f) {
    throw std::invalid_argument("witness: char_poly(Q) != f");
  }
  if (w.method == SymRepMethod::kCompanionSymmetrized && w.c && w.p_mat) {
    if (*w.p_mat * *w.c * mat_inverse(*w.p_mat) != w.q) {
      throw std::invalid_argument("witness: P C P^-1 != Q");
    }
  }
}

SymRepWitness witness_from_tridiag(const TridiagSpec& spec) {
  auto q = spec.matrix();
  auto f = char_poly(q);
  SymRepWitness w{f, q, SymRepMethod::kTridiagonal, spec.d, {}, {}, {}, {}};
  for (auto& v : *w.d) v = spec.p.reduce_unsigned(v);
  return w;
}

MatZp build_B_p2(const PolyZp& f) {
  auto const& p = f.modulus();
  if (!p.is_two()) throw std::invalid_argument("build_B_p2: requires p = 2");
  require_monic_irreducible(f, "build_B_p2");
  auto const n = *f.degree();
  // b[i] for i in [1, n-1].
  std::vector<Residue> b(n, 0);
  if (n > 1) b[1] = f.coeff(0);
  for (std::size_t i = 2; i < n; ++i) {
    Residue acc = 0;
    for (std::size_t k = 1; k < i; ++k) {
      acc = p.add(acc, p.mul(f.coeff(n - i + k), b[k]));
    }
    b[i] = acc;
  }
  MatZp out(p, n);
  out.set(0, 0, 1);
  // 1-based R, S >= 2 with R + S >= n + 2 hold b_{R+S-n-1}.
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t s = 1; s < n; ++s) {
      if (r + s + 2 >= n + 2) {
        out.set(r, s, static_cast<std::int64_t>(b[r + s + 1 - n]));
      }
    }
  }
  return out;
}

MatZp build_B0_podd(const PolyZp& f) {
  auto const& p = f.modulus();
  if (p.is_two()) throw std::invalid_argument("build_B0_podd: requires odd p");
  require_monic_irreducible(f, "build_B0_podd");
  auto const n = *f.degree();
  std::vector<Residue> b(n, 0);
  b[0] = 1;
  for (std::size_t i = 1; i < n; ++i) {
    Residue acc = 0;
    for (std::size_t k = 0; k < i; ++k) {
      acc = p.add(acc, p.mul(f.coeff(n - i + k), b[k]));
    }
    b[i] = p.neg(acc);
  }
  MatZp out(p, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i + j >= n - 1) out.set(i, j, static_cast<std::int64_t>(b[i + j - (n - 1)]));
    }
  }
  return out;
}

GChoice choose_g(const PolyZp& f, const MatZp& c) {
  auto const& p = f.modulus();
  if (p.is_two()) throw std::invalid_argument("choose_g: requires odd p");
  auto const n = *f.degree();
  auto const r = n % 4;
  if (r == 0 || r == 1 || qr_test(p.neg(1), p)) return Residue{1};
  if (r == 3) return find_nonresidue(p);
  if (!poly_is_primitive(f)) throw PrimitiveRequired();
  return c;
}

MatZp congruence_reduce_p2(const MatZp& b) {
  if (!b.modulus().is_two()) {
    throw std::invalid_argument("congruence_reduce_p2: requires p = 2");
  }
  require_symmetric_nonsingular(b, "congruence_reduce_p2");
  Reducer r(b);
  auto const n = r.n();
  std::size_t k = 0;
  while (k < n) {
    if (r.at(k, k) == 0) {
      for (std::size_t j = k + 1; j < n; ++j) {
        if (r.at(j, j) == 1) {
          r.swap(k, j);
          break;
        }
      }
    }
    if (r.at(k, k) == 1) {
      r.eliminate_below(k);
      ++k;
      continue;
    }
    // Remaining diagonal is empty. Rows before k already form an identity
    // block, so (k-1, k, k+1) can be turned into diag(1,1,1).
    if (k == 0) {
      throw std::invalid_argument("congruence_reduce_p2: diagonal is all zero");
    }
    std::size_t j = k + 1;
    while (j < n && r.at(j, k) == 0) ++j;
    if (j == n) throw std::invalid_argument("congruence_reduce_p2: singular");
    r.swap(k + 1, j);
    r.block({k - 1, k, k + 1}, {{1, 1, 0}, {1, 0, 1}, {1, 1, 1}});
    r.eliminate_below(k - 1);
    r.eliminate_below(k);
    r.eliminate_below(k + 1);
    k += 2;
  }
  auto pmat = r.transform();
  check_identity(pmat, b, "congruence_reduce_p2");
  return pmat;
}

MatZp congruence_reduce_podd(const MatZp& b) {
  auto const& p = b.modulus();
  if (p.is_two()) {
    throw std::invalid_argument("congruence_reduce_podd: requires odd p");
  }
  require_symmetric_nonsingular(b, "congruence_reduce_podd");
  if (!qr_test(mat_det(b), p)) {
    throw std::invalid_argument(
        "congruence_reduce_podd: determinant is a non-residue");
  }
  // Diagonal input only needs the rescaling pass, so no index is moved.
  bool diagonal = true;
  for (std::size_t r = 0; r < b.rows() && diagonal; ++r)
    for (std::size_t c = 0; c < b.cols(); ++c)
      if (r != c && b(r, c) != 0) {
        diagonal = false;
        break;
      }
  if (diagonal) {
    auto pmat = reduce_podd_forward(b);
    check_identity(pmat, b, "congruence_reduce_podd");
    return pmat;
  }
  // Pivoting runs on the index-reversed matrix, i.e. from the last row and
  // column towards the first.
  auto const j = reversal(p, b.rows());
  auto pmat = reduce_podd_forward(j * b * j) * j;
  check_identity(pmat, b, "congruence_reduce_podd");
  return pmat;
}

SymRepWitness symmetrize_companion(const PolyZp& f) {
  require_monic_irreducible(f, "symmetrize_companion");
  auto const& p = f.modulus();
  auto c = companion_matrix(f);
  SymRepWitness w{f, c, SymRepMethod::kCompanionSymmetrized, {}, c, {}, {}, {}};
  if (*f.degree() == 1) {
    w.b0 = MatZp::identity(p, 1);
    if (!p.is_two()) w.g = Residue{1};
    w.p_mat = MatZp::identity(p, 1);
    return w;
  }
  MatZp pmat = MatZp::identity(p, 1);
  if (p.is_two()) {
    auto b = build_B_p2(f);
    pmat = congruence_reduce_p2(b);
    w.b0 = b;
  } else {
    auto b0 = build_B0_podd(f);
    auto g = choose_g(f, c);
    auto b = std::holds_alternative<Residue>(g)
                 ? b0.scaled(std::get<Residue>(g))
                 : std::get<MatZp>(g) * b0;
    pmat = congruence_reduce_podd(b);
    w.b0 = b0;
    w.g = g;
  }
  w.q = pmat * c * mat_inverse(pmat);
  w.p_mat = pmat;
  validate_witness(w);
  return w;
}

PolyZp tridiag_char_poly(const TridiagSpec& spec) {
  auto const& p = spec.p;
  auto const n = spec.d.size();
  if (n == 0) throw std::invalid_argument("tridiag_char_poly: empty diagonal");
  auto prev = PolyZp::zero(p);        // Delta_{k-2}
  auto cur = PolyZp::constant(p, 1);  // Delta_{k-1}
  for (std::size_t k = 1; k <= n; ++k) {
    auto const dk = static_cast<std::int64_t>(p.reduce_unsigned(spec.d[n - k]));
    auto next = PolyZp(p, {-dk, 1}) * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::optional<TridiagSpec> tridiag_search(const PrimeModulus& p, std::size_t n,
                                          const std::optional<PolyZp>& target,
                                          TridiagRequirement requirement,
                                          std::size_t threads) {
  if (n == 0) throw std::invalid_argument("tridiag_search: n must be >= 1");
  auto const total = checked_power(p.value(), static_cast<unsigned>(n), 10'000'000);
  if (target && target->modulus() != p) {
    throw std::invalid_argument("tridiag_search: modulus mismatch");
  }
  if (target) {
    if (!poly_is_irreducible(*target)) return std::nullopt;
    if (requirement == TridiagRequirement::kPrimitive && !poly_is_primitive(*target)) {
      return std::nullopt;
    }
  }
  auto decode = [&](std::uint64_t index) {
    TridiagSpec spec{p, std::vector<Residue>(n, 0)};
    for (std::size_t i = 0; i < n; ++i) {
      spec.d[i] = index % p.value();
      index /= p.value();
    }
    return spec;
  };
  auto accept = [&](const TridiagSpec& spec) {
    auto f = tridiag_char_poly(spec);
    if (target) return f == *target;
    if (!poly_is_irreducible(f)) return false;
    return requirement == TridiagRequirement::kIrreducible || poly_is_primitive(f);
  };
  std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
  parallel_for(total, threads, [&](std::size_t begin, std::size_t end) {
    for (std::uint64_t i = begin; i < end && i < best.load(); ++i) {
      if (accept(decode(i))) {
        auto seen = best.load();
        while (i < seen && !best.compare_exchange_weak(seen, i)) {
        }
        return;
      }
    }
  });
  if (best.load() == std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return decode(best.load());
}

std::vector<Residue> newton_power_sums(const PolyZp& f) {
  if (!f.is_monic()) throw std::invalid_argument("newton_power_sums: f not monic");
  auto const& p = f.modulus();
  auto const n = *f.degree();
  std::vector<Residue> t(n + 1, 0);
  for (std::size_t k = 1; k <= n; ++k) {
    Residue acc = p.mul(p.reduce_unsigned(k), f.coeff(n - k));
    for (std::size_t i = 1; i < k; ++i) {
      acc = p.add(acc, p.mul(f.coeff(n - k + i), t[i]));
    }
    t[k] = p.neg(acc);
  }
  t.erase(t.begin());
  return t;
}

std::vector<TridiagSpec> newton_identities_solve(const PolyZp& f) {
  if (!f.is_monic() || *f.degree() == 0) {
    throw std::invalid_argument("newton_identities_solve: expected monic f");
  }
  auto const n = *f.degree();
  if (n > 4) {
    throw Unsupported("newton_identities_solve: degree > 4 is not supported");
  }
  auto const& p = f.modulus();
  auto const t = newton_power_sums(f);
  auto const free_count =
      checked_power(p.value(), static_cast<unsigned>(n - 1), 10'000'000);
  std::vector<TridiagSpec> out;
  for (std::uint64_t index = 0; index < free_count; ++index) {
    // d_1..d_{n-1} from the index; d_n fixed by tr(Q) = t_1.
    TridiagSpec spec{p, std::vector<Residue>(n, 0)};
    auto rest = index;
    Residue partial = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      spec.d[i] = rest % p.value();
      rest /= p.value();
      partial = p.add(partial, spec.d[i]);
    }
    spec.d[n - 1] = p.sub(t[0], partial);
    auto const q = spec.matrix();
    auto power = q;
    bool ok = true;
    for (std::size_t k = 2; k <= n && ok; ++k) {
      power = power * q;
      ok = power.trace() == t[k - 1];
    }
    // Traces pin down f only when p > n; the direct check covers p <= n.
    if (ok && tridiag_char_poly(spec) == f) out.push_back(std::move(spec));
  }
  // Index order with d_n varying slowest matches tridiag_search only up to
  // the last digit; sort into the shared order.
  auto key = [&](const TridiagSpec& s) {
    std::uint64_t k = 0;
    for (std::size_t i = n; i-- > 0;) k = k * p.value() + s.d[i];
    return k;
  };
  std::sort(out.begin(), out.end(),
            [&](const TridiagSpec& a, const TridiagSpec& b) { return key(a) < key(b); });
  return out;
}

}  // namespace graphmub

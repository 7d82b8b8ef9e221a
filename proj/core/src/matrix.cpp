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

#include "graphmub/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace graphmub {
namespace {

void require_same_shape(const MatZp& a, const MatZp& b) {
  if (a.modulus() != b.modulus()) {
    throw std::invalid_argument("matrix modulus mismatch");
  }
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("matrix shape mismatch");
  }
}

void require_square(const MatZp& m, const char* op) {
  if (!m.is_square()) {
    throw std::invalid_argument(std::string(op) + ": matrix is not square");
  }
}

// Row-echelon reduction in place. Returns the pivot count; det_out (when not
// null) receives the determinant of a square input.
std::size_t eliminate(std::vector<Residue>& a, std::size_t rows,
                      std::size_t cols, const PrimeModulus& p,
                      Residue* det_out) {
  Residue det = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot * cols + col] == 0) ++pivot;
    if (pivot == rows) {
      det = 0;
      continue;
    }
    if (pivot != rank) {
      for (std::size_t c = 0; c < cols; ++c) {
        std::swap(a[pivot * cols + c], a[rank * cols + c]);
      }
      det = p.neg(det);
    }
    auto const pv = a[rank * cols + col];
    det = p.mul(det, pv);
    auto const pinv = p.inv(pv);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      auto const factor = p.mul(a[r * cols + col], pinv);
      if (factor == 0) continue;
      for (std::size_t c = col; c < cols; ++c) {
        a[r * cols + c] = p.sub(a[r * cols + c], p.mul(factor, a[rank * cols + c]));
      }
    }
    ++rank;
  }
  if (det_out != nullptr) *det_out = rank == rows ? det : 0;
  return rank;
}

}  // namespace

MatZp::MatZp(PrimeModulus p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  if (rows == 0 || cols == 0) {
    throw std::invalid_argument("matrix dimensions must be >= 1");
  }
}

MatZp::MatZp(PrimeModulus p,
             std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : MatZp(p, std::vector<std::vector<std::int64_t>>(rows.begin(),
                                                      rows.end())) {}

MatZp::MatZp(PrimeModulus p, const std::vector<std::vector<std::int64_t>>& rows)
    : p_(p), rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()) {
  if (rows_ == 0 || cols_ == 0) {
    throw std::invalid_argument("matrix dimensions must be >= 1");
  }
  data_.reserve(rows_ * cols_);
  for (auto const& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix rows");
    for (auto v : r) data_.push_back(p_.reduce(v));
  }
}

MatZp MatZp::identity(PrimeModulus p, std::size_t n) {
  MatZp m(p, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

MatZp MatZp::diagonal(PrimeModulus p, const std::vector<Residue>& diag) {
  MatZp m(p, diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) {
    m.data_[i * diag.size() + i] = p.reduce_unsigned(diag[i]);
  }
  return m;
}

std::size_t MatZp::dim() const {
  require_square(*this, "dim");
  return rows_;
}

bool MatZp::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r + 1; c < cols_; ++c) {
      if ((*this)(r, c) != (*this)(c, r)) return false;
    }
  }
  return true;
}

bool MatZp::is_zero() const {
  for (auto v : data_) {
    if (v != 0) return false;
  }
  return true;
}

MatZp MatZp::transpose() const {
  MatZp t(p_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = (*this)(r, c);
  }
  return t;
}

MatZp MatZp::scaled(Residue s) const {
  MatZp out = *this;
  s = p_.reduce_unsigned(s);
  for (auto& v : out.data_) v = p_.mul(v, s);
  return out;
}

MatZp MatZp::power(std::uint64_t exp) const {
  require_square(*this, "power");
  MatZp result = identity(p_, rows_);
  MatZp base = *this;
  while (exp > 0) {
    if (exp & 1U) result = result * base;
    exp >>= 1U;
    if (exp > 0) base = base * base;
  }
  return result;
}

Residue MatZp::trace() const {
  require_square(*this, "trace");
  Residue t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t = p_.add(t, (*this)(i, i));
  return t;
}

MatZp MatZp::submatrix(std::span<const std::size_t> row_idx,
                       std::span<const std::size_t> col_idx) const {
  MatZp out(p_, row_idx.size(), col_idx.size());
  for (std::size_t r = 0; r < row_idx.size(); ++r) {
    for (std::size_t c = 0; c < col_idx.size(); ++c) {
      out.data_[r * col_idx.size() + c] = (*this)(row_idx[r], col_idx[c]);
    }
  }
  return out;
}

std::vector<std::vector<Residue>> MatZp::to_rows() const {
  std::vector<std::vector<Residue>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    out[r].assign(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }
  return out;
}

MatZp operator+(const MatZp& a, const MatZp& b) {
  require_same_shape(a, b);
  MatZp out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) {
    out.data_[i] = a.p_.add(a.data_[i], b.data_[i]);
  }
  return out;
}

MatZp operator-(const MatZp& a, const MatZp& b) {
  require_same_shape(a, b);
  MatZp out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) {
    out.data_[i] = a.p_.sub(a.data_[i], b.data_[i]);
  }
  return out;
}

MatZp operator*(const MatZp& a, const MatZp& b) {
  if (a.p_ != b.p_) throw std::invalid_argument("matrix modulus mismatch");
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  MatZp out(a.p_, a.rows_, b.cols_);
  auto const pv = a.p_.value();
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      auto const av = a(r, k);
      if (av == 0) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) {
        auto& slot = out.data_[r * b.cols_ + c];
        slot = (slot + av * b(k, c)) % pv;
      }
    }
  }
  return out;
}

std::string MatZp::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r != 0) os << ',';
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c != 0) os << ',';
      os << (*this)(r, c);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MatZp& m) {
  return os << m.to_string();
}

Residue mat_det(const MatZp& m) {
  require_square(m, "mat_det");
  std::vector<Residue> a(m.data().begin(), m.data().end());
  Residue det = 0;
  eliminate(a, m.rows(), m.cols(), m.modulus(), &det);
  return det;
}

std::size_t mat_rank(const MatZp& m) {
  std::vector<Residue> a(m.data().begin(), m.data().end());
  return eliminate(a, m.rows(), m.cols(), m.modulus(), nullptr);
}

MatZp mat_inverse(const MatZp& m) {
  require_square(m, "mat_inverse");
  auto const& p = m.modulus();
  auto const n = m.rows();
  auto const w = 2 * n;
  // Gauss-Jordan on [m | 1].
  std::vector<Residue> a(n * w, 0);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a[r * w + c] = m(r, c);
    a[r * w + n + r] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot * w + col] == 0) ++pivot;
    if (pivot == n) throw std::domain_error("mat_inverse: singular matrix");
    if (pivot != col) {
      for (std::size_t c = 0; c < w; ++c) std::swap(a[pivot * w + c], a[col * w + c]);
    }
    auto const pinv = p.inv(a[col * w + col]);
    for (std::size_t c = 0; c < w; ++c) a[col * w + c] = p.mul(a[col * w + c], pinv);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      auto const factor = a[r * w + col];
      if (factor == 0) continue;
      for (std::size_t c = 0; c < w; ++c) {
        a[r * w + c] = p.sub(a[r * w + c], p.mul(factor, a[col * w + c]));
      }
    }
  }
  MatZp inv(p, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      inv.set(r, c, static_cast<std::int64_t>(a[r * w + n + c]));
    }
  }
  return inv;
}

PolyZp char_poly(const MatZp& m) {
  require_square(m, "char_poly");
  auto const& p = m.modulus();
  auto const n = m.rows();

  // poly holds det(x*1 - A_r) for the leading r x r block, highest degree
  // first. Each step multiplies by the lower-triangular Toeplitz matrix built
  // from (1, -a, -R S, -R A S, ..., -R A^{r-1} S).
  std::vector<Residue> poly{1, p.neg(m(0, 0))};
  for (std::size_t r = 1; r < n; ++r) {
    std::vector<Residue> toeplitz(r + 2, 0);
    toeplitz[0] = 1;
    toeplitz[1] = p.neg(m(r, r));
    // v = A_r^k * S, starting from S = column r above the diagonal.
    std::vector<Residue> v(r);
    for (std::size_t i = 0; i < r; ++i) v[i] = m(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      Residue dot = 0;
      for (std::size_t i = 0; i < r; ++i) dot = p.add(dot, p.mul(m(r, i), v[i]));
      toeplitz[k + 2] = p.neg(dot);
      if (k + 1 == r) break;
      std::vector<Residue> next(r, 0);
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
          next[i] = p.add(next[i], p.mul(m(i, j), v[j]));
        }
      }
      v = std::move(next);
    }
    std::vector<Residue> next_poly(r + 2, 0);
    for (std::size_t i = 0; i < r + 2; ++i) {
      for (std::size_t j = 0; j <= i && j < poly.size(); ++j) {
        next_poly[i] = p.add(next_poly[i], p.mul(toeplitz[i - j], poly[j]));
      }
    }
    poly = std::move(next_poly);
  }
  std::vector<std::int64_t> ascending(poly.rbegin(), poly.rend());
  return PolyZp(p, std::move(ascending));
}

MatZp companion_matrix(const PolyZp& f) {
  if (!f.is_monic() || *f.degree() == 0) {
    throw std::invalid_argument(
        "companion_matrix: expected monic polynomial of degree >= 1");
  }
  auto const& p = f.modulus();
  auto const n = *f.degree();
  MatZp c(p, n);
  for (std::size_t i = 0; i + 1 < n; ++i) c.set(i, i + 1, 1);
  for (std::size_t j = 0; j < n; ++j) {
    c.set(n - 1, j, static_cast<std::int64_t>(p.neg(f.coeff(j))));
  }
  return c;
}

MatZp congruence(const MatZp& pmat, const MatZp& b) {
  if (!pmat.is_square() || !b.is_square() || pmat.rows() != b.rows()) {
    throw std::invalid_argument("congruence: shape mismatch");
  }
  return pmat * b * pmat.transpose();
}

MatZp evaluate(const PolyZp& f, const MatZp& m) {
  require_square(m, "evaluate");
  auto const& p = m.modulus();
  MatZp acc = MatZp::zero(p, m.rows());
  auto const ident = MatZp::identity(p, m.rows());
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
    acc = acc * m + ident.scaled(*it);
  }
  return acc;
}

}  // namespace graphmub

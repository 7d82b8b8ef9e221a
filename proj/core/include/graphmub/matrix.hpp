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
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "graphmub/poly.hpp"
#include "graphmub/zp.hpp"

namespace graphmub {

// Dense matrix over Z_p, row-major, entries kept in [0, p). Most operations
// are for square matrices; rectangular shapes exist for connectivity blocks
// and rank computations.
class MatZp {
 public:
  MatZp(PrimeModulus p, std::size_t rows, std::size_t cols);
  MatZp(PrimeModulus p, std::size_t n) : MatZp(p, n, n) {}
  MatZp(PrimeModulus p,
        std::initializer_list<std::initializer_list<std::int64_t>> rows);
  MatZp(PrimeModulus p, const std::vector<std::vector<std::int64_t>>& rows);

  static MatZp identity(PrimeModulus p, std::size_t n);
  static MatZp zero(PrimeModulus p, std::size_t n) { return MatZp(p, n); }
  static MatZp diagonal(PrimeModulus p, const std::vector<Residue>& diag);

  const PrimeModulus& modulus() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  // Dimension of a square matrix; throws for rectangular shapes.
  std::size_t dim() const;

  Residue operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, std::int64_t v) {
    data_[r * cols_ + c] = p_.reduce(v);
  }
  std::span<const Residue> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<const Residue> data() const { return data_; }

  bool is_symmetric() const;
  bool is_zero() const;
  MatZp transpose() const;
  MatZp scaled(Residue s) const;
  MatZp power(std::uint64_t exp) const;
  Residue trace() const;
  MatZp submatrix(std::span<const std::size_t> row_idx,
                  std::span<const std::size_t> col_idx) const;
  std::vector<std::vector<Residue>> to_rows() const;

  friend MatZp operator+(const MatZp& a, const MatZp& b);
  friend MatZp operator-(const MatZp& a, const MatZp& b);
  friend MatZp operator*(const MatZp& a, const MatZp& b);
  friend bool operator==(const MatZp& a, const MatZp& b) = default;
  friend auto operator<=>(const MatZp& a, const MatZp& b) {
    return a.data_ <=> b.data_;
  }

  std::string to_string() const;

 private:
  PrimeModulus p_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Residue> data_;
};

std::ostream& operator<<(std::ostream& os, const MatZp& m);

Residue mat_det(const MatZp& m);
std::size_t mat_rank(const MatZp& m);
// Throws std::domain_error for a singular matrix.
MatZp mat_inverse(const MatZp& m);

// det(x*1 - m) via the division-free Berkowitz recursion, valid for every p
// including p <= n.
PolyZp char_poly(const MatZp& m);

// Superdiagonal ones and last row (-c_0, ..., -c_{n-1}).
MatZp companion_matrix(const PolyZp& f);

// pmat * b * pmat^T.
MatZp congruence(const MatZp& pmat, const MatZp& b);

// Value of f at a square matrix (Horner).
MatZp evaluate(const PolyZp& f, const MatZp& m);

}  // namespace graphmub

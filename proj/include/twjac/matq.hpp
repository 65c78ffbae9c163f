// Copyright 2026 The twjac Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TWJAC_MATQ_HPP_
#define TWJAC_MATQ_HPP_

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twjac/ffield.hpp"
#include "twjac/poly.hpp"

namespace twjac {

/// Dense matrix with entries at one tower level. Entries are element codes.
class MatF {
 public:
  MatF() = default;
  MatF(int rows, int cols, int level = 1);
  static MatF identity(int n, int level = 1);
  static MatF scalar(int n, Code c, int level = 1);
  // Single 1 at (i, j), zero elsewhere.
  static MatF unit(int rows, int cols, int i, int j, int level = 1);
  // w0: ones on the antidiagonal.
  static MatF antidiagonal(int n, int level = 1);
  static MatF from_rows(const std::vector<std::vector<Code>>& rows,
                        int level = 1);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int level() const { return level_; }
  bool is_square() const { return rows_ == cols_; }

  Code operator()(int i, int j) const { return a_[i * cols_ + j]; }
  Code& operator()(int i, int j) { return a_[i * cols_ + j]; }
  const std::vector<Code>& data() const { return a_; }

  MatF block(int r0, int c0, int rows, int cols) const;
  void set_block(int r0, int c0, const MatF& b);
  MatF transposed() const;

  friend bool operator==(const MatF&, const MatF&) = default;
  friend auto operator<=>(const MatF&, const MatF&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  int level_ = 1;
  std::vector<Code> a_;
};

MatF multiply(const FieldLevel& k, const MatF& a, const MatF& b);
MatF add(const FieldLevel& k, const MatF& a, const MatF& b);
MatF subtract(const FieldLevel& k, const MatF& a, const MatF& b);
MatF scale(const FieldLevel& k, Code c, const MatF& a);
std::optional<MatF> inverse(const FieldLevel& k, const MatF& a);
Code determinant(const FieldLevel& k, const MatF& a);
Code trace(const FieldLevel& k, const MatF& a);
MatF block_diag(const MatF& a, const MatF& b);
// [[I, X], [0, I]]
MatF unipotent_block(const MatF& x);

int rank(const FieldLevel& k, const MatF& x);
int rank(const FieldTower& t, const MatF& x);

// det(xI - g), monic of degree g.rows(), over the level of g.
Poly charpoly(const FieldLevel& k, const MatF& g);
Poly charpoly(const FieldTower& t, const MatF& g);

// Entry-wise embedding into a higher level.
MatF lift(const FieldTower& t, const MatF& x, int level);

// dim ker(g - z) over the level of z, with g lifted entry-wise.
// Throws std::invalid_argument when z is not an eigenvalue of g.
int kernel_dim(const FieldTower& t, const MatF& g, FFElem z);

// Hashable canonical key: row-major list of markers, 0 for a zero entry and
// 1 + dlog otherwise, packed as 32-bit little-endian words after the shape.
std::string element_key(const FieldLevel& k, const MatF& x);

// Text format: rows separated by ';', entries by ',', each entry the integer
// code of an F_q element.
std::string format_matrix(const MatF& x);
MatF parse_matrix(std::string_view text, std::uint64_t q);

}  // namespace twjac

#endif  // TWJAC_MATQ_HPP_

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

#include "twjac/matq.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace twjac {

MatF::MatF(int rows, int cols, int level)
    : rows_(rows), cols_(cols), level_(level), a_(std::size_t(rows) * cols, 0) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative shape");
}

MatF MatF::identity(int n, int level) { return scalar(n, 1, level); }

MatF MatF::scalar(int n, Code c, int level) {
  MatF m(n, n, level);
  for (int i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

MatF MatF::unit(int rows, int cols, int i, int j, int level) {
  MatF m(rows, cols, level);
  m(i, j) = 1;
  return m;
}

MatF MatF::antidiagonal(int n, int level) {
  MatF m(n, n, level);
  for (int i = 0; i < n; ++i) m(i, n - 1 - i) = 1;
  return m;
}

MatF MatF::from_rows(const std::vector<std::vector<Code>>& rows, int level) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  MatF m(r, c, level);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) {
      throw std::invalid_argument("ragged matrix rows");
    }
    for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

MatF MatF::block(int r0, int c0, int rows, int cols) const {
  MatF b(rows, cols, level_);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  }
  return b;
}

void MatF::set_block(int r0, int c0, const MatF& b) {
  for (int i = 0; i < b.rows(); ++i) {
    for (int j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }
}

MatF MatF::transposed() const {
  MatF t(cols_, rows_, level_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

MatF multiply(const FieldLevel& k, const MatF& a, const MatF& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("shape mismatch");
  MatF c(a.rows(), b.cols(), a.level());
  for (int i = 0; i < a.rows(); ++i) {
    for (int l = 0; l < a.cols(); ++l) {
      const Code x = a(i, l);
      if (x == 0) continue;
      for (int j = 0; j < b.cols(); ++j) {
        c(i, j) = k.add(c(i, j), k.mul(x, b(l, j)));
      }
    }
  }
  return c;
}

MatF add(const FieldLevel& k, const MatF& a, const MatF& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("shape mismatch");
  }
  MatF c(a.rows(), a.cols(), a.level());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) c(i, j) = k.add(a(i, j), b(i, j));
  }
  return c;
}

MatF subtract(const FieldLevel& k, const MatF& a, const MatF& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("shape mismatch");
  }
  MatF c(a.rows(), a.cols(), a.level());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) c(i, j) = k.sub(a(i, j), b(i, j));
  }
  return c;
}

MatF scale(const FieldLevel& k, Code c, const MatF& a) {
  MatF r(a.rows(), a.cols(), a.level());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) r(i, j) = k.mul(c, a(i, j));
  }
  return r;
}

namespace {

// In-place row echelon form; returns the rank and, optionally, the product
// of the pivots with the sign of the row permutation folded in.
int eliminate(const FieldLevel& k, MatF& m, Code* det) {
  int r = 0;
  Code d = 1;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i) {
      if (m(i, c) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != r) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
      d = k.neg(d);
    }
    const Code inv = k.inv(m(r, c));
    d = k.mul(d, m(r, c));
    for (int i = r + 1; i < m.rows(); ++i) {
      const Code f = k.mul(m(i, c), inv);
      if (f == 0) continue;
      for (int j = c; j < m.cols(); ++j) {
        m(i, j) = k.sub(m(i, j), k.mul(f, m(r, j)));
      }
    }
    ++r;
  }
  if (det != nullptr) *det = (r == m.rows() && m.is_square()) ? d : 0;
  return r;
}

}  // namespace

int rank(const FieldLevel& k, const MatF& x) {
  MatF m = x;
  return eliminate(k, m, nullptr);
}

int rank(const FieldTower& t, const MatF& x) { return rank(t.level(x.level()), x); }

Code determinant(const FieldLevel& k, const MatF& a) {
  if (!a.is_square()) throw std::invalid_argument("determinant: not square");
  MatF m = a;
  Code d = 0;
  eliminate(k, m, &d);
  return d;
}

Code trace(const FieldLevel& k, const MatF& a) {
  if (!a.is_square()) throw std::invalid_argument("trace: not square");
  Code s = 0;
  for (int i = 0; i < a.rows(); ++i) s = k.add(s, a(i, i));
  return s;
}

std::optional<MatF> inverse(const FieldLevel& k, const MatF& a) {
  if (!a.is_square()) throw std::invalid_argument("inverse: not square");
  const int n = a.rows();
  MatF m(n, 2 * n, a.level());
  m.set_block(0, 0, a);
  m.set_block(0, n, MatF::identity(n, a.level()));
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i) {
      if (m(i, c) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) return std::nullopt;
    if (piv != c) {
      for (int j = 0; j < 2 * n; ++j) std::swap(m(piv, j), m(c, j));
    }
    const Code inv = k.inv(m(c, c));
    for (int j = 0; j < 2 * n; ++j) m(c, j) = k.mul(m(c, j), inv);
    for (int i = 0; i < n; ++i) {
      if (i == c || m(i, c) == 0) continue;
      const Code f = m(i, c);
      for (int j = 0; j < 2 * n; ++j) m(i, j) = k.sub(m(i, j), k.mul(f, m(c, j)));
    }
  }
  return m.block(0, n, n, n);
}

MatF block_diag(const MatF& a, const MatF& b) {
  MatF m(a.rows() + b.rows(), a.cols() + b.cols(), a.level());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

MatF unipotent_block(const MatF& x) {
  const int n = x.rows();
  MatF m = MatF::identity(2 * n, x.level());
  m.set_block(0, n, x);
  return m;
}

Poly charpoly(const FieldLevel& k, const MatF& g) {
  if (!g.is_square()) throw std::invalid_argument("charpoly: not square");
  const int n = g.rows();
  MatF h = g;
  // Similarity reduction to upper Hessenberg form.
  for (int j = 0; j + 2 < n; ++j) {
    int piv = -1;
    for (int i = j + 1; i < n; ++i) {
      if (h(i, j) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != j + 1) {
      for (int c = 0; c < n; ++c) std::swap(h(piv, c), h(j + 1, c));
      for (int r = 0; r < n; ++r) std::swap(h(r, piv), h(r, j + 1));
    }
    const Code inv = k.inv(h(j + 1, j));
    for (int i = j + 2; i < n; ++i) {
      const Code f = k.mul(h(i, j), inv);
      if (f == 0) continue;
      for (int c = 0; c < n; ++c) h(i, c) = k.sub(h(i, c), k.mul(f, h(j + 1, c)));
      for (int r = 0; r < n; ++r) h(r, j + 1) = k.add(h(r, j + 1), k.mul(f, h(r, i)));
    }
  }
  // p_m = (x - h_mm) p_{m-1} - sum_i h_{m-i,m} (prod h_{j,j-1}) p_{m-i-1}
  std::vector<Poly> p(n + 1);
  p[0] = {1};
  for (int m = 1; m <= n; ++m) {
    p[m] = poly::mul(k, Poly{k.neg(h(m - 1, m - 1)), 1}, p[m - 1]);
    Code t = 1;
    for (int i = 1; i < m; ++i) {
      t = k.mul(t, h(m - i, m - i - 1));
      if (t == 0) break;
      const Code c = k.mul(t, h(m - i - 1, m - 1));
      p[m] = poly::sub(k, p[m], poly::scale(k, p[m - i - 1], c));
    }
  }
  return p[n];
}

Poly charpoly(const FieldTower& t, const MatF& g) {
  return charpoly(t.level(g.level()), g);
}

MatF lift(const FieldTower& t, const MatF& x, int level) {
  MatF r(x.rows(), x.cols(), level);
  for (int i = 0; i < x.rows(); ++i) {
    for (int j = 0; j < x.cols(); ++j) {
      r(i, j) = t.embed_code(x(i, j), x.level(), level);
    }
  }
  return r;
}

int kernel_dim(const FieldTower& t, const MatF& g, FFElem z) {
  if (!g.is_square()) throw std::invalid_argument("kernel_dim: not square");
  const FieldLevel& k = t.level(z.level);
  MatF m = lift(t, g, z.level);
  for (int i = 0; i < m.rows(); ++i) m(i, i) = k.sub(m(i, i), z.code);
  const int dim = m.rows() - rank(k, m);
  if (dim == 0) throw std::invalid_argument("kernel_dim: z is not an eigenvalue");
  return dim;
}

std::string element_key(const FieldLevel& k, const MatF& x) {
  std::string key;
  key.reserve(2 + 4 * x.data().size());
  key.push_back(static_cast<char>(x.rows()));
  key.push_back(static_cast<char>(x.cols()));
  for (Code c : x.data()) {
    const std::uint32_t marker =
        c == 0 ? 0 : static_cast<std::uint32_t>(k.log(c) + 1);
    for (int b = 0; b < 4; ++b) key.push_back(static_cast<char>((marker >> (8 * b)) & 0xff));
  }
  return key;
}

std::string format_matrix(const MatF& x) {
  std::ostringstream os;
  for (int i = 0; i < x.rows(); ++i) {
    if (i > 0) os << ';';
    for (int j = 0; j < x.cols(); ++j) {
      if (j > 0) os << ',';
      os << x(i, j);
    }
  }
  return os.str();
}

MatF parse_matrix(std::string_view text, std::uint64_t q) {
  std::vector<std::vector<Code>> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view row = text.substr(start, end - start);
    std::vector<Code> entries;
    std::size_t s = 0;
    while (s <= row.size()) {
      std::size_t e = row.find(',', s);
      if (e == std::string_view::npos) e = row.size();
      std::string_view tok = row.substr(s, e - s);
      while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
      while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
      std::uint64_t v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw std::invalid_argument("matrix entry '" + std::string(tok) +
                                    "' is not a nonnegative integer");
      }
      if (v >= q) {
        throw std::invalid_argument("matrix entry " + std::to_string(v) +
                                    " is not an element code below q = " +
                                    std::to_string(q));
      }
      entries.push_back(static_cast<Code>(v));
      s = e + 1;
    }
    rows.push_back(std::move(entries));
    start = end + 1;
  }
  return MatF::from_rows(rows);
}

}  // namespace twjac

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

#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "twjac/groups.hpp"

namespace twjac {
namespace {

MatF random_matrix(std::mt19937& rng, int rows, int cols, std::uint64_t q) {
  std::uniform_int_distribution<std::uint64_t> d(0, q - 1);
  MatF m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = static_cast<Code>(d(rng));
  }
  return m;
}

// det(xI - g) by Laplace expansion along the first row, entries in F[x].
Poly laplace_charpoly(const FieldLevel& f, const std::vector<std::vector<Poly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return {1};
  Poly acc;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Poly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Poly> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(row);
    }
    Poly term = poly::mul(f, m[0][c], laplace_charpoly(f, minor));
    acc = c % 2 == 0 ? poly::add(f, acc, term) : poly::sub(f, acc, term);
  }
  return acc;
}

Poly oracle_charpoly(const FieldLevel& f, const MatF& g) {
  const int n = g.rows();
  std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Poly e = g(i, j) == 0 ? Poly{} : Poly{f.neg(g(i, j))};
      if (i == j) e = poly::add(f, e, poly::x());
      m[i][j] = e;
    }
  }
  return laplace_charpoly(f, m);
}

// rank = log_q of the size of the row space, by enumeration of combinations.
int span_rank(const FieldLevel& f, const MatF& x) {
  std::set<std::vector<Code>> span;
  const std::uint64_t combos = ipow(f.size(), x.rows());
  for (std::uint64_t c = 0; c < combos; ++c) {
    std::vector<Code> v(x.cols(), 0);
    std::uint64_t idx = c;
    for (int r = 0; r < x.rows(); ++r, idx /= f.size()) {
      const Code a = static_cast<Code>(idx % f.size());
      for (int j = 0; j < x.cols(); ++j) v[j] = f.add(v[j], f.mul(a, x(r, j)));
    }
    span.insert(v);
  }
  int r = 0;
  for (std::uint64_t s = 1; s < span.size(); s *= f.size()) ++r;
  return r;
}

TEST(MatF, RankExamples) {
  const auto t = FieldTower::make(2, 1, 2);
  EXPECT_EQ(rank(t, MatF::identity(3)), 3);
  EXPECT_EQ(rank(t, MatF(3, 3)), 0);
  EXPECT_EQ(rank(t, MatF::unit(3, 3, 0, 0)), 1);
}

TEST(MatF, RankMatchesSpanSize) {
  std::mt19937 rng(3);
  for (auto [p, e] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
    const auto t = FieldTower::make(p, e, 1);
    for (int i = 0; i < 200; ++i) {
      const MatF x = random_matrix(rng, 3, 4, t.q());
      EXPECT_EQ(rank(t, x), span_rank(t.base(), x));
    }
  }
}

TEST(MatF, CharpolyExamples) {
  const auto t = FieldTower::make(2, 1, 2);
  EXPECT_EQ(charpoly(t, MatF::identity(2)), (Poly{1, 0, 1}));  // (x+1)^2
  EXPECT_EQ(charpoly(t, MatF::from_rows({{0, 1}, {1, 1}})), (Poly{1, 1, 1}));
  const auto t5 = FieldTower::make(5, 1, 1);
  const MatF d = MatF::from_rows({{2, 0}, {0, 3}});
  const FieldLevel& f = t5.base();
  EXPECT_EQ(charpoly(t5, d), poly::mul(f, {f.neg(2), 1}, {f.neg(3), 1}));
  EXPECT_THROW(charpoly(t, MatF(2, 3)), std::invalid_argument);
}

TEST(MatF, CharpolyMatchesLaplaceExpansion) {
  std::mt19937 rng(5);
  for (auto [p, e] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    const auto t = FieldTower::make(p, e, 1);
    const FieldLevel& f = t.base();
    for (int n = 1; n <= 5; ++n) {
      for (int i = 0; i < 40; ++i) {
        const MatF g = random_matrix(rng, n, n, t.q());
        const Poly c = charpoly(t, g);
        ASSERT_EQ(c, oracle_charpoly(f, g));
        // Cayley-Hamilton
        MatF acc(n, n);
        MatF power = MatF::identity(n);
        for (Code coef : c) {
          acc = add(f, acc, scale(f, coef, power));
          power = multiply(f, power, g);
        }
        EXPECT_EQ(acc, MatF(n, n));
      }
    }
  }
}

TEST(MatF, DeterminantAndInverse) {
  std::mt19937 rng(9);
  const auto t = FieldTower::make(3, 1, 1);
  const FieldLevel& f = t.base();
  for (int i = 0; i < 200; ++i) {
    const MatF g = random_matrix(rng, 3, 3, 3);
    const Poly c = oracle_charpoly(f, g);
    // det g = (-1)^n c(0)
    EXPECT_EQ(determinant(f, g), f.neg(c[0]));
    const auto inv = inverse(f, g);
    EXPECT_EQ(inv.has_value(), determinant(f, g) != 0);
    if (inv) EXPECT_EQ(multiply(f, g, *inv), MatF::identity(3));
  }
}

TEST(MatF, KernelDim) {
  const auto t = FieldTower::make(2, 1, 2);
  EXPECT_EQ(kernel_dim(t, MatF::identity(3), {1, 1}), 3);
  EXPECT_EQ(kernel_dim(t, MatF::from_rows({{1, 1}, {0, 1}}), {1, 1}), 1);
  const FFElem z = t.find_root({1, 1, 1});
  EXPECT_EQ(kernel_dim(t, MatF::from_rows({{0, 1}, {1, 1}}), z), 1);
  EXPECT_THROW(kernel_dim(t, MatF::identity(2), {1, 0}), std::invalid_argument);
}

TEST(MatF, TextFormatRoundTrip) {
  std::mt19937 rng(13);
  for (std::uint64_t q : {2u, 4u, 9u}) {
    for (int i = 0; i < 50; ++i) {
      const MatF m = random_matrix(rng, 1 + i % 4, 1 + i % 3, q);
      EXPECT_EQ(parse_matrix(format_matrix(m), q), m);
    }
  }
  EXPECT_EQ(format_matrix(MatF::identity(2)), "1,0;0,1");
  EXPECT_EQ(parse_matrix("1,0;0,1", 2), MatF::identity(2));
  EXPECT_THROW(parse_matrix("1,2;0,1", 2), std::invalid_argument);
  EXPECT_THROW(parse_matrix("1,0;0", 2), std::invalid_argument);
  EXPECT_THROW(parse_matrix("1,x", 3), std::invalid_argument);
}

TEST(MatF, ElementKeysSeparateElements) {
  const auto t = FieldTower::make(3, 1, 1);
  std::set<std::string> keys;
  const auto all = GroupSpec::full_matrix_space(2).elements(t);
  for (const auto& m : all) keys.insert(element_key(t.base(), m));
  EXPECT_EQ(keys.size(), all.size());
}

}  // namespace
}  // namespace twjac

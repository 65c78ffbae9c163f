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

#include "twjac/cyclo.hpp"

#include <gtest/gtest.h>

#include <random>

namespace twjac {
namespace {

std::vector<mpz_class> poly_mul(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
  std::vector<mpz_class> c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

CycNum random_value(std::mt19937& rng, std::uint64_t L) {
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  CycNum v(0, L);
  for (std::uint64_t k = 0; k < L; ++k) {
    v += CycNum::zeta(L, static_cast<std::int64_t>(k)) * mpq_class(coef(rng), den(rng));
  }
  return v;
}

TEST(Cyclotomic, PolynomialsMultiplyToXLMinusOne) {
  for (std::uint64_t L : {1u, 2u, 6u, 12u, 15u, 24u, 63u, 105u}) {
    std::vector<mpz_class> prod = {1};
    for (std::uint64_t d = 1; d <= L; ++d) {
      if (L % d == 0) prod = poly_mul(prod, cyclotomic_polynomial(d));
    }
    std::vector<mpz_class> want(L + 1);
    want[0] = -1;
    want[L] = 1;
    EXPECT_EQ(prod, want) << L;
  }
  EXPECT_EQ(cyclotomic_polynomial(6), (std::vector<mpz_class>{1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(105)[7], -2);
}

TEST(CycNum, ZetaExamples) {
  EXPECT_EQ(CycNum::zeta(7, 0), CycNum(1));
  EXPECT_EQ(CycNum::zeta(3, 1) + CycNum::zeta(3, 2), CycNum(-1));
  EXPECT_EQ(CycNum::zeta(5, 7), CycNum::zeta(5, 2));
  EXPECT_EQ(CycNum::zeta(5, -1), CycNum::zeta(5, 4));
  for (std::uint64_t L : {2u, 3u, 8u, 12u, 63u}) {
    CycNum s;
    for (std::uint64_t k = 0; k < L; ++k) s += CycNum::zeta(L, static_cast<std::int64_t>(k));
    EXPECT_TRUE(s.is_zero()) << L;
  }
  EXPECT_THROW(CycNum::zeta(0, 1), std::invalid_argument);
}

TEST(CycNum, RingOperations) {
  EXPECT_EQ(CycNum::zeta(4, 1) * CycNum::zeta(4, 1), CycNum(-1));
  EXPECT_EQ(CycNum::zeta(4, 2), CycNum(-1));
  EXPECT_EQ(CycNum::zeta(7, 1).conj(), CycNum::zeta(7, 6));
  const CycNum a = CycNum::zeta(5, 2);
  EXPECT_EQ(a * a.conj(), CycNum(1));
  // mixed moduli merge to the lcm
  EXPECT_EQ(CycNum::zeta(2, 1) * CycNum::zeta(3, 1), CycNum::zeta(6, 5));
}

TEST(CycNum, AsRational) {
  EXPECT_EQ(*(CycNum::zeta(3, 1) + CycNum::zeta(3, 2)).as_rational(), -1);
  EXPECT_FALSE(CycNum::zeta(8, 1).as_rational());
  EXPECT_EQ(*(CycNum::zeta(6, 0) * mpq_class(3)).as_rational(), 3);
  EXPECT_EQ(*CycNum(mpq_class(1, 3), 12).as_rational(), mpq_class(1, 3));
}

TEST(CycNum, RingAxiomsOnRandomValues) {
  std::mt19937 rng(7);
  for (std::uint64_t L : {12u, 15u, 24u}) {
    for (int i = 0; i < 30; ++i) {
      const CycNum a = random_value(rng, L);
      const CycNum b = random_value(rng, L);
      const CycNum c = random_value(rng, L);
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a + b, b + a);
      EXPECT_TRUE((a - a).is_zero());
      EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
    }
  }
}

TEST(CycNum, ReductionIsIdempotent) {
  std::mt19937 rng(11);
  for (std::uint64_t L : {9u, 20u, 63u}) {
    for (int i = 0; i < 20; ++i) {
      const CycNum a = random_value(rng, L);
      const auto once = a.canonical();
      CycNum rebuilt(0, L);
      for (std::size_t k = 0; k < once.size(); ++k) {
        rebuilt += CycNum::zeta(L, static_cast<std::int64_t>(k)) * once[k];
      }
      EXPECT_EQ(rebuilt.canonical(), once);
      EXPECT_EQ(rebuilt, a);
    }
  }
}

TEST(CycNum, EmbeddingConsistency) {
  for (std::uint64_t L : {3u, 8u, 15u}) {
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(L); ++k) {
      for (std::uint64_t c : {2u, 3u, 5u}) {
        EXPECT_EQ(CycNum::zeta(L, k), CycNum::zeta(c * L, k * static_cast<std::int64_t>(c)));
        EXPECT_EQ(CycNum::zeta(L, k).lifted(c * L), CycNum::zeta(L, k));
      }
    }
  }
}

TEST(CycNum, MeanSquareNormOfACharacterTable) {
  // Characters of Z/6: <chi, chi> = 1 and the table rows are orthogonal.
  for (int j = 0; j < 6; ++j) {
    std::vector<CycNum> values;
    for (int k = 0; k < 6; ++k) values.push_back(CycNum::zeta(6, j * k));
    EXPECT_EQ(*mean_square_norm(values).as_rational(), 1);
  }
}

TEST(CycNum, ToString) {
  EXPECT_EQ(CycNum(0).to_string(), "0");
  EXPECT_EQ(CycNum(mpq_class(-3, 2)).to_string(), "-3/2");
  EXPECT_FALSE(CycNum::zeta(7, 3).to_string().empty());
}

}  // namespace
}  // namespace twjac

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

#include "twjac/counting.hpp"

#include <gtest/gtest.h>

#include <random>

namespace twjac::counting {
namespace {

TEST(Counting, Pochhammer) {
  EXPECT_EQ(pochhammer(5, 0), 1);
  EXPECT_EQ(pochhammer(2, 3), -21);
  EXPECT_EQ(pochhammer(3, 2), 16);
  EXPECT_THROW(pochhammer(2, -1), std::invalid_argument);
}

TEST(Counting, MatCountExamples) {
  EXPECT_EQ(mat_count(3, 2, 0, 5, Method::kClosed), 1);
  EXPECT_EQ(mat_count(2, 2, 1, 2, Method::kClosed), 9);
  EXPECT_EQ(mat_count(2, 2, 1, 2, Method::kOracle), 9);
  EXPECT_EQ(mat_count(2, 2, 2, 2, Method::kClosed), 6);
  EXPECT_EQ(mat_count(2, 2, -1, 2, Method::kClosed), 0);
  EXPECT_EQ(mat_count(2, 2, 3, 2, Method::kClosed), 0);
}

TEST(Counting, ClosedFormMatchesEnumeration) {
  for (std::uint64_t q : {2u, 3u}) {
    for (int n = 1; n <= 3; ++n) {
      for (int m = 1; m <= 3; ++m) {
        for (int r = 0; r <= std::min(n, m); ++r) {
          EXPECT_EQ(mat_count(n, m, r, q, Method::kClosed), mat_count(n, m, r, q, Method::kOracle))
              << n << "x" << m << " r=" << r << " q=" << q;
        }
      }
    }
  }
  for (int r = 0; r <= 4; ++r) {
    EXPECT_EQ(mat_count(4, 4, r, 2, Method::kClosed), mat_count(4, 4, r, 2, Method::kOracle));
  }
  EXPECT_EQ(mat_count(2, 2, 1, 4, Method::kClosed), mat_count(2, 2, 1, 4, Method::kOracle));
}

TEST(Counting, RankCensusParallelMatchesSerial) {
  const auto t = FieldTower::make(3, 1, 1);
  EXPECT_EQ(rank_census(t, 3, 2, Exec::kSerial), rank_census(t, 3, 2, Exec::kParallel));
  EXPECT_EQ(rank_trace_census(t, e11_matrix(2), Exec::kSerial),
            rank_trace_census(t, e11_matrix(2), Exec::kParallel));
}

TEST(Counting, YCountExamples) {
  const auto t = FieldTower::make(2, 1, 1);
  EXPECT_EQ(y_count_closed(2, 1, 2, TraceClass::kZero), 5);
  EXPECT_EQ(y_count_closed(2, 1, 2, TraceClass::kNonzero), 4);
  EXPECT_EQ(y_count_oracle(t, e11_matrix(2), 1, TraceClass::kZero), 5);
  EXPECT_EQ(y_count_oracle(t, e11_matrix(2), 1, TraceClass::kNonzero), 4);
  for (std::int64_t q : {2, 3, 5}) {
    EXPECT_EQ(y_count_closed(3, 0, q, TraceClass::kZero), 1);
    EXPECT_EQ(y_count_closed(3, 0, q, TraceClass::kNonzero), 0);
  }
  EXPECT_THROW(y_count(t, MatF::identity(2), 1, TraceClass::kZero, Method::kClosed),
               std::invalid_argument);
}

TEST(Counting, YCountClosedMatchesOracle) {
  for (auto [p, e, nmax] : {std::tuple{2, 1, 4}, {3, 1, 3}}) {
    const auto t = FieldTower::make(p, e, 1);
    const auto q = static_cast<std::int64_t>(t.q());
    for (int n = 1; n <= nmax; ++n) {
      const auto census = rank_trace_census(t, e11_matrix(n));
      for (int r = 0; r <= n; ++r) {
        const mpz_class z(std::to_string(census[r][0]));
        const mpz_class one(std::to_string(census[r][1]));
        EXPECT_EQ(y_count_closed(n, r, q, TraceClass::kZero), z) << n << " " << r;
        EXPECT_EQ(y_count_closed(n, r, q, TraceClass::kNonzero), one) << n << " " << r;
        EXPECT_EQ(y_diff(n, r, q), z - one);
        EXPECT_EQ(z + (q - 1) * one, mat_count_closed(n, n, r, q));
        for (std::size_t a = 2; a < census[r].size(); ++a) EXPECT_EQ(census[r][a], census[r][1]);
      }
    }
  }
}

TEST(Counting, TraceClassesAgreeForRandomRankOneA) {
  std::mt19937 rng(21);
  const auto t = FieldTower::make(3, 1, 1);
  const FieldLevel& f = t.base();
  std::uniform_int_distribution<int> d(0, 2);
  for (int i = 0; i < 10; ++i) {
    MatF u(3, 1);
    MatF v(1, 3);
    for (int k = 0; k < 3; ++k) {
      u(k, 0) = static_cast<Code>(d(rng));
      v(0, k) = static_cast<Code>(d(rng));
    }
    u(i % 3, 0) = 1;
    v(0, (i + 1) % 3) = 2;
    const MatF a = multiply(f, u, v);
    ASSERT_EQ(rank(f, a), 1);
    const auto census = rank_trace_census(t, a);
    for (int r = 0; r <= 3; ++r) {
      EXPECT_EQ(census[r][1], census[r][2]);
      EXPECT_EQ(mpz_class(std::to_string(census[r][0])),
                y_count_closed(3, r, 3, TraceClass::kZero));
    }
  }
}

TEST(Counting, YDiffExamples) {
  EXPECT_EQ(y_diff(2, 1, 2), 1);
  EXPECT_EQ(y_diff(4, 0, 3), 1);
  const auto t = FieldTower::make(2, 1, 1);
  EXPECT_EQ(y_diff(2, 2, 2), y_count_oracle(t, e11_matrix(2), 2, TraceClass::kZero) -
                                 y_count_oracle(t, e11_matrix(2), 2, TraceClass::kNonzero));
}

TEST(Counting, IdentityExamples) {
  for (std::int64_t q : {2, 3, 5, 7, 11}) {
    const auto res = identity_check(1, 2, q);
    const mpq_class want = q * (1 - q) * (1 - q);
    EXPECT_EQ(res.lhs, want);
    EXPECT_EQ(res.rhs, want);
    EXPECT_TRUE(res.equal);
  }
  EXPECT_TRUE(identity_check(2, 4, 2).equal);
  EXPECT_TRUE(identity_check(2, 5, 7).equal);
  EXPECT_THROW(identity_check(2, 3, 2), std::invalid_argument);
}

TEST(Counting, IdentityOverTheFullGrid) {
  for (std::int64_t q : {2, 3, 4, 5, 7}) {
    for (int n = 0; n <= 6; ++n) {
      for (int a = 2 * n; a <= 2 * n + 6; ++a) {
        const auto res = identity_check(n, a, q);
        EXPECT_TRUE(res.equal) << n << " " << a << " " << q;
        EXPECT_EQ(res.lhs, res.rhs);
      }
    }
  }
}

TEST(Counting, RankRecurrence) {
  EXPECT_TRUE(rank_recurrence_check(2, 1, 2));
  EXPECT_EQ(mat_count_closed(2, 2, 1, 2),
            2 * mat_count_closed(2, 1, 1, 2) + (4 - 1) * mat_count_closed(2, 1, 0, 2));
  EXPECT_TRUE(rank_recurrence_check(2, 2, 2));
  EXPECT_TRUE(rank_recurrence_check(3, 1, 3));
  for (std::int64_t q : {2, 3, 4, 5}) {
    for (int n = 1; n <= 6; ++n) {
      for (int r = 1; r <= n; ++r) EXPECT_TRUE(rank_recurrence_check(n, r, q));
    }
  }
  EXPECT_THROW(rank_recurrence_check(2, 0, 2), std::invalid_argument);
}

TEST(Counting, PrimePowerDetection) {
  EXPECT_EQ(prime_power(9), (std::pair{3, 2}));
  EXPECT_EQ(prime_power(7), (std::pair{7, 1}));
  EXPECT_FALSE(prime_power(6));
}

TEST(Counting, OracleCapIsEnforced) {
  EXPECT_THROW(mat_count(4, 4, 2, 3, Method::kOracle, EnumOptions{1000}), CapExceeded);
}

}  // namespace
}  // namespace twjac::counting

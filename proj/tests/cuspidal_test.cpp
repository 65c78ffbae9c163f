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

#include "twjac/cuspidal.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "twjac/counting.hpp"
#include "twjac/groups.hpp"

namespace twjac {
namespace {

MatF random_invertible(std::mt19937& rng, const FieldLevel& f, int n) {
  std::uniform_int_distribution<std::uint64_t> d(0, f.size() - 1);
  for (;;) {
    MatF m(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m(i, j) = static_cast<Code>(d(rng));
    }
    if (determinant(f, m) != 0) return m;
  }
}

std::size_t regular_count_by_orbits(std::uint64_t q, int m) {
  const std::uint64_t order = ipow(q, m) - 1;
  std::size_t regular = 0;
  for (std::uint64_t k = 0; k < order; ++k) {
    std::set<std::uint64_t> orbit;
    std::uint64_t x = k;
    for (int i = 0; i < m; ++i, x = x * q % order) orbit.insert(x);
    if (orbit.size() == static_cast<std::size_t>(m)) ++regular;
  }
  return regular / m;
}

TEST(RegularCharacters, OrbitCounts) {
  EXPECT_EQ(regular_characters(FieldTower::make(2, 1, 2)), (std::vector<std::uint64_t>{1}));
  EXPECT_EQ(regular_characters(FieldTower::make(3, 1, 2)).size(), 3u);
  EXPECT_EQ(regular_characters(FieldTower::make(2, 1, 6)).size(), 9u);
  for (auto [p, e, m] : {std::tuple{2, 1, 4}, {3, 1, 4}, {2, 1, 6}, {2, 2, 2}, {5, 1, 2},
                         {3, 1, 2}, {2, 1, 2}}) {
    const auto t = FieldTower::make(p, e, m);
    EXPECT_EQ(regular_characters(t).size(), regular_count_by_orbits(t.q(), m));
  }
  EXPECT_EQ(regular_characters(FieldTower::make(2, 1, 4)).size(), 3u);
  EXPECT_EQ(regular_characters(FieldTower::make(3, 1, 4)).size(), 18u);
}

TEST(RegularCharacters, RejectsNonRegular) {
  const auto t = FieldTower::make(3, 1, 2);
  EXPECT_THROW(RegularCharacter::make(t, 0), std::invalid_argument);
  EXPECT_THROW(RegularCharacter::make(t, 4), std::invalid_argument);
  EXPECT_NO_THROW(RegularCharacter::make(t, 1));
  const auto th = RegularCharacter::make(t, 1);
  EXPECT_EQ(th.galois_conjugate(1).index(), 3u);
}

TEST(ThetaEval, Examples) {
  const auto t = FieldTower::make(3, 1, 2);
  const auto th = RegularCharacter::make(t, 3);
  EXPECT_EQ(theta_eval(th, {2, 1}), CycNum(1));
  EXPECT_EQ(theta_eval(th, t.gamma(2)), CycNum::zeta(8, 3));
  EXPECT_THROW(theta_eval(th, {2, 0}), std::domain_error);
  std::mt19937 rng(1);
  const FieldLevel& f = t.top();
  std::uniform_int_distribution<Code> d(1, static_cast<Code>(f.size() - 1));
  for (int i = 0; i < 200; ++i) {
    const Code x = d(rng);
    const Code y = d(rng);
    EXPECT_EQ(theta_eval(th, {2, f.mul(x, y)}), theta_eval(th, {2, x}) * theta_eval(th, {2, y}));
  }
  // level-1 arguments are embedded first
  EXPECT_EQ(theta_eval(th, {1, 2}), theta_eval(th, t.embed({1, 2}, 2)));
}

// Cuspidal character of GL(2, q) from the classical table, with eigenvalues
// found by searching F_{q^2}.
CycNum gl2_cuspidal_oracle(const FieldTower& t, const RegularCharacter& th, const MatF& g) {
  const FieldLevel& k = t.base();
  const FieldLevel& big = t.level(2);
  const Code tr = k.add(g(0, 0), g(1, 1));
  const Code det = determinant(k, g);
  std::vector<Code> roots;
  for (Code z = 0; z < big.size(); ++z) {
    const Code val = big.add(big.sub(big.mul(z, z), big.mul(t.embed_code(tr, 1, 2), z)),
                             t.embed_code(det, 1, 2));
    if (val == 0) roots.push_back(z);
  }
  const auto q = static_cast<long>(t.q());
  if (roots.size() == 2) {
    const bool elliptic = t.frobenius({2, roots[0]}).code == roots[1];
    if (!elliptic) return CycNum(0, t.cyclotomic_modulus());
    return -(theta_eval(th, {2, roots[0]}) + theta_eval(th, {2, roots[1]}));
  }
  const CycNum tz = theta_eval(th, {2, roots.at(0)});
  const bool scalar = g(0, 1) == 0 && g(1, 0) == 0;
  return scalar ? tz * mpq_class(q - 1) : -tz;
}

TEST(CuspidalChar, MatchesGL2Table) {
  for (auto [p, e] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    const auto t = FieldTower::make(p, e, 2);
    const auto gl = GroupSpec::gl(2).elements(t);
    for (auto k : regular_characters(t)) {
      const auto th = RegularCharacter::make(t, k);
      for (const auto& g : gl) {
        ASSERT_EQ(cuspidal_char(th, g), gl2_cuspidal_oracle(t, th, g)) << format_matrix(g);
      }
    }
  }
}

TEST(CuspidalChar, Examples) {
  for (int p : {2, 3, 5}) {
    const auto t = FieldTower::make(p, 1, 2);
    const auto th = RegularCharacter::make(t, regular_characters(t).front());
    EXPECT_EQ(cuspidal_char(th, MatF::identity(2)), CycNum(p - 1));
  }
  const auto t = FieldTower::make(2, 1, 2);
  const auto th = RegularCharacter::make(t, 1);
  EXPECT_EQ(cuspidal_char(th, MatF::from_rows({{1, 1}, {0, 1}})), CycNum(-1));
  EXPECT_EQ(cuspidal_char(th, MatF::from_rows({{0, 1}, {1, 1}})), CycNum(1));
  EXPECT_EQ(cuspidal_char(th, MatF::from_rows({{0, 1}, {1, 1}})),
            -(CycNum::zeta(3, 1) + CycNum::zeta(3, 2)));
  EXPECT_THROW(cuspidal_char(th, MatF::from_rows({{0, 0}, {0, 1}})), std::invalid_argument);
  const auto t3 = FieldTower::make(3, 1, 2);
  const auto th3 = RegularCharacter::make(t3, 1);
  EXPECT_TRUE(cuspidal_char(th3, MatF::from_rows({{1, 0}, {0, 2}})).is_zero());
}

TEST(CuspidalChar, DegreeAtIdentity) {
  for (auto [p, e, m] : {std::tuple{2, 1, 4}, {3, 1, 4}, {2, 1, 6}, {2, 2, 2}}) {
    const auto t = FieldTower::make(p, e, m);
    mpz_class want = 1;
    for (int i = 1; i < m; ++i) want *= mpz_class(std::to_string(ipow(t.q(), i) - 1));
    for (auto k : regular_characters(t)) {
      const auto v = cuspidal_char(RegularCharacter::make(t, k), MatF::identity(m)).as_rational();
      ASSERT_TRUE(v);
      EXPECT_EQ(*v, want);
    }
  }
}

mpq_class norm_over_gl(const FieldTower& t, const RegularCharacter& th) {
  std::vector<CycNum> values;
  for (const auto& g : GroupSpec::gl(th.level()).elements(t)) values.push_back(cuspidal_char(th, g));
  return *mean_square_norm(values).as_rational();
}

TEST(CuspidalChar, IrreducibleOverSmallGroups) {
  for (auto [p, m] : {std::pair{2, 2}, {3, 2}, {2, 3}}) {
    const auto t = FieldTower::make(p, 1, m);
    for (auto k : regular_characters(t)) {
      EXPECT_EQ(norm_over_gl(t, RegularCharacter::make(t, k)), 1) << p << " " << m << " " << k;
    }
  }
}

TEST(CuspidalChar, GaloisInvariance) {
  std::mt19937 rng(101);
  for (auto [p, m] : {std::pair{2, 4}, {3, 4}, {2, 6}}) {
    const auto t = FieldTower::make(p, 1, m);
    const auto ks = regular_characters(t);
    for (int i = 0; i < 400; ++i) {
      const auto th = RegularCharacter::make(t, ks[i % ks.size()]);
      const MatF g = random_invertible(rng, t.base(), m);
      const unsigned alpha = 1 + i % (m - 1);
      ASSERT_EQ(cuspidal_char(th, g), cuspidal_char(th.galois_conjugate(alpha), g));
    }
  }
}

TEST(CuspidalChar, ClassFunction) {
  std::mt19937 rng(202);
  for (auto [p, m] : {std::pair{2, 4}, {3, 4}, {2, 6}}) {
    const auto t = FieldTower::make(p, 1, m);
    const FieldLevel& f = t.base();
    const auto ks = regular_characters(t);
    for (int i = 0; i < 400; ++i) {
      const auto th = RegularCharacter::make(t, ks[i % ks.size()]);
      const MatF g = random_invertible(rng, f, m);
      const MatF h = random_invertible(rng, f, m);
      const MatF c = multiply(f, multiply(f, h, g), *inverse(f, h));
      ASSERT_EQ(cuspidal_char(th, g), cuspidal_char(th, c));
    }
  }
}

TEST(CuspidalChar, RootChoiceInvariance) {
  std::mt19937 rng(303);
  std::size_t tested = 0;
  for (auto [p, m] : {std::pair{2, 4}, {3, 4}, {2, 6}}) {
    const auto t = FieldTower::make(p, 1, m);
    const auto ks = regular_characters(t);
    for (int i = 0; i < 1200; ++i) {
      const auto th = RegularCharacter::make(t, ks[i % ks.size()]);
      const CuspidalClass c = classify(t, random_invertible(rng, t.base(), m));
      if (c.vanishes) continue;
      const CycNum base = cuspidal_formula(th, c.degree, c.kernel_dim, c.root);
      FFElem z = c.root;
      for (int a = 1; a < c.degree; ++a) {
        z = t.frobenius(z);
        ASSERT_EQ(cuspidal_formula(th, c.degree, c.kernel_dim, z), base);
      }
      ++tested;
    }
  }
  EXPECT_GE(tested, 1000u);
}

TEST(CuspidalChar, MemoMatchesFreshEvaluation) {
  std::mt19937 rng(404);
  const auto t = FieldTower::make(3, 1, 4);
  const auto th = RegularCharacter::make(t, regular_characters(t)[5]);
  ClassFunctionTable table(th);
  Classifier classify_cached(t);
  for (int i = 0; i < 300; ++i) {
    const MatF g = random_invertible(rng, t.base(), 4);
    EXPECT_EQ(table.value(classify_cached(g)), cuspidal_char(th, g));
    EXPECT_EQ(classify_cached(g).key(), classify(t, g).key());
  }
  EXPECT_GT(table.size(), 0u);
}

TEST(UnipotentBlock, Examples) {
  const auto t = FieldTower::make(2, 1, 4);
  const auto th = RegularCharacter::make(t, 1);
  EXPECT_EQ(unipotent_block_value(th, 2, 0), CycNum(21));
  EXPECT_EQ(unipotent_block_value(th, 2, 1), CycNum(-3));
  EXPECT_EQ(unipotent_block_value(th, 2, 2), CycNum(1));
  EXPECT_EQ(*unipotent_block_value(th, 2, 0).as_rational(),
            mpq_class(-counting::pochhammer(2, 3)));
}

TEST(UnipotentBlock, MatchesCuspidalChar) {
  for (auto [p, n] : {std::pair{2, 2}, {3, 2}, {2, 1}, {5, 1}}) {
    const auto t = FieldTower::make(p, 1, 2 * n);
    const auto xs = GroupSpec::full_matrix_space(n).elements(t);
    for (auto k : regular_characters(t)) {
      const auto th = RegularCharacter::make(t, k);
      for (const auto& x : xs) {
        ASSERT_EQ(unipotent_block_char(th, x), cuspidal_char(th, unipotent_block(x)));
      }
    }
  }
}

}  // namespace
}  // namespace twjac

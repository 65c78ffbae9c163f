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

#ifndef TWJAC_COUNTING_HPP_
#define TWJAC_COUNTING_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "twjac/ffield.hpp"
#include "twjac/groups.hpp"
#include "twjac/matq.hpp"
#include "twjac/parallel.hpp"

namespace twjac::counting {

enum class Method { kClosed, kOracle };
enum class TraceClass { kZero, kNonzero };

// (q;q)_n = prod_{i=1}^{n} (1 - q^i). Throws for n < 0.
mpz_class pochhammer(std::int64_t q, int n);

// Number of n x m matrices of rank r over F_q, from the product formula.
// Zero for r < 0 or r > min(n, m).
mpz_class mat_count_closed(int n, int m, int r, std::int64_t q);

// p, e with q = p^e, or nullopt.
std::optional<std::pair<int, int>> prime_power(std::uint64_t q);

// Histogram of ranks over all n x m matrices over the tower's base field.
std::vector<std::uint64_t> rank_census(const FieldTower& t, int n, int m,
                                       Exec exec = Exec::kParallel,
                                       EnumOptions opt = {});

// counts[r][c] = #{X in M(n, F) : rank X = r, tr(AX) has code c}.
using RankTraceCensus = std::vector<std::vector<std::uint64_t>>;
RankTraceCensus rank_trace_census(const FieldTower& t, const MatF& a,
                                  Exec exec = Exec::kParallel,
                                  EnumOptions opt = {});

mpz_class mat_count(int n, int m, int r, std::uint64_t q, Method method,
                    EnumOptions opt = {});

// |Y^0_{n,r}| and |Y^1_{n,r}| by the displayed closed forms (exact rational
// arithmetic, integrality asserted). Valid for any rank-one A.
mpz_class y_count_closed(int n, int r, std::int64_t q, TraceClass cls);
// Direct count of {X : rank X = r, tr(AX) = alpha}, alpha = 0 or 1.
mpz_class y_count_oracle(const FieldTower& t, const MatF& a, int r,
                         TraceClass cls, EnumOptions opt = {});
// Dispatches on method; the closed form requires rank(A) = 1.
mpz_class y_count(const FieldTower& t, const MatF& a, int r, TraceClass cls,
                  Method method, EnumOptions opt = {});

// |Y^0_{n,r}| - |Y^1_{n,r}| = q^r |M(n-1,n-1,r)| - q^{r-1} |M(n-1,n-1,r-1)|.
mpz_class y_diff(int n, int r, std::int64_t q);

struct IdentityResult {
  mpq_class lhs;
  mpq_class rhs;
  bool equal = false;
};
// sum_r |M(n,n,r,q)| (q;q)_{a-r}  vs  q^{n^2} (q;q)_{a-n}^2 / (q;q)_{a-2n}.
// Requires a >= 2n.
IdentityResult identity_check(int n, int a, std::int64_t q);

// |M(n,n,r)| = q^r |M(n,n-1,r)| + (q^n - q^{r-1}) |M(n,n-1,r-1)|, 1 <= r <= n.
bool rank_recurrence_check(int n, int r, std::int64_t q);

}  // namespace twjac::counting

#endif  // TWJAC_COUNTING_HPP_

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

#include <algorithm>
#include <stdexcept>
#include <string>

namespace twjac::counting {

namespace {

mpq_class qpow(std::int64_t q, int k) {
  mpz_class b;
  mpz_ui_pow_ui(b.get_mpz_t(), static_cast<unsigned long>(q),
                static_cast<unsigned long>(k < 0 ? -k : k));
  return k < 0 ? mpq_class(1, b) : mpq_class(b);
}

mpz_class as_integer(const mpq_class& v, const char* what) {
  if (v.get_den() != 1) {
    throw std::logic_error(std::string(what) + " is not an integer: " + v.get_str());
  }
  return v.get_num();
}

void require_q(std::int64_t q) {
  if (q < 2) throw std::invalid_argument("q must be at least 2");
}

}  // namespace

mpz_class pochhammer(std::int64_t q, int n) {
  if (n < 0) throw std::invalid_argument("pochhammer: negative length");
  mpz_class r = 1;
  for (int i = 1; i <= n; ++i) r *= 1 - qpow(q, i).get_num();
  return r;
}

mpz_class mat_count_closed(int n, int m, int r, std::int64_t q) {
  require_q(q);
  if (r < 0 || r > std::min(n, m)) return 0;
  mpq_class v = 1;
  for (int j = 0; j < r; ++j) {
    v *= (qpow(q, n) - qpow(q, j)) * (qpow(q, m) - qpow(q, j));
    v /= qpow(q, r) - qpow(q, j);
  }
  return as_integer(v, "mat_count");
}

std::optional<std::pair<int, int>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  const std::uint64_t p = prime_factors(q).front();
  int e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1) return std::nullopt;
  return std::pair<int, int>{static_cast<int>(p), e};
}

std::vector<std::uint64_t> rank_census(const FieldTower& t, int n, int m,
                                       Exec exec, EnumOptions opt) {
  const FieldLevel& f = t.base();
  const std::uint64_t q = t.q();
  const std::uint64_t total = ipow(q, static_cast<unsigned>(n * m));
  if (total > opt.cap) throw CapExceeded("rank census above the enumeration cap");
  const int bins = std::min(n, m) + 1;
  std::vector<std::uint64_t> counts(bins, 0);
  if (exec == Exec::kSerial) {
    for (std::uint64_t i = 0; i < total; ++i) {
      ++counts[rank(f, matrix_from_index(i, n, m, q))];
    }
    return counts;
  }
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(bins, 0);
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(total); ++i) {
      ++local[rank(f, matrix_from_index(i, n, m, q))];
    }
#pragma omp critical
    for (int b = 0; b < bins; ++b) counts[b] += local[b];
  }
  return counts;
}

RankTraceCensus rank_trace_census(const FieldTower& t, const MatF& a,
                                  Exec exec, EnumOptions opt) {
  const FieldLevel& f = t.base();
  const std::uint64_t q = t.q();
  const int n = a.rows();
  const std::uint64_t total = ipow(q, static_cast<unsigned>(n * n));
  if (total > opt.cap) throw CapExceeded("rank/trace census above the enumeration cap");
  auto bin = [&](std::uint64_t i, RankTraceCensus& c) {
    const MatF x = matrix_from_index(i, n, n, q);
    ++c[rank(f, x)][trace(f, multiply(f, a, x))];
  };
  RankTraceCensus counts(n + 1, std::vector<std::uint64_t>(q, 0));
  if (exec == Exec::kSerial) {
    for (std::uint64_t i = 0; i < total; ++i) bin(i, counts);
    return counts;
  }
#pragma omp parallel
  {
    RankTraceCensus local(n + 1, std::vector<std::uint64_t>(q, 0));
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(total); ++i) bin(i, local);
#pragma omp critical
    for (int r = 0; r <= n; ++r) {
      for (std::uint64_t c = 0; c < q; ++c) counts[r][c] += local[r][c];
    }
  }
  return counts;
}

mpz_class mat_count(int n, int m, int r, std::uint64_t q, Method method,
                    EnumOptions opt) {
  if (method == Method::kClosed) return mat_count_closed(n, m, r, static_cast<std::int64_t>(q));
  if (r < 0 || r > std::min(n, m)) return 0;
  const auto pe = prime_power(q);
  if (!pe) throw std::invalid_argument("oracle needs a prime power q");
  const FieldTower t = FieldTower::make(pe->first, pe->second, 1);
  const auto counts = rank_census(t, n, m, Exec::kParallel, opt);
  return mpz_class(static_cast<unsigned long>(counts[r]));
}

mpz_class y_count_closed(int n, int r, std::int64_t q, TraceClass cls) {
  require_q(q);
  if (r < 0 || r > n) return 0;
  const mpq_class full = mat_count_closed(n, n, r, q);
  const mpq_class sub_r = mat_count_closed(n - 1, n - 1, r, q);
  const mpq_class sub_r1 = mat_count_closed(n - 1, n - 1, r - 1, q);
  mpq_class v;
  if (cls == TraceClass::kZero) {
    v = full / q + (qpow(q, r) - qpow(q, r - 1)) * sub_r +
        (qpow(q, r - 2) - qpow(q, r - 1)) * sub_r1;
  } else {
    v = full / q - qpow(q, r - 1) * sub_r + qpow(q, r - 2) * sub_r1;
  }
  return as_integer(v, "y_count");
}

mpz_class y_count_oracle(const FieldTower& t, const MatF& a, int r,
                         TraceClass cls, EnumOptions opt) {
  if (r < 0 || r > a.rows()) return 0;
  const auto census = rank_trace_census(t, a, Exec::kParallel, opt);
  const std::uint64_t v = census[r][cls == TraceClass::kZero ? 0 : 1];
  return mpz_class(static_cast<unsigned long>(v));
}

mpz_class y_count(const FieldTower& t, const MatF& a, int r, TraceClass cls,
                  Method method, EnumOptions opt) {
  if (method == Method::kOracle) return y_count_oracle(t, a, r, cls, opt);
  if (rank(t, a) != 1) {
    throw std::invalid_argument("y_count: closed form needs rank(A) = 1");
  }
  return y_count_closed(a.rows(), r, static_cast<std::int64_t>(t.q()), cls);
}

mpz_class y_diff(int n, int r, std::int64_t q) {
  require_q(q);
  const mpq_class v = qpow(q, r) * mpq_class(mat_count_closed(n - 1, n - 1, r, q)) -
                      qpow(q, r - 1) * mpq_class(mat_count_closed(n - 1, n - 1, r - 1, q));
  return as_integer(v, "y_diff");
}

IdentityResult identity_check(int n, int a, std::int64_t q) {
  require_q(q);
  if (a < 2 * n) throw std::invalid_argument("identity_check: a < 2n");
  IdentityResult res;
  res.lhs = 0;
  for (int r = 0; r <= n; ++r) {
    res.lhs += mpq_class(mat_count_closed(n, n, r, q) * pochhammer(q, a - r));
  }
  const mpz_class top = pochhammer(q, a - n);
  res.rhs = qpow(q, n * n) * mpq_class(top * top) / mpq_class(pochhammer(q, a - 2 * n));
  res.equal = res.lhs == res.rhs;
  return res;
}

bool rank_recurrence_check(int n, int r, std::int64_t q) {
  if (r < 1 || r > n) throw std::invalid_argument("rank_recurrence_check: r out of range");
  const mpq_class lhs = mat_count_closed(n, n, r, q);
  const mpq_class rhs = qpow(q, r) * mpq_class(mat_count_closed(n, n - 1, r, q)) +
                        (qpow(q, n) - qpow(q, r - 1)) *
                            mpq_class(mat_count_closed(n, n - 1, r - 1, q));
  return lhs == rhs;
}

}  // namespace twjac::counting

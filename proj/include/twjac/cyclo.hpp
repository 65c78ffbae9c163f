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

#ifndef TWJAC_CYCLO_HPP_
#define TWJAC_CYCLO_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace twjac {

// The L-th cyclotomic polynomial as integer coefficients, low to high.
// Results are cached; the returned reference stays valid for the process.
const std::vector<mpz_class>& cyclotomic_polynomial(std::uint64_t L);

/// Exact element of Q(zeta_L).
///
/// Stored as a sparse sum of c_k zeta_L^k with 0 <= k < L, i.e. an element of
/// the group ring Q[x]/(x^L - 1). Several representations name the same
/// number; equality and printing go through the canonical remainder modulo
/// the L-th cyclotomic polynomial. Arithmetic on mismatched moduli lifts both
/// operands to the lcm.
class CycNum {
 public:
  using Term = std::pair<std::uint64_t, mpq_class>;

  CycNum() = default;
  explicit CycNum(mpq_class value, std::uint64_t L = 1);

  static CycNum zeta(std::uint64_t L, std::int64_t k);

  std::uint64_t modulus() const { return L_; }
  const std::vector<Term>& terms() const { return terms_; }

  CycNum lifted(std::uint64_t L) const;
  CycNum conj() const;

  CycNum& operator+=(const CycNum& b);
  CycNum& operator-=(const CycNum& b);
  CycNum& operator*=(const CycNum& b);
  CycNum& operator*=(const mpq_class& c);
  CycNum& operator/=(const mpq_class& c);
  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator*(CycNum a, const mpq_class& c) { return a *= c; }
  friend CycNum operator/(CycNum a, const mpq_class& c) { return a /= c; }
  CycNum operator-() const;

  // Coefficients of the remainder modulo Phi_L, length phi(L).
  std::vector<mpq_class> canonical() const;
  bool is_zero() const;
  std::optional<mpq_class> as_rational() const;

  friend bool operator==(const CycNum& a, const CycNum& b);

  // e.g. "2 - zeta_7^3 + 1/2*zeta_7^5", in the canonical basis.
  std::string to_string() const;

 private:
  CycNum(std::uint64_t L, std::vector<Term> terms);
  void normalize();

  std::uint64_t L_ = 1;
  std::vector<Term> terms_;
};

// Sum of a*conj(a), divided by the count, over a list of values: the
// character inner product <chi, chi> when the list covers a group.
CycNum mean_square_norm(const std::vector<CycNum>& values);

}  // namespace twjac

#endif  // TWJAC_CYCLO_HPP_

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

#ifndef TWJAC_FFIELD_HPP_
#define TWJAC_FFIELD_HPP_

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace twjac {

// Element code: the base-p digits of the code are the coordinates of the
// element in the polynomial basis 1, x, x^2, ... of its level. 0 is zero and
// 1 is one at every level, and the prime subfield F_p is {0, ..., p-1}.
using Code = std::uint32_t;

// Thrown when an enumeration or table would exceed a configured limit.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
std::uint64_t ipow(std::uint64_t base, unsigned exp);

/// One field F_{p^D} in polynomial representation with exp/log tables.
///
/// Addition works on digit vectors, multiplication goes through the
/// discrete-log tables. All members are immutable after construction.
class FieldLevel {
 public:
  // Prime field F_p represented as F_p[x]/(x) with the least primitive root.
  static FieldLevel prime_field(int p);

  // Builds the field F_p[x]/(modulus) with the given generator. The
  // generator must have multiplicative order p^D - 1.
  FieldLevel(int p, std::vector<int> modulus, Code generator, int level);

  int characteristic() const { return p_; }
  int prime_degree() const { return degree_; }  // D = [F : F_p]
  int level() const { return level_; }
  std::uint64_t size() const { return size_; }
  std::uint64_t unit_order() const { return size_ - 1; }
  const std::vector<int>& modulus() const { return modulus_; }
  Code generator() const { return generator_; }

  Code add(Code a, Code b) const;
  Code sub(Code a, Code b) const { return add(a, neg(b)); }
  Code neg(Code a) const;
  Code mul(Code a, Code b) const {
    if (a == 0 || b == 0) return 0;
    std::uint64_t k = std::uint64_t{log_[a]} + log_[b];
    if (k >= unit_order()) k -= unit_order();
    return exp_[k];
  }
  Code inv(Code a) const;
  Code div(Code a, Code b) const { return mul(a, inv(b)); }
  Code pow(Code a, std::uint64_t k) const;
  // generator^k; k is reduced modulo the unit order.
  Code exp(std::uint64_t k) const { return exp_[k % unit_order()]; }
  // Discrete log to the generator; throws std::domain_error for zero.
  std::uint64_t log(Code a) const;
  // Reduces an integer into the prime subfield.
  Code from_int(long long c) const;
  // Tr_{F/F_p}(a) as an integer in [0, p).
  int absolute_trace(Code a) const;

  std::vector<int> digits(Code a) const;
  Code from_digits(const std::vector<int>& d) const;

  // Multiplication straight from the polynomial representation, used while
  // the tables are being built.
  static Code mul_slow(int p, const std::vector<int>& modulus, Code a, Code b);

 private:
  int p_;
  int degree_;
  int level_;
  std::uint64_t size_;
  std::vector<int> modulus_;
  Code generator_;
  std::vector<Code> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<Code> neg_;
  std::vector<std::uint16_t> add_table_;  // only for small fields
};

/// An element together with the tower level it lives on.
struct FFElem {
  int level = 1;
  Code code = 0;
  friend bool operator==(const FFElem&, const FFElem&) = default;
};

struct TowerOptions {
  std::uint64_t dlog_cap = std::uint64_t{1} << 24;
};

/// The lattice of fields F_{q^d}, d | m, over q = p^e. Level d has its own
/// defining polynomial of degree d*e over F_p; embeddings d -> d' send
/// gamma_d to gamma_{d'}^((q^{d'}-1)/(q^d-1)).
class FieldTower {
 public:
  static FieldTower make(int p, int e, int m, TowerOptions options = {});

  int p() const { return p_; }
  int e() const { return e_; }
  int m() const { return m_; }
  std::uint64_t q() const { return q_; }
  // Order of the cyclotomic ring all character values of this tower live in:
  // lcm(p, q^m - 1).
  std::uint64_t cyclotomic_modulus() const;

  std::vector<int> levels() const;
  bool has_level(int d) const { return levels_.count(d) != 0; }
  const FieldLevel& level(int d) const;
  const FieldLevel& base() const { return level(1); }
  const FieldLevel& top() const { return level(m_); }

  FFElem gamma(int d) const { return {d, level(d).generator()}; }
  std::uint64_t dlog(FFElem x) const;
  FFElem embed(FFElem x, int to) const;
  Code embed_code(Code x, int from, int to) const;
  FFElem frobenius(FFElem x, unsigned times = 1) const;
  // Root of an irreducible polynomial over F_q (level-1 coefficients, low to
  // high). Returns the root with the least discrete log at level deg f.
  FFElem find_root(const std::vector<Code>& f) const;

 private:
  FieldTower(int p, int e, int m) : p_(p), e_(e), m_(m) {}
  int p_;
  int e_;
  int m_;
  std::uint64_t q_ = 0;
  std::map<int, FieldLevel> levels_;
};

}  // namespace twjac

#endif  // TWJAC_FFIELD_HPP_

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

#ifndef TWJAC_CUSPIDAL_HPP_
#define TWJAC_CUSPIDAL_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "twjac/cyclo.hpp"
#include "twjac/ffield.hpp"
#include "twjac/matq.hpp"
#include "twjac/poly.hpp"

namespace twjac {

/// A character of F_{q^m}^x, gamma_m^j -> zeta_{q^m-1}^{k j}, whose Frobenius
/// orbit {k, kq, kq^2, ...} has exactly m members.
class RegularCharacter {
 public:
  // Throws std::invalid_argument if k is not regular at level m.
  // level = 0 means the top of the tower.
  static RegularCharacter make(const FieldTower& t, std::uint64_t index,
                               int level = 0);

  const FieldTower& tower() const { return *tower_; }
  int level() const { return level_; }
  std::uint64_t index() const { return index_; }
  // q^m - 1
  std::uint64_t order() const;
  RegularCharacter galois_conjugate(unsigned alpha) const;

 private:
  RegularCharacter(const FieldTower* t, int level, std::uint64_t index)
      : tower_(t), level_(level), index_(index) {}
  const FieldTower* tower_;
  int level_;
  std::uint64_t index_;
};

std::size_t frobenius_orbit_size(std::uint64_t k, std::uint64_t q,
                                 std::uint64_t modulus);
bool is_regular(const FieldTower& t, int level, std::uint64_t k);
// Least index of every regular Frobenius orbit, ascending.
std::vector<std::uint64_t> regular_characters(const FieldTower& t, int level = 0);

// theta(x) for x != 0 at a level dividing theta's level, as an element of
// Q(zeta_L) with L the tower's cyclotomic modulus.
CycNum theta_eval(const RegularCharacter& theta, FFElem x);

/// The data the cuspidal character formula depends on: the characteristic
/// polynomial c = f^k, d = deg f, a root z of f and t = dim ker(g - z).
struct CuspidalClass {
  Poly charpoly;
  bool vanishes = true;
  int degree = 0;
  int kernel_dim = 0;
  FFElem root;
  // (charpoly, t): determines the character value.
  std::string key() const;
};

/// Computes CuspidalClass data, caching the primary decomposition and root
/// of every characteristic polynomial it has seen. Safe to share between
/// threads.
class Classifier {
 public:
  explicit Classifier(const FieldTower& t) : tower_(&t) {}
  Classifier(const Classifier&) = delete;
  Classifier& operator=(const Classifier&) = delete;

  // g must be invertible, over the base field.
  CuspidalClass operator()(const MatF& g) const;
  const FieldTower& tower() const { return *tower_; }

 private:
  struct Primary {
    bool is_power = false;
    int degree = 0;
    int exponent = 0;
    FFElem root;
  };
  Primary primary(const Poly& c) const;

  const FieldTower* tower_;
  mutable std::shared_mutex mu_;
  mutable std::map<Poly, Primary> cache_;
};

CuspidalClass classify(const FieldTower& t, const MatF& g);

// (-1)^{m-1} [sum_{alpha<d} theta(z^{q^alpha})] prod_{i=1}^{t-1} (1 - q^{d i})
CycNum cuspidal_formula(const RegularCharacter& theta, int degree,
                        int kernel_dim, FFElem root);
CycNum cuspidal_value(const RegularCharacter& theta, const CuspidalClass& c);
// Value of the cuspidal character attached to theta at g in GL(m, F_q).
// Throws std::invalid_argument for singular g.
CycNum cuspidal_char(const RegularCharacter& theta, const MatF& g);

/// Memo of cuspidal values for one theta, keyed by CuspidalClass::key().
/// Concurrent insert-if-absent; values are pure so races are benign.
class ClassFunctionTable {
 public:
  explicit ClassFunctionTable(const RegularCharacter& theta) : theta_(theta) {}
  CycNum value(const CuspidalClass& c) const;
  std::size_t size() const;
  const RegularCharacter& theta() const { return theta_; }

 private:
  RegularCharacter theta_;
  mutable std::shared_mutex mu_;
  mutable std::unordered_map<std::string, CycNum> memo_;
};

// -(q;q)_{2n-1-r}: the value at [[I, X], [0, I]] with rank X = r.
CycNum unipotent_block_value(const RegularCharacter& theta, int n, int r);
CycNum unipotent_block_char(const RegularCharacter& theta, const MatF& x);

}  // namespace twjac

#endif  // TWJAC_CUSPIDAL_HPP_

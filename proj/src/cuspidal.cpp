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

#include <mutex>
#include <set>
#include <stdexcept>

#include "twjac/counting.hpp"

namespace twjac {

RegularCharacter RegularCharacter::make(const FieldTower& t, std::uint64_t index,
                                        int level) {
  if (level == 0) level = t.m();
  const std::uint64_t ord = t.level(level).unit_order();
  index %= ord;
  if (!is_regular(t, level, index)) {
    throw std::invalid_argument("character index " + std::to_string(index) +
                                " is not regular at level " + std::to_string(level));
  }
  return RegularCharacter(&t, level, index);
}

std::uint64_t RegularCharacter::order() const {
  return tower_->level(level_).unit_order();
}

RegularCharacter RegularCharacter::galois_conjugate(unsigned alpha) const {
  std::uint64_t k = index_;
  for (unsigned i = 0; i < alpha; ++i) k = (k * tower_->q()) % order();
  return RegularCharacter(tower_, level_, k);
}

std::size_t frobenius_orbit_size(std::uint64_t k, std::uint64_t q,
                                 std::uint64_t modulus) {
  std::set<std::uint64_t> orbit;
  std::uint64_t x = k % modulus;
  while (orbit.insert(x).second) x = (x * q) % modulus;
  return orbit.size();
}

bool is_regular(const FieldTower& t, int level, std::uint64_t k) {
  const std::uint64_t ord = t.level(level).unit_order();
  return frobenius_orbit_size(k, t.q(), ord) == static_cast<std::size_t>(level);
}

std::vector<std::uint64_t> regular_characters(const FieldTower& t, int level) {
  if (level == 0) level = t.m();
  const std::uint64_t ord = t.level(level).unit_order();
  std::vector<char> seen(ord, 0);
  std::vector<std::uint64_t> reps;
  for (std::uint64_t k = 0; k < ord; ++k) {
    if (seen[k]) continue;
    std::uint64_t x = k;
    std::size_t size = 0;
    while (!seen[x]) {
      seen[x] = 1;
      ++size;
      x = (x * t.q()) % ord;
    }
    if (size == static_cast<std::size_t>(level)) reps.push_back(k);
  }
  return reps;
}

namespace {

// zeta_{q^m-1}^e inside the tower's cyclotomic ring.
CycNum theta_root(const RegularCharacter& theta, std::uint64_t e) {
  const std::uint64_t L = theta.tower().cyclotomic_modulus();
  const std::uint64_t ord = theta.order();
  return CycNum::zeta(L, static_cast<std::int64_t>((e % ord) * (L / ord)));
}

}  // namespace

CycNum theta_eval(const RegularCharacter& theta, FFElem x) {
  const FieldTower& t = theta.tower();
  if (x.code == 0) throw std::domain_error("theta is not defined at zero");
  const FFElem y = t.embed(x, theta.level());
  const auto e = static_cast<unsigned __int128>(theta.index()) * t.dlog(y);
  return theta_root(theta, static_cast<std::uint64_t>(e % theta.order()));
}

std::string CuspidalClass::key() const {
  std::string k;
  for (Code c : charpoly) {
    k += std::to_string(c);
    k += ',';
  }
  k += '|';
  k += std::to_string(kernel_dim);
  return k;
}

Classifier::Primary Classifier::primary(const Poly& c) const {
  {
    std::shared_lock lock(mu_);
    auto it = cache_.find(c);
    if (it != cache_.end()) return it->second;
  }
  Primary p;
  if (auto pp = poly::primary_decomposition(tower_->base(), c)) {
    p.is_power = true;
    p.degree = poly::degree(pp->factor);
    p.exponent = pp->exponent;
    p.root = tower_->find_root(pp->factor);
  }
  std::unique_lock lock(mu_);
  cache_.emplace(c, p);
  return p;
}

CuspidalClass Classifier::operator()(const MatF& g) const {
  CuspidalClass out;
  out.charpoly = charpoly(tower_->base(), g);
  if (out.charpoly.empty() || out.charpoly.front() == 0) {
    throw std::invalid_argument("cuspidal character: matrix is singular");
  }
  const Primary p = primary(out.charpoly);
  if (!p.is_power) return out;
  out.vanishes = false;
  out.degree = p.degree;
  out.root = p.root;
  out.kernel_dim = p.exponent == 1 ? 1 : kernel_dim(*tower_, g, p.root);
  return out;
}

CuspidalClass classify(const FieldTower& t, const MatF& g) {
  Classifier c(t);
  return c(g);
}

CycNum cuspidal_formula(const RegularCharacter& theta, int degree,
                        int kernel_dim, FFElem root) {
  const FieldTower& t = theta.tower();
  const int m = theta.level();
  CycNum galois_sum(0, t.cyclotomic_modulus());
  FFElem z = root;
  for (int a = 0; a < degree; ++a) {
    galois_sum += theta_eval(theta, z);
    z = t.frobenius(z);
  }
  mpz_class factor = (m - 1) % 2 == 0 ? 1 : -1;
  mpz_class qd;
  mpz_ui_pow_ui(qd.get_mpz_t(), t.q(), static_cast<unsigned long>(degree));
  mpz_class power = 1;
  for (int i = 1; i < kernel_dim; ++i) {
    power *= qd;
    factor *= 1 - power;
  }
  return galois_sum * mpq_class(factor);
}

CycNum cuspidal_value(const RegularCharacter& theta, const CuspidalClass& c) {
  if (c.vanishes) return CycNum(0, theta.tower().cyclotomic_modulus());
  return cuspidal_formula(theta, c.degree, c.kernel_dim, c.root);
}

CycNum cuspidal_char(const RegularCharacter& theta, const MatF& g) {
  if (g.rows() != theta.level() || !g.is_square()) {
    throw std::invalid_argument("cuspidal_char: matrix size must equal the level");
  }
  return cuspidal_value(theta, classify(theta.tower(), g));
}

CycNum ClassFunctionTable::value(const CuspidalClass& c) const {
  if (c.vanishes) return CycNum(0, theta_.tower().cyclotomic_modulus());
  const std::string key = c.key();
  {
    std::shared_lock lock(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  CycNum v = cuspidal_value(theta_, c);
  std::unique_lock lock(mu_);
  memo_.insert_or_assign(key, v);
  return v;
}

std::size_t ClassFunctionTable::size() const {
  std::shared_lock lock(mu_);
  return memo_.size();
}

CycNum unipotent_block_value(const RegularCharacter& theta, int n, int r) {
  if (theta.level() != 2 * n) {
    throw std::invalid_argument("unipotent_block_value: theta must live at level 2n");
  }
  const auto q = static_cast<std::int64_t>(theta.tower().q());
  return CycNum(mpq_class(-counting::pochhammer(q, 2 * n - 1 - r)),
                theta.tower().cyclotomic_modulus());
}

CycNum unipotent_block_char(const RegularCharacter& theta, const MatF& x) {
  return unipotent_block_value(theta, x.rows(), rank(theta.tower(), x));
}

}  // namespace twjac

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

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace twjac {

namespace {

using IntPoly = std::vector<mpz_class>;

// Exact quotient of a by the monic polynomial b.
IntPoly exact_divide(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  IntPoly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const mpz_class c = a[i];
    q[i - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (a[i] != 0) throw std::logic_error("cyclotomic division not exact");
  }
  return q;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::uint64_t, IntPoly>& cache() {
  static std::map<std::uint64_t, IntPoly> c;
  return c;
}

}  // namespace

const std::vector<mpz_class>& cyclotomic_polynomial(std::uint64_t L) {
  if (L == 0) throw std::invalid_argument("cyclotomic modulus must be >= 1");
  {
    std::lock_guard lock(cache_mutex());
    auto it = cache().find(L);
    if (it != cache().end()) return it->second;
  }
  IntPoly f(L + 1, 0);
  f[0] = -1;
  f[L] = 1;
  for (std::uint64_t d = 1; d < L; ++d) {
    if (L % d == 0) f = exact_divide(std::move(f), cyclotomic_polynomial(d));
  }
  std::lock_guard lock(cache_mutex());
  return cache().emplace(L, std::move(f)).first->second;
}

CycNum::CycNum(mpq_class value, std::uint64_t L) : L_(L) {
  if (L == 0) throw std::invalid_argument("cyclotomic modulus must be >= 1");
  if (value != 0) terms_.emplace_back(0, std::move(value));
}

CycNum::CycNum(std::uint64_t L, std::vector<Term> terms)
    : L_(L), terms_(std::move(terms)) {
  normalize();
}

CycNum CycNum::zeta(std::uint64_t L, std::int64_t k) {
  if (L == 0) throw std::invalid_argument("zeta: modulus must be >= 1");
  const auto sL = static_cast<std::int64_t>(L);
  const std::int64_t r = ((k % sL) + sL) % sL;
  return CycNum(L, {{static_cast<std::uint64_t>(r), mpq_class(1)}});
}

void CycNum::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      out.push_back(std::move(t));
    }
  }
  std::erase_if(out, [](const Term& t) { return t.second == 0; });
  terms_ = std::move(out);
}

CycNum CycNum::lifted(std::uint64_t L) const {
  if (L % L_ != 0) {
    throw std::invalid_argument("lifted: target modulus is not a multiple");
  }
  if (L == L_) return *this;
  const std::uint64_t s = L / L_;
  std::vector<Term> t = terms_;
  for (auto& [k, c] : t) k *= s;
  return CycNum(L, std::move(t));
}

CycNum CycNum::conj() const {
  std::vector<Term> t = terms_;
  for (auto& [k, c] : t) k = (L_ - k) % L_;
  return CycNum(L_, std::move(t));
}

CycNum& CycNum::operator+=(const CycNum& b) {
  if (b.L_ != L_) {
    const std::uint64_t L = std::lcm(L_, b.L_);
    *this = lifted(L);
    return *this += b.lifted(L);
  }
  terms_.insert(terms_.end(), b.terms_.begin(), b.terms_.end());
  normalize();
  return *this;
}

CycNum CycNum::operator-() const {
  std::vector<Term> t = terms_;
  for (auto& [k, c] : t) c = -c;
  return CycNum(L_, std::move(t));
}

CycNum& CycNum::operator-=(const CycNum& b) { return *this += -b; }

CycNum& CycNum::operator*=(const CycNum& b) {
  if (b.L_ != L_) {
    const std::uint64_t L = std::lcm(L_, b.L_);
    *this = lifted(L);
    return *this *= b.lifted(L);
  }
  std::vector<Term> out;
  out.reserve(terms_.size() * b.terms_.size());
  for (const auto& [i, x] : terms_) {
    for (const auto& [j, y] : b.terms_) {
      out.emplace_back((i + j) % L_, x * y);
    }
  }
  terms_ = std::move(out);
  normalize();
  return *this;
}

CycNum& CycNum::operator*=(const mpq_class& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

CycNum& CycNum::operator/=(const mpq_class& c) {
  if (c == 0) throw std::domain_error("CycNum division by zero");
  for (auto& [k, v] : terms_) v /= c;
  return *this;
}

std::vector<mpq_class> CycNum::canonical() const {
  const IntPoly& phi = cyclotomic_polynomial(L_);
  const std::size_t deg = phi.size() - 1;
  mpz_class den = 1;
  for (const auto& [k, c] : terms_) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  std::size_t top = terms_.empty() ? 0 : terms_.back().first + 1;
  IntPoly a(std::max(top, deg), 0);
  for (const auto& [k, c] : terms_) a[k] = c.get_num() * (den / c.get_den());
  for (std::size_t i = a.size(); i-- > deg;) {
    if (a[i] == 0) continue;
    const mpz_class c = a[i];
    for (std::size_t j = 0; j <= deg; ++j) a[i - deg + j] -= c * phi[j];
  }
  std::vector<mpq_class> out(deg);
  for (std::size_t i = 0; i < deg; ++i) {
    out[i] = mpq_class(a[i], den);
    out[i].canonicalize();
  }
  return out;
}

bool CycNum::is_zero() const {
  if (terms_.empty()) return true;
  for (const auto& c : canonical()) {
    if (c != 0) return false;
  }
  return true;
}

std::optional<mpq_class> CycNum::as_rational() const {
  const auto c = canonical();
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (c[i] != 0) return std::nullopt;
  }
  return c.empty() ? mpq_class(0) : c[0];
}

bool operator==(const CycNum& a, const CycNum& b) { return (a - b).is_zero(); }

std::string CycNum::to_string() const {
  const auto c = canonical();
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    mpq_class v = c[k];
    if (first) {
      if (v < 0) os << "-";
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    first = false;
    v = abs(v);
    if (k == 0) {
      os << v.get_str();
      continue;
    }
    if (v != 1) os << v.get_str() << "*";
    os << "zeta_" << L_;
    if (k > 1) os << "^" << k;
  }
  if (first) os << "0";
  return os.str();
}

CycNum mean_square_norm(const std::vector<CycNum>& values) {
  CycNum acc;
  for (const auto& v : values) acc += v * v.conj();
  if (!values.empty()) acc /= mpq_class(values.size());
  return acc;
}

}  // namespace twjac

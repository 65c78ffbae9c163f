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

#include "twjac/ffield.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "twjac/poly.hpp"

namespace twjac {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

namespace {

std::vector<int> to_digits(Code a, int p, int n) {
  std::vector<int> d(n, 0);
  for (int i = 0; i < n; ++i) {
    d[i] = static_cast<int>(a % p);
    a /= p;
  }
  return d;
}

Code from_digit_vector(const std::vector<int>& d, int p) {
  Code a = 0;
  for (std::size_t i = d.size(); i-- > 0;) a = a * p + d[i];
  return a;
}

Code pow_slow(int p, const std::vector<int>& modulus, Code a, std::uint64_t k) {
  Code r = 1;
  while (k != 0) {
    if (k & 1) r = FieldLevel::mul_slow(p, modulus, r, a);
    k >>= 1;
    if (k != 0) a = FieldLevel::mul_slow(p, modulus, a, a);
  }
  return r;
}

bool is_primitive_slow(int p, const std::vector<int>& modulus, Code g,
                       std::uint64_t order,
                       const std::vector<std::uint64_t>& factors) {
  if (g == 0) return false;
  if (pow_slow(p, modulus, g, order) != 1) return false;
  for (std::uint64_t r : factors) {
    if (pow_slow(p, modulus, g, order / r) == 1) return false;
  }
  return true;
}

// Least monic irreducible of the given degree over F_p, ordering candidates
// by the integer code of their non-leading coefficients.
std::vector<int> least_irreducible(const FieldLevel& fp, int degree) {
  const int p = fp.characteristic();
  const std::uint64_t count = ipow(p, degree);
  for (std::uint64_t c = 0; c < count; ++c) {
    Poly f = {};
    std::uint64_t v = c;
    for (int i = 0; i < degree; ++i) {
      f.push_back(static_cast<Code>(v % p));
      v /= p;
    }
    f.push_back(1);
    if (poly::is_irreducible(fp, f)) {
      return std::vector<int>(f.begin(), f.end());
    }
  }
  throw std::logic_error("no irreducible polynomial found");
}

}  // namespace

Code FieldLevel::mul_slow(int p, const std::vector<int>& modulus, Code a,
                          Code b) {
  const int n = static_cast<int>(modulus.size()) - 1;
  std::vector<int> x = to_digits(a, p, n);
  std::vector<int> y = to_digits(b, p, n);
  std::vector<int> prod(2 * n, 0);
  for (int i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
  }
  for (int i = 2 * n - 1; i >= n; --i) {
    const int c = prod[i];
    if (c == 0) continue;
    // x^i = x^(i-n) * (x^n) and x^n = -(lower terms of the monic modulus)
    for (int j = 0; j < n; ++j) {
      prod[i - n + j] = ((prod[i - n + j] - c * modulus[j]) % p + p) % p;
    }
    prod[i] = 0;
  }
  prod.resize(n);
  return from_digit_vector(prod, p);
}

FieldLevel FieldLevel::prime_field(int p) {
  if (!is_prime(static_cast<std::uint64_t>(p))) {
    throw std::invalid_argument("characteristic " + std::to_string(p) +
                                " is not prime");
  }
  const std::vector<int> modulus = {0, 1};
  const auto factors = prime_factors(p - 1);
  for (Code g = 1; g < static_cast<Code>(p); ++g) {
    if (is_primitive_slow(p, modulus, g, p - 1, factors)) {
      return FieldLevel(p, modulus, g, 1);
    }
  }
  throw std::logic_error("no primitive root");
}

FieldLevel::FieldLevel(int p, std::vector<int> modulus, Code generator,
                       int level)
    : p_(p),
      degree_(static_cast<int>(modulus.size()) - 1),
      level_(level),
      size_(ipow(p, static_cast<unsigned>(modulus.size() - 1))),
      modulus_(std::move(modulus)),
      generator_(generator) {
  exp_.assign(size_ - 1, 0);
  log_.assign(size_, 0);
  Code cur = 1;
  for (std::uint64_t i = 0; i + 1 < size_; ++i) {
    if (i > 0 && cur == 1) {
      throw std::invalid_argument("FieldLevel: generator is not primitive");
    }
    exp_[i] = cur;
    log_[cur] = static_cast<std::uint32_t>(i);
    cur = mul_slow(p_, modulus_, cur, generator_);
  }
  if (cur != 1) throw std::invalid_argument("FieldLevel: bad generator");

  neg_.resize(size_);
  for (Code a = 0; a < size_; ++a) {
    std::vector<int> d = digits(a);
    for (int& v : d) v = (p_ - v) % p_;
    neg_[a] = from_digits(d);
  }
  if (p_ != 2 && size_ <= 256) {
    add_table_.resize(size_ * size_);
    for (Code a = 0; a < size_; ++a) {
      std::vector<int> da = digits(a);
      for (Code b = 0; b < size_; ++b) {
        std::vector<int> db = digits(b);
        for (int i = 0; i < degree_; ++i) db[i] = (db[i] + da[i]) % p_;
        add_table_[a * size_ + b] = static_cast<std::uint16_t>(from_digits(db));
      }
    }
  }
}

Code FieldLevel::add(Code a, Code b) const {
  if (p_ == 2) return a ^ b;
  if (!add_table_.empty()) return add_table_[a * size_ + b];
  Code r = 0;
  Code place = 1;
  for (int i = 0; i < degree_; ++i) {
    r += static_cast<Code>((a % p_ + b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return r;
}

Code FieldLevel::neg(Code a) const { return neg_[a]; }

Code FieldLevel::inv(Code a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  const std::uint64_t k = log_[a];
  return exp_[k == 0 ? 0 : unit_order() - k];
}

Code FieldLevel::pow(Code a, std::uint64_t k) const {
  if (a == 0) return k == 0 ? 1 : 0;
  return exp_[(static_cast<unsigned __int128>(log_[a]) * k) % unit_order()];
}

std::uint64_t FieldLevel::log(Code a) const {
  if (a == 0) throw std::domain_error("discrete log of zero");
  return log_[a];
}

Code FieldLevel::from_int(long long c) const {
  return static_cast<Code>(((c % p_) + p_) % p_);
}

int FieldLevel::absolute_trace(Code a) const {
  Code s = 0;
  Code c = a;
  for (int i = 0; i < degree_; ++i) {
    s = add(s, c);
    c = pow(c, static_cast<std::uint64_t>(p_));
  }
  if (s >= static_cast<Code>(p_)) throw std::logic_error("trace outside F_p");
  return static_cast<int>(s);
}

std::vector<int> FieldLevel::digits(Code a) const {
  return to_digits(a, p_, degree_);
}

Code FieldLevel::from_digits(const std::vector<int>& d) const {
  return from_digit_vector(d, p_);
}

FieldTower FieldTower::make(int p, int e, int m, TowerOptions options) {
  if (!is_prime(static_cast<std::uint64_t>(p))) {
    throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  }
  if (e < 1 || m < 1) throw std::invalid_argument("e and m must be positive");
  const std::uint64_t top_size = ipow(p, static_cast<unsigned>(e * m));
  if (top_size - 1 > options.dlog_cap) {
    throw CapExceeded("q^m - 1 = " + std::to_string(top_size - 1) +
                      " exceeds the discrete-log table cap");
  }
  FieldTower t(p, e, m);
  t.q_ = ipow(p, static_cast<unsigned>(e));
  const FieldLevel fp = FieldLevel::prime_field(p);

  // Top level: least irreducible modulus, least primitive element.
  const std::vector<int> top_mod = least_irreducible(fp, e * m);
  const auto factors = prime_factors(top_size - 1);
  Code top_gen = 0;
  for (Code g = 1; g < top_size; ++g) {
    if (is_primitive_slow(p, top_mod, g, top_size - 1, factors)) {
      top_gen = g;
      break;
    }
  }
  FieldLevel top(p, top_mod, top_gen, m);

  for (int d = 1; d <= m; ++d) {
    if (m % d != 0) continue;
    if (d == m) continue;
    const int deg = d * e;
    const std::uint64_t size = ipow(p, static_cast<unsigned>(deg));
    const std::vector<int> mod = least_irreducible(fp, deg);
    // Minimal polynomial over F_p of beta = gamma_m^((q^m-1)/(q^d-1)),
    // computed in the top level; its coefficients lie in F_p.
    const Code beta = top.exp((top_size - 1) / (size - 1));
    Poly minpoly = {1};
    Code conj = beta;
    for (int i = 0; i < deg; ++i) {
      minpoly = poly::mul(top, minpoly, Poly{top.neg(conj), 1});
      conj = top.pow(conj, static_cast<std::uint64_t>(p));
    }
    for (Code c : minpoly) {
      if (c >= static_cast<Code>(p)) {
        throw std::logic_error("minimal polynomial not over F_p");
      }
    }
    Code gen = 0;
    for (Code z = 1; z < size && gen == 0; ++z) {
      Code acc = 0;
      for (std::size_t i = minpoly.size(); i-- > 0;) {
        acc = FieldLevel::mul_slow(p, mod, acc, z);
        // minpoly coefficients are prime-field constants: add digit-wise.
        std::vector<int> da = to_digits(acc, p, deg);
        da[0] = (da[0] + static_cast<int>(minpoly[i])) % p;
        acc = from_digit_vector(da, p);
      }
      if (acc == 0) gen = z;
    }
    if (gen == 0) throw std::logic_error("subfield generator not found");
    t.levels_.emplace(d, FieldLevel(p, mod, gen, d));
  }
  t.levels_.emplace(m, std::move(top));
  return t;
}

std::uint64_t FieldTower::cyclotomic_modulus() const {
  return std::lcm(static_cast<std::uint64_t>(p_), top().unit_order());
}

std::vector<int> FieldTower::levels() const {
  std::vector<int> out;
  for (const auto& [d, _] : levels_) out.push_back(d);
  return out;
}

const FieldLevel& FieldTower::level(int d) const {
  auto it = levels_.find(d);
  if (it == levels_.end()) {
    throw std::invalid_argument("level " + std::to_string(d) +
                                " is not in the tower");
  }
  return it->second;
}

std::uint64_t FieldTower::dlog(FFElem x) const { return level(x.level).log(x.code); }

Code FieldTower::embed_code(Code x, int from, int to) const {
  if (to % from != 0) {
    throw std::invalid_argument("embed: level " + std::to_string(from) +
                                " does not divide " + std::to_string(to));
  }
  if (x == 0 || from == to) return x;
  const FieldLevel& src = level(from);
  const FieldLevel& dst = level(to);
  const std::uint64_t ratio = dst.unit_order() / src.unit_order();
  return dst.exp(src.log(x) * ratio);
}

FFElem FieldTower::embed(FFElem x, int to) const {
  return {to, embed_code(x.code, x.level, to)};
}

FFElem FieldTower::frobenius(FFElem x, unsigned times) const {
  const FieldLevel& k = level(x.level);
  Code c = x.code;
  for (unsigned i = 0; i < times; ++i) c = k.pow(c, q_);
  return {x.level, c};
}

FFElem FieldTower::find_root(const std::vector<Code>& f) const {
  const int d = poly::degree(f);
  if (d < 1) throw std::invalid_argument("find_root: degree < 1");
  if (m_ % d != 0) {
    throw std::invalid_argument("find_root: degree " + std::to_string(d) +
                                " does not divide " + std::to_string(m_));
  }
  if (!poly::is_irreducible(base(), f)) {
    throw std::invalid_argument("find_root: polynomial is reducible");
  }
  const FieldLevel& k = level(d);
  Poly lifted(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) lifted[i] = embed_code(f[i], 1, d);
  for (std::uint64_t j = 0; j < k.unit_order(); ++j) {
    const Code z = k.exp(j);
    if (poly::eval(k, lifted, z) == 0) return {d, z};
  }
  throw std::logic_error("find_root: irreducible polynomial has no root");
}

}  // namespace twjac

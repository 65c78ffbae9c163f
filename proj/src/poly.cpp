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

#include "twjac/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace twjac::poly {

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly x() { return {0, 1}; }

Poly constant(Code c) { return c == 0 ? Poly{} : Poly{c}; }

Poly add(const FieldLevel& k, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    Code u = i < a.size() ? a[i] : 0;
    Code v = i < b.size() ? b[i] : 0;
    r[i] = k.add(u, v);
  }
  trim(r);
  return r;
}

Poly sub(const FieldLevel& k, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    Code u = i < a.size() ? a[i] : 0;
    Code v = i < b.size() ? b[i] : 0;
    r[i] = k.sub(u, v);
  }
  trim(r);
  return r;
}

Poly mul(const FieldLevel& k, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = k.add(r[i + j], k.mul(a[i], b[j]));
    }
  }
  trim(r);
  return r;
}

Poly scale(const FieldLevel& k, const Poly& a, Code c) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = k.mul(a[i], c);
  trim(r);
  return r;
}

std::pair<Poly, Poly> divmod(const FieldLevel& k, const Poly& a,
                             const Poly& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  Poly rem = a;
  trim(rem);
  if (rem.size() < b.size()) return {Poly{}, rem};
  Poly quo(rem.size() - b.size() + 1, 0);
  const Code lead_inv = k.inv(b.back());
  for (std::size_t i = rem.size(); i-- >= b.size();) {
    const Code c = k.mul(rem[i], lead_inv);
    quo[i - (b.size() - 1)] = c;
    if (c == 0) continue;
    const std::size_t shift = i - (b.size() - 1);
    for (std::size_t j = 0; j < b.size(); ++j) {
      rem[shift + j] = k.sub(rem[shift + j], k.mul(c, b[j]));
    }
  }
  trim(quo);
  trim(rem);
  return {quo, rem};
}

Poly mod(const FieldLevel& k, const Poly& a, const Poly& b) {
  return divmod(k, a, b).second;
}

Poly monic(const FieldLevel& k, const Poly& a) {
  if (a.empty()) return a;
  return scale(k, a, k.inv(a.back()));
}

Poly gcd(const FieldLevel& k, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(k, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(k, a);
}

Poly pow(const FieldLevel& k, const Poly& a, unsigned e) {
  Poly r = {1};
  for (unsigned i = 0; i < e; ++i) r = mul(k, r, a);
  return r;
}

Poly powmod(const FieldLevel& k, Poly base, std::uint64_t e, const Poly& m) {
  Poly r = mod(k, {1}, m);
  base = mod(k, base, m);
  while (e != 0) {
    if (e & 1) r = mod(k, mul(k, r, base), m);
    e >>= 1;
    if (e != 0) base = mod(k, mul(k, base, base), m);
  }
  return r;
}

Code eval(const FieldLevel& k, const Poly& f, Code x) {
  Code acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = k.add(k.mul(acc, x), f[i]);
  return acc;
}

bool is_irreducible(const FieldLevel& k, const Poly& f) {
  const int n = degree(f);
  if (n < 1) return false;
  if (n == 1) return true;
  const Poly fm = monic(k, f);
  Poly h = x();
  for (int i = 1; i <= n / 2; ++i) {
    h = powmod(k, h, k.size(), fm);
    if (degree(gcd(k, sub(k, h, x()), fm)) > 0) return false;
  }
  for (int i = n / 2 + 1; i <= n; ++i) h = powmod(k, h, k.size(), fm);
  return h == mod(k, x(), fm);
}

std::optional<PrimaryPower> primary_decomposition(const FieldLevel& k,
                                                  const Poly& c) {
  const int n = degree(c);
  if (n < 1) throw std::invalid_argument("primary_decomposition: degree < 1");
  const Poly cm = monic(k, c);
  // The smallest i with gcd(x^(q^i) - x, c) != 1 is the least degree of an
  // irreducible factor, and that gcd is the product of those factors.
  Poly h = x();
  for (int i = 1; i <= n; ++i) {
    h = powmod(k, h, k.size(), cm);
    Poly g = gcd(k, sub(k, h, x()), cm);
    if (degree(g) == 0) continue;
    if (degree(g) != i || n % i != 0) return std::nullopt;
    const int e = n / i;
    if (pow(k, g, static_cast<unsigned>(e)) != cm) return std::nullopt;
    return PrimaryPower{g, e};
  }
  return std::nullopt;
}

std::string to_string(const Poly& f) {
  if (f.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = f.size(); i-- > 0;) {
    if (f[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (f[i] != 1 || i == 0) os << f[i];
    if (i > 0) {
      if (f[i] != 1) os << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace twjac::poly

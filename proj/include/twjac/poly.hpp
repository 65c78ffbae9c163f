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

#ifndef TWJAC_POLY_HPP_
#define TWJAC_POLY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twjac/ffield.hpp"

namespace twjac {

// Polynomial over a field level, coefficients low to high. The zero
// polynomial is the empty vector; nonzero polynomials have a nonzero
// leading coefficient.
using Poly = std::vector<Code>;

namespace poly {

void trim(Poly& f);
int degree(const Poly& f);
Poly x();
Poly constant(Code c);
Poly add(const FieldLevel& k, const Poly& a, const Poly& b);
Poly sub(const FieldLevel& k, const Poly& a, const Poly& b);
Poly mul(const FieldLevel& k, const Poly& a, const Poly& b);
Poly scale(const FieldLevel& k, const Poly& a, Code c);
std::pair<Poly, Poly> divmod(const FieldLevel& k, const Poly& a, const Poly& b);
Poly mod(const FieldLevel& k, const Poly& a, const Poly& b);
Poly monic(const FieldLevel& k, const Poly& a);
Poly gcd(const FieldLevel& k, Poly a, Poly b);
Poly pow(const FieldLevel& k, const Poly& a, unsigned e);
Poly powmod(const FieldLevel& k, Poly base, std::uint64_t e, const Poly& m);
Code eval(const FieldLevel& k, const Poly& f, Code x);

// f irreducible over k: no factor shared with x^(|k|^i) - x for i <= deg/2,
// and x^(|k|^deg) == x mod f.
bool is_irreducible(const FieldLevel& k, const Poly& f);

// Writes a monic c as f^k with f irreducible, or returns nullopt when c has
// two distinct irreducible factors.
struct PrimaryPower {
  Poly factor;
  int exponent = 0;
};
std::optional<PrimaryPower> primary_decomposition(const FieldLevel& k,
                                                  const Poly& c);

std::string to_string(const Poly& f);

}  // namespace poly
}  // namespace twjac

#endif  // TWJAC_POLY_HPP_

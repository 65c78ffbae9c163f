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

#ifndef TWJAC_GROUPS_HPP_
#define TWJAC_GROUPS_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twjac/ffield.hpp"
#include "twjac/matq.hpp"

namespace twjac {

struct EnumOptions {
  std::uint64_t cap = std::uint64_t{1} << 22;
};

// |GL(k, q)| = prod_{j<k} (q^k - q^j).
mpz_class gl_order(int k, std::uint64_t q);

/// The groups and sets enumerated by the verification code. Elements are
/// always returned as square matrices over F_q: k x k for GL, U, the
/// mirabolics and the full matrix space, 2n x 2n for the Levi-type groups.
class GroupSpec {
 public:
  enum class Kind {
    kFullMatrixSpace,  // M(n, F)
    kGL,               // GL(k, F)
    kU,                // upper unitriangular, k x k
    kN,                // [[I, X], [0, I]], 2n x 2n
    kMirabolic,        // last row (0, ..., 0, 1), n x n
    kMirabolicConj,    // w0 M1^T w0^{-1}: first column e_1, n x n
    kUA,               // diag(u1, u2), u_i in U(n)
    kHA,               // diag(m1, m2), m1 mirabolic, m2 in its conjugate
    kMPsiA,            // stabilizer of psi_A in the Levi M
    kPPsiA,            // M_psiA * N
  };

  static GroupSpec full_matrix_space(int n) { return {Kind::kFullMatrixSpace, n}; }
  static GroupSpec gl(int k) { return {Kind::kGL, k}; }
  static GroupSpec u(int k) { return {Kind::kU, k}; }
  static GroupSpec n_radical(int n) { return {Kind::kN, n}; }
  static GroupSpec mirabolic(int n) { return {Kind::kMirabolic, n}; }
  static GroupSpec mirabolic_conj(int n) { return {Kind::kMirabolicConj, n}; }
  static GroupSpec u_a(int n) { return {Kind::kUA, n}; }
  static GroupSpec h_a(int n) { return {Kind::kHA, n}; }
  static GroupSpec m_psi(const MatF& a) { return {Kind::kMPsiA, a.rows(), a}; }
  static GroupSpec p_psi(const MatF& a) { return {Kind::kPPsiA, a.rows(), a}; }

  Kind kind() const { return kind_; }
  int n() const { return n_; }
  const std::optional<MatF>& a() const { return a_; }
  // Side length of the matrices this spec enumerates.
  int matrix_size() const;
  std::string name() const;

  // Closed-form order. For M_psiA / P_psiA with a general A the order is
  // only known by enumeration, and nullopt is returned.
  std::optional<mpz_class> order(std::uint64_t q) const;

  std::vector<MatF> elements(const FieldTower& t, EnumOptions opt = {}) const;
  bool contains(const FieldTower& t, const MatF& g) const;

 private:
  GroupSpec(Kind k, int n, std::optional<MatF> a = std::nullopt)
      : kind_(k), n_(n), a_(std::move(a)) {}

  Kind kind_;
  int n_;
  std::optional<MatF> a_;
};

// E_{1n}: the single 1 in the top-right corner.
MatF corner_matrix(int n);
// E_{11}.
MatF e11_matrix(int n);
bool is_corner(const MatF& a);

// All n x m matrices over F_q in index order; index i has entry (r, c) equal
// to base-q digit r*m + c of i.
MatF matrix_from_index(std::uint64_t index, int rows, int cols, std::uint64_t q);

// Stabilizer of psi_A in M = GL(n) x GL(n) by direct filtering: keeps
// diag(g1, g2) with psi_A(m u m^{-1}) == psi_A(u) for every u in N.
std::vector<MatF> m_psi_bruteforce(const FieldTower& t, const MatF& a,
                                   EnumOptions opt = {});
// Closed-form parametrization for A = E_{1n}:
// diag([[C, x], [0, a]], [[a, y], [0, D]]).
std::vector<MatF> m_psi_corner(const FieldTower& t, int n,
                               EnumOptions opt = {});

}  // namespace twjac

#endif  // TWJAC_GROUPS_HPP_

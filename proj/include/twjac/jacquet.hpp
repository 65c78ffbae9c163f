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

#ifndef TWJAC_JACQUET_HPP_
#define TWJAC_JACQUET_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "twjac/cuspidal.hpp"
#include "twjac/cyclo.hpp"
#include "twjac/ffield.hpp"
#include "twjac/groups.hpp"
#include "twjac/matq.hpp"
#include "twjac/parallel.hpp"

namespace twjac {

// psi_0(x) = zeta_p^{Tr(x)}; returned as the exponent ("phase") in [0, p)
// or as a cyclotomic number in the tower's ring.
int psi0_phase(const FieldTower& t, Code x);
CycNum psi0(const FieldTower& t, Code x);
// zeta_p^phase in the tower's cyclotomic ring.
CycNum phase_value(const FieldTower& t, int phase);

/// The character psi_A([[I, X], [0, I]]) = psi_0(tr(AX))^power of N.
/// power != 1 replaces psi_0 by another nontrivial character of F.
class TwistSpec {
 public:
  explicit TwistSpec(MatF a, int psi_power = 1);
  static TwistSpec e11(int n) { return TwistSpec(e11_matrix(n)); }
  static TwistSpec corner(int n) { return TwistSpec(corner_matrix(n)); }
  static TwistSpec zero(int n) { return TwistSpec(MatF(n, n)); }

  const MatF& matrix() const { return a_; }
  int n() const { return a_.rows(); }
  int psi_power() const { return power_; }
  bool is_corner() const { return twjac::is_corner(a_); }
  int rank(const FieldTower& t) const { return twjac::rank(t, a_); }

  int phase(const FieldTower& t, const MatF& x) const;
  CycNum psi(const FieldTower& t, const MatF& x) const;
  // psi_A on a 2n x 2n element of N.
  int phase_of(const FieldTower& t, const MatF& u) const;

 private:
  MatF a_;
  int power_;
};

GroupSpec m_psi_subgroup(const TwistSpec& a);

/// theta-independent summary of the sum over N for one m in M: how many
/// n in N give m*n each cuspidal class, split by the phase of psi_A(n).
/// Classes on which every cuspidal character vanishes are dropped.
struct JacquetCensus {
  struct Bin {
    std::size_t cls;
    int phase;
    std::uint64_t count;
  };
  std::vector<CuspidalClass> classes;
  std::vector<Bin> bins;
  std::uint64_t total = 0;
};

JacquetCensus jacquet_census(const Classifier& classify, const TwistSpec& a,
                             const MatF& m, Exec exec = Exec::kParallel);
CycNum evaluate_census(const ClassFunctionTable& table, const JacquetCensus& c);

// (1/|N|) sum_{n in N} Theta_theta(m n) conj(psi_A(n)) for m in M_psiA.
CycNum jacquet_char(const RegularCharacter& theta, const TwistSpec& a,
                    const MatF& m, Exec exec = Exec::kParallel);
// Same sum evaluated term by term with cuspidal_char, no census or memo.
CycNum jacquet_char_reference(const RegularCharacter& theta,
                              const TwistSpec& a, const MatF& m);

enum class Strategy { kStratified, kDirect };

// Dimension of the twisted Jacquet module. The stratified path groups the
// N-sum by rank and trace class and requires rank(A) = 1.
mpz_class jacquet_dim(const RegularCharacter& theta, const TwistSpec& a,
                      Strategy strategy, Exec exec = Exec::kParallel);

// prod_{i=1}^{n-1} (q^i - 1)^2
mpz_class predicted_dimension(std::uint64_t q, int n);

}  // namespace twjac

#endif  // TWJAC_JACQUET_HPP_

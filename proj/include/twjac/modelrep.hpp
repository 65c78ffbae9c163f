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

#ifndef TWJAC_MODELREP_HPP_
#define TWJAC_MODELREP_HPP_

#include <gmpxx.h>

#include <functional>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "twjac/cuspidal.hpp"
#include "twjac/cyclo.hpp"
#include "twjac/ffield.hpp"
#include "twjac/groups.hpp"
#include "twjac/jacquet.hpp"
#include "twjac/matq.hpp"
#include "twjac/parallel.hpp"

namespace twjac {

// psi(u) = psi_0(u_12 + u_23 + ... + u_{k-1,k}) on U(k).
CycNum psi_standard(const FieldTower& t, const MatF& u);
// mu(diag(u1, u2)) = psi_standard(u1) psi_standard(u2). Throws if u is not in U_A.
CycNum mu_eval(const FieldTower& t, const MatF& u);
// chi_j(gamma_1^k) = zeta_{q-1}^{jk}
CycNum f_times_char(const FieldTower& t, std::uint64_t j, Code a);
// The j with theta|_{F^x} = chi_j.
std::uint64_t restriction_index(const RegularCharacter& theta);

/// Ind_H^G sigma for a degree-1 sigma, through a left transversal of H in G.
class InducedCharacter {
 public:
  using Evaluator = std::function<CycNum(const MatF&)>;
  InducedCharacter(const FieldTower& t, GroupSpec g, GroupSpec h, Evaluator sigma,
                   EnumOptions opt = {});

  CycNum operator()(const MatF& g) const;
  mpz_class degree() const { return mpz_class(static_cast<unsigned long>(reps_.size())); }
  const std::vector<MatF>& transversal() const { return reps_; }
  const GroupSpec& ambient() const { return g_; }

 private:
  const FieldTower* tower_;
  GroupSpec g_;
  GroupSpec h_;
  Evaluator sigma_;
  std::vector<MatF> reps_;
  std::vector<MatF> rep_inverses_;
  mutable std::shared_mutex mu_;
  mutable std::unordered_map<std::string, CycNum> memo_;
};

// (1/|H|) sum_{x in G, x g x^-1 in H} sigma(x g x^-1)
CycNum induced_char_bruteforce(const FieldTower& t, const GroupSpec& g,
                               const GroupSpec& h,
                               const InducedCharacter::Evaluator& sigma,
                               const MatF& x, EnumOptions opt = {});

// <chi, chi> for chi = Ind_U^{P_n} psi on the mirabolic group of GL(n).
mpq_class kirillov_inner_product(const FieldTower& t, int n, EnumOptions opt = {});
bool kirillov_irreducibility_check(const FieldTower& t, int n, EnumOptions opt = {});

/// p = a * h * u with a scalar, h in H_A, u in N.
struct PsiFactors {
  Code a;
  MatF h;
  MatF levi;
  MatF radical;
};

/// The predicted module rho = theta|_{F^x} (x) Ind_{U_A}^{H_A} mu and its
/// extensions to P_psiA, for the corner A = E_{1n}.
class ModelRep {
 public:
  ModelRep(const FieldTower& t, int n, EnumOptions opt = {});

  const FieldTower& tower() const { return *tower_; }
  int n() const { return n_; }
  const TwistSpec& twist() const { return twist_; }
  mpz_class degree() const { return ind_.degree(); }
  const std::vector<MatF>& m_psi_elements() const { return m_psi_; }
  std::vector<MatF> p_psi_elements() const;
  // H_A is trivial and Z is all of M_psiA.
  bool degenerate() const { return n_ == 1; }

  PsiFactors factor(const MatF& p) const;
  CycNum ind_mu(const MatF& h) const { return ind_(h); }
  CycNum rho_char(const RegularCharacter& theta, const MatF& m) const;
  CycNum rho_tilde_char(const RegularCharacter& theta, const MatF& p) const;
  CycNum sigma_char(std::uint64_t j, const MatF& p) const;

 private:
  const FieldTower* tower_;
  int n_;
  EnumOptions opt_;
  TwistSpec twist_;
  InducedCharacter ind_;
  std::vector<MatF> m_psi_;
};

// One census per element of M_psiA, in m_psi_elements() order.
std::vector<JacquetCensus> m_psi_censuses(const ModelRep& model,
                                          const Classifier& classify,
                                          Exec exec = Exec::kParallel);

struct MainTheoremReport {
  std::vector<CycNum> jacquet;
  std::vector<CycNum> rho;
  mpz_class dimension;
  bool degenerate_n1 = false;
  bool pass = false;
  std::optional<std::size_t> mismatch;
};

MainTheoremReport main_theorem_check(const ModelRep& model,
                                     const RegularCharacter& theta,
                                     const std::vector<JacquetCensus>& censuses);
MainTheoremReport main_theorem_check(const ModelRep& model,
                                     const RegularCharacter& theta,
                                     Exec exec = Exec::kParallel);

struct DecompositionReport {
  std::size_t checked = 0;
  mpz_class index;
  mpz_class expected_index;
  std::optional<MatF> mismatch;
  bool pass() const { return !mismatch && index == expected_index; }
};
// Ind_U^{P_psiA} psi = sum_chi sigma_chi, pointwise on P_psiA.
DecompositionReport decomposition_check(const ModelRep& model, Exec exec = Exec::kParallel);

// (1/|P_psiA|) sum_p Theta(p) conj(sigma_chi_j(p)); throws unless the value
// is a nonnegative integer.
mpz_class hom_pairing(const ModelRep& model, const RegularCharacter& theta,
                      std::uint64_t j, Exec exec = Exec::kParallel);
// Same, with classes[i] the cuspidal class of elements[i] over P_psiA.
mpz_class hom_pairing(const ModelRep& model, const RegularCharacter& theta,
                      std::uint64_t j, const std::vector<MatF>& elements,
                      const std::vector<CuspidalClass>& classes, Exec exec = Exec::kParallel);
std::vector<CuspidalClass> classify_all(const Classifier& classify,
                                        const std::vector<MatF>& elements,
                                        Exec exec = Exec::kParallel);

mpq_class rho_norm(const ModelRep& model, const RegularCharacter& theta);
mpq_class rho_tilde_norm(const ModelRep& model, const RegularCharacter& theta);

// chi_rhotilde(x u) = psi_A(u) chi_rho(x) for x in U_A, u in N.
bool restriction_check(const ModelRep& model, const RegularCharacter& theta);
// psi(x u) = mu(x) psi_A(u) for x in U_A, u in N.
bool psi_factorization_check(const FieldTower& t, int n);
// Distinct characters of F^x give sigma_chi that differ on the center.
bool sigma_distinct_check(const ModelRep& model);
// chi_rhotilde(z) = theta(z) deg for scalar z.
bool central_character_check(const ModelRep& model, const RegularCharacter& theta);
// Theta_{N,psiA}(z h) = theta(z) Theta_{N,psiA}(h) for all z h in M_psiA.
bool central_factorization_check(const ModelRep& model, const RegularCharacter& theta,
                                 const std::vector<JacquetCensus>& censuses);

/// A = E_11 against B = A w0: equal dimensions and
/// Theta_{N,psiA}(diag(m1, m2)) = Theta_{N,psiB}(diag(w0 m1 w0, m2)).
struct ConjugationReport {
  mpz_class dim_a;
  mpz_class dim_b;
  std::size_t checked = 0;
  std::optional<MatF> mismatch;
  bool pass() const { return !mismatch && dim_a == dim_b; }
};
ConjugationReport conjugation_relation_check(const RegularCharacter& theta,
                                             Exec exec = Exec::kParallel,
                                             EnumOptions opt = {});

}  // namespace twjac

#endif  // TWJAC_MODELREP_HPP_

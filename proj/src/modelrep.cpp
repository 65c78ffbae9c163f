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

#include "twjac/modelrep.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_set>

namespace twjac {

namespace {

mpq_class to_mpq(std::size_t n) { return mpq_class(static_cast<unsigned long>(n)); }

mpq_class rational_or_throw(const CycNum& v, const char* what) {
  const auto r = v.as_rational();
  if (!r) throw std::logic_error(std::string(what) + " is not rational: " + v.to_string());
  return *r;
}

// First index where pred fails, or nullopt.
template <typename Pred>
std::optional<std::size_t> first_failure(std::size_t count, Exec exec, Pred pred) {
  std::optional<std::size_t> bad;
  if (exec == Exec::kSerial) {
    for (std::size_t i = 0; i < count; ++i) {
      if (!pred(i)) return i;
    }
    return bad;
  }
  std::mutex mu;
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
    const auto k = static_cast<std::size_t>(i);
    if (!pred(k)) {
      std::lock_guard<std::mutex> lock(mu);
      if (!bad || k < *bad) bad = k;
    }
  }
  return bad;
}

template <typename Term>
CycNum exact_sum(std::size_t count, Exec exec, Term term) {
  CycNum total;
  if (exec == Exec::kSerial) {
    for (std::size_t i = 0; i < count; ++i) total += term(i);
    return total;
  }
#pragma omp parallel
  {
    CycNum local;
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
      local += term(static_cast<std::size_t>(i));
    }
#pragma omp critical
    total += local;
  }
  return total;
}

}  // namespace

CycNum psi_standard(const FieldTower& t, const MatF& u) {
  const FieldLevel& f = t.base();
  Code s = 0;
  for (int i = 0; i + 1 < u.rows(); ++i) s = f.add(s, u(i, i + 1));
  return psi0(t, s);
}

CycNum mu_eval(const FieldTower& t, const MatF& u) {
  if (u.rows() % 2 != 0 || !GroupSpec::u_a(u.rows() / 2).contains(t, u)) {
    throw std::invalid_argument("mu_eval: element is not in U_A");
  }
  const int n = u.rows() / 2;
  return psi_standard(t, u.block(0, 0, n, n)) * psi_standard(t, u.block(n, n, n, n));
}

CycNum f_times_char(const FieldTower& t, std::uint64_t j, Code a) {
  const FieldLevel& f = t.base();
  const std::uint64_t order = f.unit_order();
  const std::uint64_t k = (j % order) * f.log(a) % order;
  const std::uint64_t L = t.cyclotomic_modulus();
  return CycNum::zeta(L, static_cast<std::int64_t>(k * (L / order)));
}

std::uint64_t restriction_index(const RegularCharacter& theta) {
  return theta.index() % theta.tower().base().unit_order();
}

InducedCharacter::InducedCharacter(const FieldTower& t, GroupSpec g, GroupSpec h,
                                   Evaluator sigma, EnumOptions opt)
    : tower_(&t), g_(std::move(g)), h_(std::move(h)), sigma_(std::move(sigma)) {
  const FieldLevel& f = t.base();
  const auto gs = g_.elements(t, opt);
  const auto hs = h_.elements(t, opt);
  std::unordered_set<std::string> covered;
  covered.reserve(gs.size());
  for (const auto& x : gs) {
    if (covered.count(element_key(f, x)) != 0) continue;
    reps_.push_back(x);
    rep_inverses_.push_back(*inverse(f, x));
    for (const auto& y : hs) covered.insert(element_key(f, multiply(f, x, y)));
  }
  if (covered.size() != gs.size()) {
    throw std::invalid_argument("InducedCharacter: " + h_.name() + " is not a subgroup of " +
                                g_.name());
  }
}

CycNum InducedCharacter::operator()(const MatF& g) const {
  const FieldLevel& f = tower_->base();
  const std::string key = element_key(f, g);
  {
    std::shared_lock<std::shared_mutex> lock(mu_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  CycNum acc(0, tower_->cyclotomic_modulus());
  for (std::size_t i = 0; i < reps_.size(); ++i) {
    const MatF c = multiply(f, multiply(f, rep_inverses_[i], g), reps_[i]);
    if (h_.contains(*tower_, c)) acc += sigma_(c);
  }
  std::unique_lock<std::shared_mutex> lock(mu_);
  memo_.emplace(key, acc);
  return acc;
}

CycNum induced_char_bruteforce(const FieldTower& t, const GroupSpec& g,
                               const GroupSpec& h,
                               const InducedCharacter::Evaluator& sigma,
                               const MatF& x, EnumOptions opt) {
  const FieldLevel& f = t.base();
  const auto gs = g.elements(t, opt);
  const auto h_size = h.elements(t, opt).size();
  CycNum acc(0, t.cyclotomic_modulus());
  for (const auto& y : gs) {
    const MatF c = multiply(f, multiply(f, y, x), *inverse(f, y));
    if (h.contains(t, c)) acc += sigma(c);
  }
  acc /= to_mpq(h_size);
  return acc;
}

mpq_class kirillov_inner_product(const FieldTower& t, int n, EnumOptions opt) {
  InducedCharacter chi(
      t, GroupSpec::mirabolic(n), GroupSpec::u(n),
      [&t](const MatF& u) { return psi_standard(t, u); }, opt);
  std::vector<CycNum> values;
  for (const auto& g : GroupSpec::mirabolic(n).elements(t, opt)) values.push_back(chi(g));
  return rational_or_throw(mean_square_norm(values), "Kirillov inner product");
}

bool kirillov_irreducibility_check(const FieldTower& t, int n, EnumOptions opt) {
  return kirillov_inner_product(t, n, opt) == 1;
}

ModelRep::ModelRep(const FieldTower& t, int n, EnumOptions opt)
    : tower_(&t),
      n_(n),
      opt_(opt),
      twist_(TwistSpec::corner(n)),
      ind_(
          t, GroupSpec::h_a(n), GroupSpec::u_a(n),
          [&t](const MatF& u) { return mu_eval(t, u); }, opt),
      m_psi_(m_psi_corner(t, n, opt)) {
  if (t.m() % (2 * n) != 0) {
    throw std::invalid_argument("ModelRep: tower has no level 2n");
  }
}

std::vector<MatF> ModelRep::p_psi_elements() const {
  return GroupSpec::p_psi(twist_.matrix()).elements(*tower_, opt_);
}

PsiFactors ModelRep::factor(const MatF& p) const {
  const FieldLevel& f = tower_->base();
  const int n = n_;
  const MatF g1 = p.block(0, 0, n, n);
  const auto g1_inv = inverse(f, g1);
  if (!g1_inv) throw std::invalid_argument("factor: element is not in P");
  PsiFactors out;
  out.levi = block_diag(g1, p.block(n, n, n, n));
  out.radical = unipotent_block(multiply(f, *g1_inv, p.block(0, n, n, n)));
  out.a = g1(n - 1, n - 1);
  if (out.a == 0) throw std::invalid_argument("factor: element is not in P_psiA");
  out.h = scale(f, f.inv(out.a), out.levi);
  return out;
}

CycNum ModelRep::rho_char(const RegularCharacter& theta, const MatF& m) const {
  if (!GroupSpec::m_psi(twist_.matrix()).contains(*tower_, m)) {
    throw std::invalid_argument("rho_char: element is not in M_psiA");
  }
  const PsiFactors fac = factor(m);
  return theta_eval(theta, FFElem{1, fac.a}) * ind_(fac.h);
}

CycNum ModelRep::rho_tilde_char(const RegularCharacter& theta, const MatF& p) const {
  const FieldLevel& f = tower_->base();
  const PsiFactors fac = factor(p);
  const MatF c = multiply(f, multiply(f, fac.levi, fac.radical), *inverse(f, fac.levi));
  return phase_value(*tower_, twist_.phase_of(*tower_, c)) * rho_char(theta, fac.levi);
}

CycNum ModelRep::sigma_char(std::uint64_t j, const MatF& p) const {
  const FieldLevel& f = tower_->base();
  const PsiFactors fac = factor(p);
  if (!GroupSpec::h_a(n_).contains(*tower_, fac.h)) {
    throw std::invalid_argument("sigma_char: element is not in P_psiA");
  }
  const MatF c = multiply(f, multiply(f, fac.h, fac.radical), *inverse(f, fac.h));
  return f_times_char(*tower_, j, fac.a) * phase_value(*tower_, twist_.phase_of(*tower_, c)) *
         ind_(fac.h);
}

std::vector<JacquetCensus> m_psi_censuses(const ModelRep& model,
                                          const Classifier& classify, Exec exec) {
  std::vector<JacquetCensus> out;
  out.reserve(model.m_psi_elements().size());
  for (const auto& m : model.m_psi_elements()) {
    out.push_back(jacquet_census(classify, model.twist(), m, exec));
  }
  return out;
}

MainTheoremReport main_theorem_check(const ModelRep& model,
                                     const RegularCharacter& theta,
                                     const std::vector<JacquetCensus>& censuses) {
  const auto& ms = model.m_psi_elements();
  if (censuses.size() != ms.size()) {
    throw std::invalid_argument("main_theorem_check: census count mismatch");
  }
  ClassFunctionTable table(theta);
  MainTheoremReport out;
  out.degenerate_n1 = model.degenerate();
  const MatF one = MatF::identity(2 * model.n());
  for (std::size_t i = 0; i < ms.size(); ++i) {
    out.jacquet.push_back(evaluate_census(table, censuses[i]));
    out.rho.push_back(model.rho_char(theta, ms[i]));
    if (!(out.jacquet.back() == out.rho.back())) {
      out.mismatch = i;
      break;
    }
    if (ms[i] == one) {
      const mpq_class d = rational_or_throw(out.jacquet.back(), "dimension");
      out.dimension = d.get_num();
    }
  }
  out.pass = !out.mismatch;
  return out;
}

MainTheoremReport main_theorem_check(const ModelRep& model,
                                     const RegularCharacter& theta, Exec exec) {
  Classifier classify(model.tower());
  return main_theorem_check(model, theta, m_psi_censuses(model, classify, exec));
}

DecompositionReport decomposition_check(const ModelRep& model, Exec exec) {
  const FieldTower& t = model.tower();
  const int n = model.n();
  InducedCharacter ind_u(
      t, GroupSpec::p_psi(model.twist().matrix()), GroupSpec::u(2 * n),
      [&t](const MatF& u) { return psi_standard(t, u); });
  const auto ps = model.p_psi_elements();
  const std::uint64_t chars = t.base().unit_order();
  const auto bad = first_failure(ps.size(), exec, [&](std::size_t i) {
    CycNum rhs;
    for (std::uint64_t j = 0; j < chars; ++j) rhs += model.sigma_char(j, ps[i]);
    return ind_u(ps[i]) == rhs;
  });
  DecompositionReport out;
  out.checked = bad ? *bad + 1 : ps.size();
  out.index = ind_u.degree();
  out.expected_index = mpz_class(static_cast<unsigned long>(chars)) * model.degree();
  if (bad) out.mismatch = ps[*bad];
  return out;
}

std::vector<CuspidalClass> classify_all(const Classifier& classify,
                                        const std::vector<MatF>& elements, Exec exec) {
  std::vector<CuspidalClass> out(elements.size());
  if (exec == Exec::kSerial) {
    for (std::size_t i = 0; i < elements.size(); ++i) out[i] = classify(elements[i]);
    return out;
  }
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(elements.size()); ++i) {
    out[i] = classify(elements[i]);
  }
  return out;
}

mpz_class hom_pairing(const ModelRep& model, const RegularCharacter& theta,
                      std::uint64_t j, const std::vector<MatF>& elements,
                      const std::vector<CuspidalClass>& classes, Exec exec) {
  if (elements.size() != classes.size()) {
    throw std::invalid_argument("hom_pairing: one class per element expected");
  }
  ClassFunctionTable table(theta);
  CycNum total = exact_sum(elements.size(), exec, [&](std::size_t i) {
    return table.value(classes[i]) * model.sigma_char(j, elements[i]).conj();
  });
  total /= to_mpq(elements.size());
  const mpq_class r = rational_or_throw(total, "hom pairing");
  if (r.get_den() != 1 || r < 0) {
    throw std::logic_error("hom pairing is not a nonnegative integer: " + r.get_str());
  }
  return r.get_num();
}

mpz_class hom_pairing(const ModelRep& model, const RegularCharacter& theta,
                      std::uint64_t j, Exec exec) {
  const auto ps = model.p_psi_elements();
  Classifier classify(model.tower());
  return hom_pairing(model, theta, j, ps, classify_all(classify, ps, exec), exec);
}

mpq_class rho_norm(const ModelRep& model, const RegularCharacter& theta) {
  std::vector<CycNum> values;
  for (const auto& m : model.m_psi_elements()) values.push_back(model.rho_char(theta, m));
  return rational_or_throw(mean_square_norm(values), "rho norm");
}

mpq_class rho_tilde_norm(const ModelRep& model, const RegularCharacter& theta) {
  std::vector<CycNum> values;
  for (const auto& p : model.p_psi_elements()) values.push_back(model.rho_tilde_char(theta, p));
  return rational_or_throw(mean_square_norm(values), "rho tilde norm");
}

bool restriction_check(const ModelRep& model, const RegularCharacter& theta) {
  const FieldTower& t = model.tower();
  const int n = model.n();
  const auto xs = GroupSpec::u_a(n).elements(t);
  const auto us = GroupSpec::n_radical(n).elements(t);
  for (const auto& x : xs) {
    const CycNum rho = model.rho_char(theta, x);
    for (const auto& u : us) {
      const CycNum lhs = model.rho_tilde_char(theta, multiply(t.base(), x, u));
      if (!(lhs == model.twist().psi(t, u.block(0, n, n, n)) * rho)) {
        return false;
      }
    }
  }
  return true;
}

bool psi_factorization_check(const FieldTower& t, int n) {
  const TwistSpec a = TwistSpec::corner(n);
  const auto xs = GroupSpec::u_a(n).elements(t);
  const auto us = GroupSpec::n_radical(n).elements(t);
  for (const auto& x : xs) {
    const CycNum mu = mu_eval(t, x);
    for (const auto& u : us) {
      if (!(psi_standard(t, multiply(t.base(), x, u)) == mu * a.psi(t, u.block(0, n, n, n)))) {
        return false;
      }
    }
  }
  return true;
}

bool sigma_distinct_check(const ModelRep& model) {
  const FieldLevel& f = model.tower().base();
  const std::uint64_t chars = f.unit_order();
  const int size = 2 * model.n();
  for (std::uint64_t j1 = 0; j1 < chars; ++j1) {
    for (std::uint64_t j2 = j1 + 1; j2 < chars; ++j2) {
      bool differ = false;
      for (std::uint64_t k = 0; k < chars && !differ; ++k) {
        const MatF z = MatF::scalar(size, f.exp(k));
        differ = !(model.sigma_char(j1, z) == model.sigma_char(j2, z));
      }
      if (!differ) return false;
    }
  }
  return true;
}

bool central_character_check(const ModelRep& model, const RegularCharacter& theta) {
  const FieldLevel& f = model.tower().base();
  const mpq_class deg(model.degree());
  for (std::uint64_t k = 0; k < f.unit_order(); ++k) {
    const Code a = f.exp(k);
    const MatF z = MatF::scalar(2 * model.n(), a);
    if (!(model.rho_tilde_char(theta, z) == theta_eval(theta, FFElem{1, a}) * deg)) {
      return false;
    }
  }
  return true;
}

bool central_factorization_check(const ModelRep& model, const RegularCharacter& theta,
                                 const std::vector<JacquetCensus>& censuses) {
  const auto& ms = model.m_psi_elements();
  std::map<MatF, std::size_t> where;
  for (std::size_t i = 0; i < ms.size(); ++i) where.emplace(ms[i], i);
  ClassFunctionTable table(theta);
  std::vector<CycNum> values;
  values.reserve(ms.size());
  for (const auto& c : censuses) values.push_back(evaluate_census(table, c));
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const PsiFactors fac = model.factor(ms[i]);
    const auto it = where.find(fac.h);
    if (it == where.end()) return false;
    if (!(values[i] == theta_eval(theta, FFElem{1, fac.a}) * values[it->second])) return false;
  }
  return true;
}

ConjugationReport conjugation_relation_check(const RegularCharacter& theta, Exec exec,
                                             EnumOptions opt) {
  const FieldTower& t = theta.tower();
  const FieldLevel& f = t.base();
  const int n = theta.level() / 2;
  const TwistSpec a = TwistSpec::e11(n);
  const MatF w0 = MatF::antidiagonal(n);
  const TwistSpec b(multiply(f, a.matrix(), w0));
  ConjugationReport out;
  out.dim_a = jacquet_dim(theta, a, Strategy::kDirect, exec);
  out.dim_b = jacquet_dim(theta, b, Strategy::kDirect, exec);
  Classifier classify(t);
  ClassFunctionTable table(theta);
  for (const auto& m : m_psi_bruteforce(t, a.matrix(), opt)) {
    const MatF m1 = multiply(f, multiply(f, w0, m.block(0, 0, n, n)), w0);
    const MatF moved = block_diag(m1, m.block(n, n, n, n));
    const CycNum lhs = evaluate_census(table, jacquet_census(classify, a, m, exec));
    const CycNum rhs = evaluate_census(table, jacquet_census(classify, b, moved, exec));
    ++out.checked;
    if (!(lhs == rhs)) {
      out.mismatch = m;
      break;
    }
  }
  return out;
}

}  // namespace twjac

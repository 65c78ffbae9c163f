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

#include "twjac/jacquet.hpp"

#include <map>
#include <stdexcept>
#include <unordered_map>

#include "twjac/counting.hpp"

namespace twjac {

int psi0_phase(const FieldTower& t, Code x) { return t.base().absolute_trace(x); }

CycNum phase_value(const FieldTower& t, int phase) {
  const std::uint64_t L = t.cyclotomic_modulus();
  const auto p = static_cast<std::uint64_t>(t.p());
  return CycNum::zeta(L, static_cast<std::int64_t>((phase % p) * (L / p)));
}

CycNum psi0(const FieldTower& t, Code x) { return phase_value(t, psi0_phase(t, x)); }

TwistSpec::TwistSpec(MatF a, int psi_power) : a_(std::move(a)), power_(psi_power) {
  if (!a_.is_square()) throw std::invalid_argument("TwistSpec: A must be square");
}

int TwistSpec::phase(const FieldTower& t, const MatF& x) const {
  const FieldLevel& f = t.base();
  const int tr = f.absolute_trace(trace(f, multiply(f, a_, x)));
  return static_cast<int>((static_cast<long long>(tr) * power_) % t.p());
}

CycNum TwistSpec::psi(const FieldTower& t, const MatF& x) const {
  return phase_value(t, phase(t, x));
}

int TwistSpec::phase_of(const FieldTower& t, const MatF& u) const {
  const int n = a_.rows();
  return phase(t, u.block(0, n, n, n));
}

GroupSpec m_psi_subgroup(const TwistSpec& a) { return GroupSpec::m_psi(a.matrix()); }

namespace {

struct LocalBins {
  CuspidalClass cls;
  std::vector<std::uint64_t> by_phase;
};
using BinMap = std::unordered_map<std::string, LocalBins>;

void tally(const Classifier& classify, const TwistSpec& a, const MatF& m,
           std::uint64_t index, BinMap& bins) {
  const FieldTower& t = classify.tower();
  const int n = a.n();
  const MatF x = matrix_from_index(index, n, n, t.q());
  const CuspidalClass c = classify(multiply(t.base(), m, unipotent_block(x)));
  if (c.vanishes) return;
  auto [it, fresh] = bins.try_emplace(c.key());
  if (fresh) {
    it->second.cls = c;
    it->second.by_phase.assign(t.p(), 0);
  }
  ++it->second.by_phase[a.phase(t, x)];
}

}  // namespace

JacquetCensus jacquet_census(const Classifier& classify, const TwistSpec& a,
                             const MatF& m, Exec exec) {
  const FieldTower& t = classify.tower();
  const int n = a.n();
  if (m.rows() != 2 * n || !m.is_square()) {
    throw std::invalid_argument("jacquet_census: m must be 2n x 2n");
  }
  const std::uint64_t total = ipow(t.q(), static_cast<unsigned>(n * n));
  std::map<std::string, LocalBins> merged;
  auto merge = [&](BinMap& local) {
    for (auto& [key, lb] : local) {
      auto [it, fresh] = merged.try_emplace(key);
      if (fresh) {
        it->second = std::move(lb);
        continue;
      }
      for (std::size_t ph = 0; ph < lb.by_phase.size(); ++ph) {
        it->second.by_phase[ph] += lb.by_phase[ph];
      }
    }
  };
  if (exec == Exec::kSerial) {
    BinMap local;
    for (std::uint64_t i = 0; i < total; ++i) tally(classify, a, m, i, local);
    merge(local);
  } else {
#pragma omp parallel
    {
      BinMap local;
#pragma omp for schedule(dynamic, 32)
      for (std::int64_t i = 0; i < static_cast<std::int64_t>(total); ++i) {
        tally(classify, a, m, static_cast<std::uint64_t>(i), local);
      }
#pragma omp critical
      merge(local);
    }
  }
  JacquetCensus out;
  out.total = total;
  for (auto& [key, lb] : merged) {
    const std::size_t id = out.classes.size();
    out.classes.push_back(std::move(lb.cls));
    for (std::size_t ph = 0; ph < lb.by_phase.size(); ++ph) {
      if (lb.by_phase[ph] != 0) {
        out.bins.push_back({id, static_cast<int>(ph), lb.by_phase[ph]});
      }
    }
  }
  return out;
}

CycNum evaluate_census(const ClassFunctionTable& table, const JacquetCensus& c) {
  const FieldTower& t = table.theta().tower();
  CycNum acc(0, t.cyclotomic_modulus());
  for (const auto& bin : c.bins) {
    CycNum term = table.value(c.classes[bin.cls]) * phase_value(t, t.p() - bin.phase);
    acc += term * mpq_class(mpz_class(std::to_string(bin.count)));
  }
  acc /= mpq_class(mpz_class(std::to_string(c.total)));
  return acc;
}

CycNum jacquet_char(const RegularCharacter& theta, const TwistSpec& a,
                    const MatF& m, Exec exec) {
  const FieldTower& t = theta.tower();
  if (theta.level() != 2 * a.n()) {
    throw std::invalid_argument("jacquet_char: theta must live at level 2n");
  }
  if (!m_psi_subgroup(a).contains(t, m)) {
    throw std::invalid_argument("jacquet_char: m is not in M_psiA");
  }
  Classifier classify(t);
  ClassFunctionTable table(theta);
  return evaluate_census(table, jacquet_census(classify, a, m, exec));
}

CycNum jacquet_char_reference(const RegularCharacter& theta,
                              const TwistSpec& a, const MatF& m) {
  const FieldTower& t = theta.tower();
  const int n = a.n();
  const auto ns = GroupSpec::n_radical(n).elements(t);
  CycNum acc(0, t.cyclotomic_modulus());
  for (const auto& u : ns) {
    acc += cuspidal_char(theta, multiply(t.base(), m, u)) * a.psi(t, u.block(0, n, n, n)).conj();
  }
  acc /= mpq_class(mpz_class(std::to_string(ns.size())));
  return acc;
}

mpz_class jacquet_dim(const RegularCharacter& theta, const TwistSpec& a,
                      Strategy strategy, Exec exec) {
  const FieldTower& t = theta.tower();
  const int n = a.n();
  CycNum value;
  if (strategy == Strategy::kDirect) {
    value = jacquet_char(theta, a, MatF::identity(2 * n), exec);
  } else {
    if (a.rank(t) != 1) {
      throw std::invalid_argument("stratified jacquet_dim needs rank(A) = 1");
    }
    const auto q = static_cast<std::int64_t>(t.q());
    value = CycNum(0, t.cyclotomic_modulus());
    for (int r = 0; r <= n; ++r) {
      value += unipotent_block_value(theta, n, r) * mpq_class(counting::y_diff(n, r, q));
    }
    mpz_class size;
    mpz_ui_pow_ui(size.get_mpz_t(), t.q(), static_cast<unsigned long>(n * n));
    value /= mpq_class(size);
  }
  const auto r = value.as_rational();
  if (!r || r->get_den() != 1 || *r < 0) {
    throw std::logic_error("jacquet_dim: value " + value.to_string() +
                           " is not a nonnegative integer");
  }
  return r->get_num();
}

mpz_class predicted_dimension(std::uint64_t q, int n) {
  mpz_class d = 1;
  mpz_class qi = 1;
  for (int i = 1; i < n; ++i) {
    qi *= static_cast<unsigned long>(q);
    d *= (qi - 1) * (qi - 1);
  }
  return d;
}

}  // namespace twjac

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

#include "twjac/groups.hpp"

#include <functional>
#include <stdexcept>

namespace twjac {

namespace {

void check_cap(const mpz_class& n, const EnumOptions& opt, const std::string& what) {
  if (n > mpz_class(std::to_string(opt.cap))) {
    throw CapExceeded(what + " has " + n.get_str() +
                      " elements, above the enumeration cap");
  }
}

std::uint64_t vec_index(const std::vector<Code>& v, std::uint64_t q) {
  std::uint64_t r = 0;
  for (std::size_t i = v.size(); i-- > 0;) r = r * q + v[i];
  return r;
}

std::vector<Code> index_vec(std::uint64_t idx, int k, std::uint64_t q) {
  std::vector<Code> v(k);
  for (int i = 0; i < k; ++i) {
    v[i] = static_cast<Code>(idx % q);
    idx /= q;
  }
  return v;
}

// Rows of GL(k) matrices chosen one at a time outside the span of the rows
// already picked.
void gl_rows(const FieldLevel& f, int k, int row, MatF& cur,
             const std::vector<char>& span, std::vector<MatF>& out) {
  if (row == k) {
    out.push_back(cur);
    return;
  }
  const std::uint64_t q = f.size();
  const std::uint64_t total = span.size();
  for (std::uint64_t v = 0; v < total; ++v) {
    if (span[v]) continue;
    const std::vector<Code> vec = index_vec(v, k, q);
    for (int j = 0; j < k; ++j) cur(row, j) = vec[j];
    std::vector<char> next(total, 0);
    for (std::uint64_t s = 0; s < total; ++s) {
      if (!span[s]) continue;
      const std::vector<Code> sv = index_vec(s, k, q);
      for (Code c = 0; c < q; ++c) {
        std::vector<Code> w(k);
        for (int j = 0; j < k; ++j) w[j] = f.add(sv[j], f.mul(c, vec[j]));
        next[vec_index(w, q)] = 1;
      }
    }
    gl_rows(f, k, row + 1, cur, next, out);
  }
  for (int j = 0; j < k; ++j) cur(row, j) = 0;
}

std::vector<MatF> gl_elements(const FieldLevel& f, int k) {
  std::vector<MatF> out;
  if (k == 0) {
    out.emplace_back(0, 0);
    return out;
  }
  MatF cur(k, k);
  std::vector<char> span(ipow(f.size(), k), 0);
  span[0] = 1;
  gl_rows(f, k, 0, cur, span, out);
  return out;
}

std::vector<MatF> unitriangular(std::uint64_t q, int k) {
  std::vector<std::pair<int, int>> pos;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) pos.emplace_back(i, j);
  }
  const std::uint64_t count = ipow(q, static_cast<unsigned>(pos.size()));
  std::vector<MatF> out;
  out.reserve(count);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    MatF m = MatF::identity(k);
    std::uint64_t v = idx;
    for (auto [i, j] : pos) {
      m(i, j) = static_cast<Code>(v % q);
      v /= q;
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<MatF> all_vectors(std::uint64_t q, int rows, int cols) {
  const std::uint64_t count = ipow(q, static_cast<unsigned>(rows * cols));
  std::vector<MatF> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    out.push_back(matrix_from_index(i, rows, cols, q));
  }
  return out;
}

std::vector<MatF> mirabolic_elements(const FieldLevel& f, int n, bool conj) {
  std::vector<MatF> out;
  const auto gls = gl_elements(f, n - 1);
  const auto vecs = all_vectors(f.size(), conj ? 1 : n - 1, conj ? n - 1 : 1);
  for (const auto& g : gls) {
    for (const auto& x : vecs) {
      MatF m(n, n);
      if (conj) {
        m(0, 0) = 1;
        m.set_block(0, 1, x);
        m.set_block(1, 1, g);
      } else {
        m.set_block(0, 0, g);
        m.set_block(0, n - 1, x);
        m(n - 1, n - 1) = 1;
      }
      out.push_back(std::move(m));
    }
  }
  return out;
}

bool is_unitriangular(const MatF& m) {
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j <= i; ++j) {
      if (m(i, j) != (i == j ? 1u : 0u)) return false;
    }
  }
  return true;
}

bool is_zero(const MatF& m) {
  for (Code c : m.data()) {
    if (c != 0) return false;
  }
  return true;
}

// Phase of psi_A at [[I, X], [0, I]]: Tr_{F_q/F_p}(tr(A X)).
int psi_phase(const FieldLevel& f, const MatF& a, const MatF& x) {
  return f.absolute_trace(trace(f, multiply(f, a, x)));
}

bool stabilizes(const FieldLevel& f, const MatF& a, const MatF& g1,
                const MatF& g2inv, const std::vector<MatF>& test_set) {
  for (const auto& x : test_set) {
    const MatF y = multiply(f, multiply(f, g1, x), g2inv);
    if (psi_phase(f, a, y) != psi_phase(f, a, x)) return false;
  }
  return true;
}

bool in_mirabolic(const FieldLevel& f, const MatF& m, bool conj) {
  const int n = m.rows();
  for (int i = 0; i < n; ++i) {
    const Code expect = (i == (conj ? 0 : n - 1)) ? 1 : 0;
    if (conj ? m(i, 0) != expect : m(n - 1, i) != expect) return false;
  }
  return determinant(f, m) != 0;
}

}  // namespace

mpz_class gl_order(int k, std::uint64_t q) {
  mpz_class r = 1;
  mpz_class qk;
  mpz_ui_pow_ui(qk.get_mpz_t(), q, k);
  for (int j = 0; j < k; ++j) {
    mpz_class qj;
    mpz_ui_pow_ui(qj.get_mpz_t(), q, j);
    r *= qk - qj;
  }
  return r;
}

MatF matrix_from_index(std::uint64_t index, int rows, int cols, std::uint64_t q) {
  MatF m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      m(i, j) = static_cast<Code>(index % q);
      index /= q;
    }
  }
  return m;
}

MatF corner_matrix(int n) { return MatF::unit(n, n, 0, n - 1); }
MatF e11_matrix(int n) { return MatF::unit(n, n, 0, 0); }
bool is_corner(const MatF& a) { return a == corner_matrix(a.rows()); }

int GroupSpec::matrix_size() const {
  switch (kind_) {
    case Kind::kN:
    case Kind::kUA:
    case Kind::kHA:
    case Kind::kMPsiA:
    case Kind::kPPsiA:
      return 2 * n_;
    default:
      return n_;
  }
}

std::string GroupSpec::name() const {
  const std::string n = std::to_string(n_);
  switch (kind_) {
    case Kind::kFullMatrixSpace: return "M(" + n + ")";
    case Kind::kGL: return "GL(" + n + ")";
    case Kind::kU: return "U(" + n + ")";
    case Kind::kN: return "N(" + n + ")";
    case Kind::kMirabolic: return "Mirabolic(" + n + ")";
    case Kind::kMirabolicConj: return "MirabolicConj(" + n + ")";
    case Kind::kUA: return "U_A(" + n + ")";
    case Kind::kHA: return "H_A(" + n + ")";
    case Kind::kMPsiA: return "M_psiA(" + format_matrix(*a_) + ")";
    case Kind::kPPsiA: return "P_psiA(" + format_matrix(*a_) + ")";
  }
  return "?";
}

std::optional<mpz_class> GroupSpec::order(std::uint64_t q) const {
  auto qpow = [q](unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), q, e);
    return r;
  };
  const unsigned long n = static_cast<unsigned long>(n_);
  const mpz_class mirabolic = n == 0 ? mpz_class(1) : qpow(n - 1) * gl_order(n_ - 1, q);
  switch (kind_) {
    case Kind::kFullMatrixSpace: return qpow(n * n);
    case Kind::kGL: return gl_order(n_, q);
    case Kind::kU: return qpow(n * (n - 1) / 2);
    case Kind::kN: return qpow(n * n);
    case Kind::kMirabolic:
    case Kind::kMirabolicConj: return mirabolic;
    case Kind::kUA: return qpow(n * (n - 1));
    case Kind::kHA: return mirabolic * mirabolic;
    case Kind::kMPsiA:
    case Kind::kPPsiA: {
      if (!is_corner(*a_)) return std::nullopt;
      mpz_class g = gl_order(n_ - 1, q);
      mpz_class m = mpz_class(static_cast<unsigned long>(q - 1)) * g * g * qpow(2 * (n - 1));
      if (kind_ == Kind::kPPsiA) m *= qpow(n * n);
      return m;
    }
  }
  return std::nullopt;
}

std::vector<MatF> m_psi_corner(const FieldTower& t, int n, EnumOptions opt) {
  const FieldLevel& f = t.base();
  check_cap(*GroupSpec::m_psi(corner_matrix(n)).order(t.q()), opt, "M_psiA");
  const auto gls = gl_elements(f, n - 1);
  const auto cols = all_vectors(f.size(), n - 1, 1);
  const auto rows = all_vectors(f.size(), 1, n - 1);
  std::vector<MatF> out;
  for (std::uint64_t ai = 0; ai < f.unit_order(); ++ai) {
    const Code a = f.exp(ai);
    for (const auto& c : gls) {
      for (const auto& x : cols) {
        MatF g1(n, n);
        g1.set_block(0, 0, c);
        g1.set_block(0, n - 1, x);
        g1(n - 1, n - 1) = a;
        for (const auto& d : gls) {
          for (const auto& y : rows) {
            MatF g2(n, n);
            g2(0, 0) = a;
            g2.set_block(0, 1, y);
            g2.set_block(1, 1, d);
            out.push_back(block_diag(g1, g2));
          }
        }
      }
    }
  }
  return out;
}

std::vector<MatF> m_psi_bruteforce(const FieldTower& t, const MatF& a,
                                   EnumOptions opt) {
  const FieldLevel& f = t.base();
  const int n = a.rows();
  const mpz_class g = gl_order(n, t.q());
  check_cap(g * g, opt, "GL(n) x GL(n)");
  const auto gls = gl_elements(f, n);
  std::vector<MatF> invs;
  invs.reserve(gls.size());
  for (const auto& x : gls) invs.push_back(*inverse(f, x));
  const auto all_x = all_vectors(f.size(), n, n);
  std::vector<MatF> out;
  for (const auto& g1 : gls) {
    for (std::size_t j = 0; j < gls.size(); ++j) {
      if (stabilizes(f, a, g1, invs[j], all_x)) out.push_back(block_diag(g1, gls[j]));
    }
  }
  return out;
}

std::vector<MatF> GroupSpec::elements(const FieldTower& t, EnumOptions opt) const {
  const FieldLevel& f = t.base();
  const std::uint64_t q = t.q();
  if (auto ord = order(q)) check_cap(*ord, opt, name());
  switch (kind_) {
    case Kind::kFullMatrixSpace: return all_vectors(q, n_, n_);
    case Kind::kGL: return gl_elements(f, n_);
    case Kind::kU: return unitriangular(q, n_);
    case Kind::kN: {
      std::vector<MatF> out;
      for (const auto& x : all_vectors(q, n_, n_)) out.push_back(unipotent_block(x));
      return out;
    }
    case Kind::kMirabolic: return mirabolic_elements(f, n_, false);
    case Kind::kMirabolicConj: return mirabolic_elements(f, n_, true);
    case Kind::kUA: {
      const auto us = unitriangular(q, n_);
      std::vector<MatF> out;
      for (const auto& a : us) {
        for (const auto& b : us) out.push_back(block_diag(a, b));
      }
      return out;
    }
    case Kind::kHA: {
      const auto m1 = mirabolic_elements(f, n_, false);
      const auto m2 = mirabolic_elements(f, n_, true);
      std::vector<MatF> out;
      for (const auto& a : m1) {
        for (const auto& b : m2) out.push_back(block_diag(a, b));
      }
      return out;
    }
    case Kind::kMPsiA:
      return is_corner(*a_) ? m_psi_corner(t, n_, opt) : m_psi_bruteforce(t, *a_, opt);
    case Kind::kPPsiA: {
      const auto ms = GroupSpec::m_psi(*a_).elements(t, opt);
      const auto ns = GroupSpec::n_radical(n_).elements(t, opt);
      check_cap(mpz_class(static_cast<unsigned long>(ms.size())) *
                    static_cast<unsigned long>(ns.size()),
                opt, name());
      std::vector<MatF> out;
      out.reserve(ms.size() * ns.size());
      for (const auto& m : ms) {
        for (const auto& u : ns) out.push_back(multiply(f, m, u));
      }
      return out;
    }
  }
  return {};
}

bool GroupSpec::contains(const FieldTower& t, const MatF& g) const {
  const FieldLevel& f = t.base();
  const int size = matrix_size();
  if (g.rows() != size || g.cols() != size) return false;
  const int n = n_;
  auto block_diagonal = [&] {
    return is_zero(g.block(0, n, n, n)) && is_zero(g.block(n, 0, n, n));
  };
  switch (kind_) {
    case Kind::kFullMatrixSpace: return true;
    case Kind::kGL: return determinant(f, g) != 0;
    case Kind::kU: return is_unitriangular(g);
    case Kind::kN:
      return g.block(0, 0, n, n) == MatF::identity(n) &&
             g.block(n, n, n, n) == MatF::identity(n) && is_zero(g.block(n, 0, n, n));
    case Kind::kMirabolic: return in_mirabolic(f, g, false);
    case Kind::kMirabolicConj: return in_mirabolic(f, g, true);
    case Kind::kUA:
      return block_diagonal() && is_unitriangular(g.block(0, 0, n, n)) &&
             is_unitriangular(g.block(n, n, n, n));
    case Kind::kHA:
      return block_diagonal() && in_mirabolic(f, g.block(0, 0, n, n), false) &&
             in_mirabolic(f, g.block(n, n, n, n), true);
    case Kind::kMPsiA: {
      if (!block_diagonal()) return false;
      const MatF g1 = g.block(0, 0, n, n);
      const auto g2inv = inverse(f, g.block(n, n, n, n));
      if (determinant(f, g1) == 0 || !g2inv) return false;
      // psi_A and its conjugate are additive in X, so an F_p-basis of M(n, F)
      // suffices: x^k E_ij, with x^k of code p^k.
      std::vector<MatF> basis;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          Code c = 1;
          for (int k = 0; k < f.prime_degree(); ++k) {
            MatF b(n, n);
            b(i, j) = c;
            basis.push_back(std::move(b));
            c *= static_cast<Code>(f.characteristic());
          }
        }
      }
      return stabilizes(f, *a_, g1, *g2inv, basis);
    }
    case Kind::kPPsiA: {
      if (!is_zero(g.block(n, 0, n, n))) return false;
      MatF m(2 * n, 2 * n);
      m.set_block(0, 0, g.block(0, 0, n, n));
      m.set_block(n, n, g.block(n, n, n, n));
      return GroupSpec::m_psi(*a_).contains(t, m);
    }
  }
  return false;
}

}  // namespace twjac

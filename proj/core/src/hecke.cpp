#include "guflag/hecke.hpp"

#include <functional>
#include <sstream>

namespace guflag {

ParameterSystem::ParameterSystem(const GroupCtx& W, std::vector<int> class_exponents)
    : class_exp_(std::move(class_exponents)) {
  const int nclasses = W.m() >= 2 ? 2 : 1;
  if (static_cast<int>(class_exp_.size()) != nclasses)
    throw std::domain_error("ParameterSystem: wrong number of class exponents");
  for (int e : class_exp_)
    if (e < 1) throw std::domain_error("ParameterSystem: exponents must be >= 1");
  exp_by_simple_.resize(W.num_simples());
  for (int k = 0; k <= W.m(); ++k) exp_by_simple_[k] = class_exp_[W.simple_class(k)];
}

void HeckeElement::add(const WeylElement& w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto it = c_.find(w);
  if (it == c_.end()) {
    c_[w] = c;
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) c_.erase(it);
  }
}

LaurentPoly HeckeElement::coeff(const WeylElement& w) const {
  auto it = c_.find(w);
  return it == c_.end() ? LaurentPoly::zero() : it->second;
}

HeckeElement HeckeElement::operator+(const HeckeElement& o) const {
  HeckeElement r = *this;
  for (const auto& [w, c] : o.c_) r.add(w, c);
  return r;
}

HeckeElement HeckeElement::operator-(const HeckeElement& o) const {
  HeckeElement r = *this;
  for (const auto& [w, c] : o.c_) r.add(w, -c);
  return r;
}

HeckeElement HeckeElement::scale(const LaurentPoly& f) const {
  HeckeElement r;
  if (f.is_zero()) return r;
  for (const auto& [w, c] : c_) r.add(w, c * f);
  return r;
}

HeckeAlgebra::HeckeAlgebra(const GroupCtx& W, ParameterSystem params)
    : W_(&W), params_(std::move(params)) {}

HeckeElement HeckeAlgebra::left_simple(int s, const HeckeElement& h) const {
  HeckeElement r;
  const WeylElement sw = W_->simple(s);
  const LaurentPoly qs = params_.q_s(s);
  const LaurentPoly qs1 = qs - LaurentPoly::constant(1);
  for (const auto& [u, c] : h.support()) {
    WeylElement su = W_->compose(sw, u);
    if (W_->length(su) > W_->length(u)) {
      r.add(su, c);
    } else {
      r.add(u, c * qs1);
      r.add(su, c * qs);
    }
  }
  return r;
}

HeckeElement HeckeAlgebra::right_simple(const HeckeElement& h, int s) const {
  HeckeElement r;
  const WeylElement sw = W_->simple(s);
  const LaurentPoly qs = params_.q_s(s);
  const LaurentPoly qs1 = qs - LaurentPoly::constant(1);
  for (const auto& [u, c] : h.support()) {
    WeylElement us = W_->compose(u, sw);
    if (W_->length(us) > W_->length(u)) {
      r.add(us, c);
    } else {
      r.add(u, c * qs1);
      r.add(us, c * qs);
    }
  }
  return r;
}

HeckeElement HeckeAlgebra::mul_basis(const WeylElement& x, const HeckeElement& rhs) const {
  ReducedWord rw = W_->reduced_word(x);
  HeckeElement acc;
  for (const auto& [u, c] : rhs.support()) acc.add(W_->compose(rw.omega, u), c);
  for (auto it = rw.word.rbegin(); it != rw.word.rend(); ++it) acc = left_simple(*it, acc);
  return acc;
}

HeckeElement HeckeAlgebra::multiply(const HeckeElement& h1, const HeckeElement& h2) const {
  HeckeElement r;
  for (const auto& [x, c] : h1.support()) {
    HeckeElement part = mul_basis(x, h2);
    for (const auto& [u, cu] : part.support()) r.add(u, cu * c);
  }
  return r;
}

HeckeElement HeckeAlgebra::inverse_basis(const WeylElement& w) const {
  ReducedWord rw = W_->reduced_word(w);
  HeckeElement h = HeckeElement::basis(W_->invert(rw.omega));
  // T_w^{-1} = T_omega^{-1} T_{s_k}^{-1} ... T_{s_1}^{-1}
  for (auto it = rw.word.rbegin(); it != rw.word.rend(); ++it) {
    const int s = *it;
    const LaurentPoly qinv = LaurentPoly::monomial(1, -2 * params_.exponent(s));
    HeckeElement hts = right_simple(h, s).scale(qinv);
    HeckeElement corr = h.scale(LaurentPoly::constant(1) - qinv);
    h = hts - corr;
  }
  return h;
}

int HeckeAlgebra::word_exponent(const Cocharacter& lam) const {
  if (!W_->is_dominant(lam)) throw std::domain_error("word_exponent: lam must be dominant");
  ReducedWord rw = W_->reduced_word(W_->translation(lam));
  int e = 0;
  for (int s : rw.word) e += params_.exponent(s);
  return e;
}

LaurentPoly HeckeAlgebra::q_index(const Cocharacter& mu) const {
  return LaurentPoly::monomial(1, 2 * word_exponent(mu));
}

HeckeElement HeckeAlgebra::theta(const Cocharacter& lam) const {
  W_->check(lam);
  // lam = lam1 - lam2 with both dominant: push by the strictly dominant
  // nu0 = (m, m-1, ..., 1, -1, ..., -m), gamma = 0.
  Cocharacter nu0;
  nu0.gamma = 0;
  nu0.a.assign(W_->d(), 0);
  for (int i = 0; i < W_->m(); ++i) {
    nu0.a[i] = W_->m() - i;
    nu0.a[W_->d() - 1 - i] = -(W_->m() - i);
  }
  auto plus = [&](const Cocharacter& x, const Cocharacter& y, long long k) {
    Cocharacter r = x;
    for (int i = 0; i < W_->d(); ++i) r.a[i] += k * y.a[i];
    r.gamma += k * y.gamma;
    return r;
  };
  long long c = 0;
  while (!W_->is_dominant(plus(lam, nu0, c))) ++c;
  Cocharacter lam1 = plus(lam, nu0, c);
  Cocharacter lam2 = plus(Cocharacter{std::vector<long long>(W_->d(), 0), 0}, nu0, c);
  HeckeElement t1 = HeckeElement::basis(W_->translation(lam1))
                        .scale(LaurentPoly::monomial(1, -word_exponent(lam1)));
  if (c == 0) return t1;
  HeckeElement t2inv = inverse_basis(W_->translation(lam2))
                           .scale(LaurentPoly::monomial(1, word_exponent(lam2)));
  return multiply(t1, t2inv);
}

HeckeElement HeckeAlgebra::bernstein_z(const Cocharacter& mu) const {
  if (!W_->is_dominant(mu)) throw std::domain_error("bernstein_z: mu must be dominant");
  HeckeElement z;
  for (const auto& lam : W_->finite_orbit(mu)) z = z + theta(lam);
  return z;
}

HeckeElement HeckeAlgebra::sstrace_element(const Cocharacter& mu) const {
  HeckeElement z = bernstein_z(mu);
  long long ell = W_->length(W_->translation(mu));
  LaurentPoly f = LaurentPoly::monomial(ell % 2 == 0 ? 1 : -1, word_exponent(mu));
  return z.scale(f);
}

bool HeckeAlgebra::is_central(const HeckeElement& h) const {
  for (int s = 0; s <= W_->m(); ++s)
    if (!(left_simple(s, h) == right_simple(h, s))) return false;
  const WeylElement om = W_->omega();
  HeckeElement l, r;
  for (const auto& [u, c] : h.support()) {
    l.add(W_->compose(om, u), c);
    r.add(W_->compose(u, om), c);
  }
  return l == r;
}

namespace {

// Fraction-free Gauss-Jordan over Z[v, v^{-1}] (one-step Bareiss).  On exit
// the matrix is in reduced echelon form: each pivot column has a single
// nonzero entry and every pivot entry equals the final pivot determinant (up
// to the per-row monomial units stripped at entry).  Divisions by the
// previous pivot are exact; divide_exact throws if that ever fails.
int bareiss_rref(std::vector<std::vector<LaurentPoly>>& M, std::vector<int>& pivot_cols) {
  const int R = static_cast<int>(M.size());
  const int C = R ? static_cast<int>(M[0].size()) : 0;
  // Each row may be scaled by a monomial unit without changing the null space.
  for (int r = 0; r < R; ++r) {
    int mn = 0;
    bool any = false;
    for (const auto& e : M[r])
      if (!e.is_zero()) {
        mn = any ? std::min(mn, e.min_exp()) : e.min_exp();
        any = true;
      }
    if (any && mn != 0)
      for (auto& e : M[r]) e = e.shift(-mn);
  }

  LaurentPoly prev = LaurentPoly::constant(1);
  std::vector<bool> row_used(R, false);
  for (int c = 0; c < C; ++c) {
    int piv = -1;
    for (int r = 0; r < R; ++r)
      if (!row_used[r] && !M[r][c].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    row_used[piv] = true;
    pivot_cols.push_back(c);
    const LaurentPoly pv = M[piv][c];
    for (int r = 0; r < R; ++r) {
      if (r == piv) continue;
      const LaurentPoly f = M[r][c];
      for (int j = 0; j < C; ++j) {
        if (j == c) continue;
        LaurentPoly t = pv * M[r][j] - f * M[piv][j];
        M[r][j] = t.divide_exact(prev);
      }
      M[r][c] = LaurentPoly::zero();
    }
    prev = pv;
  }
  return static_cast<int>(pivot_cols.size());
}

}  // namespace

int HeckeAlgebra::characterization_nullity(const Cocharacter& mu) const {
  // assembled below in central_from_characterization; kept separate for
  // diagnostics
  auto adm = W_->admissible(mu);
  std::vector<WeylElement> cols(adm.begin(), adm.end());
  std::map<WeylElement, int> col_of;
  for (size_t i = 0; i < cols.size(); ++i) col_of[cols[i]] = static_cast<int>(i);

  std::vector<std::vector<LaurentPoly>> M;
  auto add_rows = [&](const std::function<HeckeElement(const HeckeElement&)>& comm) {
    std::map<WeylElement, std::vector<LaurentPoly>> rows;
    for (size_t i = 0; i < cols.size(); ++i) {
      HeckeElement delta = comm(HeckeElement::basis(cols[i]));
      for (const auto& [u, cu] : delta.support()) {
        auto& row = rows[u];
        row.resize(cols.size());
        row[i] = row[i] + cu;
      }
    }
    for (auto& [u, row] : rows) {
      row.resize(cols.size());
      M.push_back(row);
    }
  };
  for (int s = 0; s <= W_->m(); ++s)
    add_rows([&](const HeckeElement& h) { return left_simple(s, h) - right_simple(h, s); });
  const WeylElement om = W_->omega();
  add_rows([&](const HeckeElement& h) {
    HeckeElement l, r;
    for (const auto& [u, c] : h.support()) {
      l.add(W_->compose(om, u), c);
      r.add(W_->compose(u, om), c);
    }
    return l - r;
  });

  std::vector<int> pivot_cols;
  int rank = bareiss_rref(M, pivot_cols);
  return static_cast<int>(cols.size()) - rank;
}

HeckeElement HeckeAlgebra::central_from_characterization(const Cocharacter& mu) const {
  if (!W_->is_dominant(mu)) throw std::domain_error("characterization: mu must be dominant");
  auto adm = W_->admissible(mu);
  std::vector<WeylElement> cols(adm.begin(), adm.end());
  const WeylElement tmu = W_->translation(mu);
  int tmu_col = -1;
  for (size_t i = 0; i < cols.size(); ++i)
    if (cols[i] == tmu) tmu_col = static_cast<int>(i);
  if (tmu_col < 0) throw std::logic_error("characterization: t_mu not admissible?");

  std::vector<std::vector<LaurentPoly>> M;
  auto add_rows = [&](const std::function<HeckeElement(const HeckeElement&)>& comm) {
    std::map<WeylElement, std::vector<LaurentPoly>> rows;
    for (size_t i = 0; i < cols.size(); ++i) {
      HeckeElement delta = comm(HeckeElement::basis(cols[i]));
      for (const auto& [u, cu] : delta.support()) {
        auto& row = rows[u];
        row.resize(cols.size());
        row[i] = row[i] + cu;
      }
    }
    for (auto& [u, row] : rows) {
      row.resize(cols.size());
      M.push_back(row);
    }
  };
  for (int s = 0; s <= W_->m(); ++s)
    add_rows([&](const HeckeElement& h) { return left_simple(s, h) - right_simple(h, s); });
  const WeylElement om = W_->omega();
  add_rows([&](const HeckeElement& h) {
    HeckeElement l, r;
    for (const auto& [u, c] : h.support()) {
      l.add(W_->compose(om, u), c);
      r.add(W_->compose(u, om), c);
    }
    return l - r;
  });

  std::vector<int> pivot_cols;
  int rank = bareiss_rref(M, pivot_cols);
  const int n = static_cast<int>(cols.size());
  if (rank != n - 1)
    throw std::runtime_error("characterization: solution space dimension is " +
                             std::to_string(n - rank) + ", expected 1");

  // The single free column carries the one-dimensional null space.
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_cols) is_pivot[c] = true;
  int free_col = -1;
  for (int c = 0; c < n; ++c)
    if (!is_pivot[c]) free_col = c;

  // Null vector in Cramer form: x_free = Delta (the common pivot value), and
  // for the pivot row holding column c, Delta x_c + M[row][free] x_free = 0.
  LaurentPoly delta;
  std::vector<LaurentPoly> x(n);
  for (int c : pivot_cols) {
    int row = -1;
    for (size_t r = 0; r < M.size(); ++r)
      if (!M[r][c].is_zero()) {
        row = static_cast<int>(r);
        break;
      }
    if (row < 0) throw std::logic_error("characterization: lost pivot row");
    if (delta.is_zero()) delta = M[row][c];
    if (!(M[row][c] == delta)) throw std::logic_error("characterization: pivots out of sync");
    x[c] = -M[row][free_col];
  }
  x[free_col] = delta;
  if (delta.is_zero()) throw std::logic_error("characterization: degenerate pivot");

  // Normalize so the T_{t_mu} coefficient is q(mu)^{-1/2} = v^{-E(mu)}.
  const int E = word_exponent(mu);
  const LaurentPoly& anchor = x[tmu_col];
  if (anchor.is_zero())
    throw std::runtime_error("characterization: solution vanishes at t_mu");
  HeckeElement out;
  for (int c = 0; c < n; ++c) {
    if (x[c].is_zero()) continue;
    LaurentPoly num = x[c].shift(-E);
    out.add(cols[c], num.divide_exact(anchor));
  }
  return out;
}

ParameterSystem fit_parameters(const GroupCtx& W, const std::vector<int>& q_list,
                               const std::function<long long(int, const WeylElement&)>& cell_size) {
  std::vector<int> exp_by_simple(W.num_simples(), 0);
  for (int s = 0; s <= W.m(); ++s) {
    WeylElement w = W.compose(W.simple(s), W.omega());
    int e_common = -1;
    for (int q : q_list) {
      long long size = cell_size(q, w);
      if (size <= 0)
        throw std::runtime_error("fit_parameters: cell for simple " + std::to_string(s) +
                                 " missing from census at q=" + std::to_string(q));
      int e = 0;
      long long v = size;
      while (v % q == 0) {
        v /= q;
        ++e;
      }
      if (v != 1 || e < 1)
        throw std::runtime_error("fit_parameters: cell size " + std::to_string(size) +
                                 " at q=" + std::to_string(q) + " is not a positive power of q");
      if (e_common < 0) e_common = e;
      if (e != e_common)
        throw std::runtime_error("fit_parameters: inconsistent exponents across primes for s=" +
                                 std::to_string(s));
    }
    exp_by_simple[s] = e_common;
  }
  const int nclasses = W.m() >= 2 ? 2 : 1;
  std::vector<int> class_exp(nclasses, -1);
  for (int s = 0; s <= W.m(); ++s) {
    int cls = W.simple_class(s);
    if (class_exp[cls] < 0) class_exp[cls] = exp_by_simple[s];
    if (class_exp[cls] != exp_by_simple[s])
      throw std::runtime_error(
          "fit_parameters: conjugate simple reflections disagree (s=" + std::to_string(s) +
          " has e=" + std::to_string(exp_by_simple[s]) + ", class has e=" +
          std::to_string(class_exp[cls]) + ")");
  }
  return ParameterSystem(W, class_exp);
}

}  // namespace guflag

#include "guflag/submodule.hpp"

#include <algorithm>

namespace guflag {

namespace {

using Col = std::vector<TruncSeries>;

bool col_is_zero(const Col& c) {
  for (const auto& s : c)
    if (!s.is_zero()) return false;
  return true;
}

Col col_sub_scaled(const Col& a, const Col& b, const TruncSeries& f) {
  Col r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] = r[i].sub(b[i].mul(f));
  return r;
}

Col col_mul(const Col& a, const TruncSeries& f) {
  Col r = a;
  for (auto& s : r) s = s.mul(f);
  return r;
}

Col col_shift(const Col& a, int k) {
  Col r = a;
  for (auto& s : r) s = s.shift(k);
  return r;
}

}  // namespace

Submodule Submodule::zero(RingPtr ring, int ambient_rank) {
  Submodule s;
  s.ring_ = std::move(ring);
  s.d_ = ambient_rank;
  s.canon_ = TruncMatrix(s.ring_, ambient_rank, 0);
  return s;
}

Submodule Submodule::canonicalize(const TruncMatrix& gens) {
  RingPtr ring = gens.ring();
  const int d = gens.rows();
  const int hi = ring->hi();

  std::vector<Col> active;
  for (int c = 0; c < gens.cols(); ++c) {
    Col col = gens.column(c);
    if (!col_is_zero(col)) active.push_back(std::move(col));
  }

  std::vector<Col> result;
  std::vector<int> pivot_row, pivot_exp;

  for (int r = 0; r < d; ++r) {
    // Minimal t-valuation at row r among the active columns.
    int best = -1, beste = hi;
    for (size_t j = 0; j < active.size(); ++j) {
      int v = active[j][r].valuation();
      if (v < beste) {
        beste = v;
        best = static_cast<int>(j);
      }
    }
    if (best < 0 || beste >= hi) continue;  // no pivot in this row

    Col piv = std::move(active[best]);
    active.erase(active.begin() + best);

    // Normalize the pivot entry to the monic monomial t^beste.
    TruncSeries unit = piv[r].shift(-beste);  // valuation 0
    piv = col_mul(piv, unit.unit_inv());

    // Eliminate row r from the remaining active columns.
    for (auto& col : active) {
      if (col[r].is_zero()) continue;
      TruncSeries f = col[r].shift(-beste);
      col = col_sub_scaled(col, piv, f);
    }

    // Howell closure: the annihilator multiple may have lower rows left.
    Col closure = col_shift(piv, hi - beste);
    if (!col_is_zero(closure)) active.push_back(std::move(closure));

    // Drop dead columns.
    active.erase(std::remove_if(active.begin(), active.end(), col_is_zero), active.end());

    result.push_back(std::move(piv));
    pivot_row.push_back(r);
    pivot_exp.push_back(beste);
  }

  // Reduce entries of earlier columns at later pivot rows modulo the pivot.
  for (size_t k = 0; k < result.size(); ++k) {
    const int rk = pivot_row[k];
    const int ek = pivot_exp[k];
    for (size_t j = 0; j < k; ++j) {
      const TruncSeries& entry = result[j][rk];
      if (entry.is_zero()) continue;
      // Split off the part with exponents >= ek.
      TruncSeries high(entry.ring());
      for (int e = std::max(ek, entry.ring()->lo()); e < entry.ring()->hi(); ++e) {
        felt c = entry.coeff(e);
        if (c) high = high.add(TruncSeries::monomial(entry.ring(), e, c));
      }
      if (high.is_zero()) continue;
      TruncSeries f = high.shift(-ek);
      result[j] = col_sub_scaled(result[j], result[k], f);
    }
  }

  Submodule s;
  s.ring_ = ring;
  s.d_ = d;
  s.canon_ = TruncMatrix(ring, d, static_cast<int>(result.size()));
  for (size_t j = 0; j < result.size(); ++j)
    for (int r = 0; r < d; ++r) s.canon_.at(r, static_cast<int>(j)) = result[j][r];
  s.pivot_row_ = std::move(pivot_row);
  s.pivot_exp_ = std::move(pivot_exp);
  return s;
}

Submodule Submodule::monomial(RingPtr ring, const std::vector<int>& val, bool clamp) {
  const int d = static_cast<int>(val.size());
  TruncMatrix gens(ring, d, d);
  for (int c = 0; c < d; ++c) {
    int e = val[c];
    if (e >= ring->hi()) continue;
    if (e < ring->lo()) {
      if (!clamp) throw std::domain_error("Submodule::monomial: valuation below window");
      e = ring->lo();
    }
    gens.at(c, c) = TruncSeries::monomial(ring, e, 1);
  }
  return canonicalize(gens);
}

Submodule Submodule::chain_member(RingPtr ring, int d, int i, int k) {
  // t^k V_i with V_i = t^{-1} K[t]^{i mod d shifted} ... : coordinate c has
  // valuation k - 1 for c < i0, k for c >= i0, all shifted by the period.
  int period = i >= 0 ? i / d : -((-i + d - 1) / d);
  int i0 = i - period * d;  // 0 <= i0 < d
  std::vector<int> val(d);
  for (int c = 0; c < d; ++c) val[c] = k - period - (c < i0 ? 1 : 0);
  return monomial(std::move(ring), val, /*clamp=*/true);
}

int Submodule::dim() const {
  int s = 0;
  for (int e : pivot_exp_) s += ring_->hi() - e;
  return s;
}

bool Submodule::member(const std::vector<TruncSeries>& v) const {
  if (static_cast<int>(v.size()) != d_) throw std::domain_error("member: rank mismatch");
  std::vector<TruncSeries> w = v;
  for (int j = 0; j < canon_.cols(); ++j) {
    const int r = pivot_row_[j];
    const int e = pivot_exp_[j];
    const TruncSeries& entry = w[r];
    if (entry.is_zero()) continue;
    TruncSeries high(ring_);
    for (int ee = std::max(e, ring_->lo()); ee < ring_->hi(); ++ee) {
      felt c = entry.coeff(ee);
      if (c) high = high.add(TruncSeries::monomial(ring_, ee, c));
    }
    if (high.is_zero()) continue;
    TruncSeries f = high.shift(-e);
    for (int r2 = 0; r2 < d_; ++r2) w[r2] = w[r2].sub(canon_.at(r2, j).mul(f));
  }
  for (const auto& s : w)
    if (!s.is_zero()) return false;
  return true;
}

bool Submodule::contains(const Submodule& other) const {
  for (int c = 0; c < other.canon_.cols(); ++c)
    if (!member(other.canon_.column(c))) return false;
  return true;
}

Submodule Submodule::join(const Submodule& other) const {
  if (d_ != other.d_ || !(*ring_ == *other.ring_)) throw std::domain_error("join: ring mismatch");
  TruncMatrix gens(ring_, d_, canon_.cols() + other.canon_.cols());
  for (int c = 0; c < canon_.cols(); ++c)
    for (int r = 0; r < d_; ++r) gens.at(r, c) = canon_.at(r, c);
  for (int c = 0; c < other.canon_.cols(); ++c)
    for (int r = 0; r < d_; ++r) gens.at(r, canon_.cols() + c) = other.canon_.at(r, c);
  return canonicalize(gens);
}

FMatrix Submodule::f_basis() const {
  const FieldCtx& F = ring_->field();
  const int h = ring_->height();
  const int D = d_ * h;
  struct Gen {
    int col, shift;
  };
  std::vector<Gen> gens;
  for (int j = 0; j < canon_.cols(); ++j)
    for (int k = 0; k < ring_->hi() - pivot_exp_[j]; ++k) gens.push_back({j, k});
  FMatrix m(F, static_cast<int>(gens.size()), D);
  for (size_t g = 0; g < gens.size(); ++g) {
    for (int r = 0; r < d_; ++r) {
      const TruncSeries& s = canon_.at(r, gens[g].col);
      for (int e = ring_->lo(); e < ring_->hi(); ++e) {
        felt c = s.coeff(e);
        if (!c) continue;
        int e2 = e + gens[g].shift;
        if (e2 >= ring_->hi()) continue;
        m.at(static_cast<int>(g), r * h + (e2 - ring_->lo())) = c;
      }
    }
  }
  return m;
}

std::vector<TruncSeries> Submodule::unflatten(const std::vector<felt>& flat) const {
  const int h = ring_->height();
  std::vector<TruncSeries> v(d_, TruncSeries(ring_));
  for (int r = 0; r < d_; ++r) {
    std::vector<felt> c(h, 0);
    for (int i = 0; i < h; ++i) c[i] = flat[r * h + i];
    v[r] = TruncSeries(ring_, std::move(c));
  }
  return v;
}

std::vector<felt> Submodule::flatten(const std::vector<TruncSeries>& v) const {
  const int h = ring_->height();
  std::vector<felt> flat(d_ * h, 0);
  for (int r = 0; r < d_; ++r)
    for (int e = ring_->lo(); e < ring_->hi(); ++e) flat[r * h + (e - ring_->lo())] = v[r].coeff(e);
  return flat;
}

Submodule Submodule::meet(const Submodule& other) const {
  if (d_ != other.d_ || !(*ring_ == *other.ring_)) throw std::domain_error("meet: ring mismatch");
  FMatrix a = f_basis();
  FMatrix b = other.f_basis();
  FMatrix inter = row_intersection(a, b);
  return submodule_from_f_rows(ring_, d_, inter);
}

Submodule Submodule::scale(int k) const {
  if (k == 0) return *this;
  const int hi = ring_->hi();
  std::vector<Col> cols;
  for (int c = 0; c < canon_.cols(); ++c) cols.push_back(canon_.column(c));
  if (k > 0) {
    // Tail correctness: t^k L must still contain t^hi K[[t]]^d.
    std::vector<int> tail(d_, hi - k);
    Submodule needed = monomial(ring_, tail, /*clamp=*/false);
    if (!contains(needed))
      throw std::domain_error("scale: lattice too small for upward scaling");
    for (auto& col : cols) col = col_shift(col, k);
  } else {
    for (auto& col : cols) {
      for (const auto& s : col)
        if (!s.is_zero() && s.valuation() + k < ring_->lo())
          throw std::domain_error("scale: generator falls below window");
      col = col_shift(col, k);
    }
    // The implicit tail scales to t^{hi+k} K[[t]]^d, now window-visible.
    for (int c = 0; c < d_; ++c) {
      Col mono(d_, TruncSeries(ring_));
      mono[c] = TruncSeries::monomial(ring_, hi + k, 1);
      cols.push_back(std::move(mono));
    }
  }
  TruncMatrix gens(ring_, d_, static_cast<int>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j)
    for (int r = 0; r < d_; ++r) gens.at(r, static_cast<int>(j)) = cols[j][r];
  return canonicalize(gens);
}

Submodule Submodule::rewindow(RingPtr target) const {
  if (target->lo() > ring_->lo() || target->hi() < ring_->hi())
    throw std::domain_error("rewindow: target window must contain the current one");
  const int old_hi = ring_->hi();
  std::vector<Col> cols;
  for (int c = 0; c < canon_.cols(); ++c) {
    Col col(d_, TruncSeries(target));
    for (int r = 0; r < d_; ++r) col[r] = canon_.at(r, c).rewindow(target);
    cols.push_back(std::move(col));
  }
  // Materialize the old implicit tail.
  if (old_hi < target->hi()) {
    for (int c = 0; c < d_; ++c) {
      Col mono(d_, TruncSeries(target));
      mono[c] = TruncSeries::monomial(target, old_hi, 1);
      cols.push_back(std::move(mono));
    }
  }
  TruncMatrix gens(target, d_, static_cast<int>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j)
    for (int r = 0; r < d_; ++r) gens.at(r, static_cast<int>(j)) = cols[j][r];
  return canonicalize(gens);
}

Submodule Submodule::apply(const TruncMatrix& g) const {
  if (g.rows() != d_ || g.cols() != d_) throw std::domain_error("apply: shape mismatch");
  TruncMatrix gens(ring_, d_, canon_.cols());
  for (int c = 0; c < canon_.cols(); ++c) {
    Col col = canon_.column(c);
    for (int r = 0; r < d_; ++r) {
      TruncSeries s(ring_);
      for (int k = 0; k < d_; ++k) s = s.add(mul_into(g.at(r, k), col[k], ring_));
      gens.at(r, c) = s;
    }
  }
  return canonicalize(gens);
}

bool Submodule::operator==(const Submodule& other) const {
  return d_ == other.d_ && *ring_ == *other.ring_ && canon_ == other.canon_;
}

std::vector<felt> Submodule::key() const {
  std::vector<felt> k;
  k.push_back(static_cast<felt>(canon_.cols()));
  for (int c = 0; c < canon_.cols(); ++c)
    for (int r = 0; r < d_; ++r)
      for (int e = ring_->lo(); e < ring_->hi(); ++e) k.push_back(canon_.at(r, c).coeff(e));
  return k;
}

Submodule submodule_from_f_rows(RingPtr ring, int d, const FMatrix& rows) {
  if (rows.rows == 0) return Submodule::zero(ring, d);
  const int h = ring->height();
  TruncMatrix gens(ring, d, rows.rows);
  for (int i = 0; i < rows.rows; ++i)
    for (int r = 0; r < d; ++r) {
      std::vector<felt> c(h, 0);
      for (int k = 0; k < h; ++k) c[k] = rows.at(i, r * h + k);
      gens.at(r, i) = TruncSeries(ring, std::move(c));
    }
  return Submodule::canonicalize(gens);
}

}  // namespace guflag

#include "guflag/series.hpp"

#include <sstream>

namespace guflag {

SeriesRing::SeriesRing(FieldPtr base, int lo, int hi) : base_(std::move(base)), lo_(lo), hi_(hi) {
  if (lo_ > 0) throw std::domain_error("SeriesRing: window must contain or touch 0 from below");
  if (hi_ <= lo_) throw std::domain_error("SeriesRing: empty window");
}

RingPtr make_ring(FieldPtr base, int lo, int hi) {
  return std::make_shared<SeriesRing>(std::move(base), lo, hi);
}

TruncSeries::TruncSeries(RingPtr ring) : ring_(std::move(ring)), c_(ring_->height(), 0) {}

TruncSeries::TruncSeries(RingPtr ring, std::vector<felt> coeffs)
    : ring_(std::move(ring)), c_(std::move(coeffs)) {
  if (static_cast<int>(c_.size()) != ring_->height())
    throw std::domain_error("TruncSeries: coefficient vector does not match window");
}

TruncSeries TruncSeries::monomial(RingPtr ring, int exponent, felt c) {
  TruncSeries s(ring);
  if (c == 0) return s;
  if (exponent >= ring->hi()) return s;  // truncated away
  if (exponent < ring->lo()) throw std::domain_error("TruncSeries::monomial: exponent below window");
  s.c_[exponent - ring->lo()] = c;
  return s;
}

TruncSeries TruncSeries::constant(RingPtr ring, felt c) { return monomial(std::move(ring), 0, c); }

felt TruncSeries::coeff(int exponent) const {
  if (exponent < ring_->lo() || exponent >= ring_->hi()) return 0;
  return c_[exponent - ring_->lo()];
}

bool TruncSeries::is_zero() const {
  for (felt x : c_)
    if (x) return false;
  return true;
}

int TruncSeries::valuation() const {
  for (int i = 0; i < static_cast<int>(c_.size()); ++i)
    if (c_[i]) return ring_->lo() + i;
  return ring_->hi();
}

void TruncSeries::check_same_ring(const TruncSeries& o) const {
  if (!(*ring_ == *o.ring_)) throw std::domain_error("TruncSeries: ring mismatch");
}

TruncSeries TruncSeries::add(const TruncSeries& o) const {
  check_same_ring(o);
  const FieldCtx& F = ring_->field();
  TruncSeries r(ring_);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = F.add(c_[i], o.c_[i]);
  return r;
}

TruncSeries TruncSeries::sub(const TruncSeries& o) const {
  check_same_ring(o);
  const FieldCtx& F = ring_->field();
  TruncSeries r(ring_);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = F.sub(c_[i], o.c_[i]);
  return r;
}

TruncSeries TruncSeries::neg() const {
  const FieldCtx& F = ring_->field();
  TruncSeries r(ring_);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = F.neg(c_[i]);
  return r;
}

TruncSeries mul_into(const TruncSeries& a, const TruncSeries& b, RingPtr out) {
  if (!(*a.ring()->field_ptr() == *out->field_ptr()))
    throw std::domain_error("mul_into: field mismatch");
  const FieldCtx& F = out->field();
  TruncSeries r(out);
  std::vector<felt> acc(out->height(), 0);
  const int alo = a.ring()->lo(), ahi = a.ring()->hi();
  const int blo = b.ring()->lo(), bhi = b.ring()->hi();
  for (int i = alo; i < ahi; ++i) {
    felt ai = a.coeff(i);
    if (!ai) continue;
    for (int j = blo; j < bhi; ++j) {
      felt bj = b.coeff(j);
      if (!bj) continue;
      int e = i + j;
      felt prod = F.mul(ai, bj);
      if (e >= out->hi()) continue;
      if (e < out->lo()) throw std::domain_error("series product: nonzero term below window");
      acc[e - out->lo()] = F.add(acc[e - out->lo()], prod);
    }
  }
  return TruncSeries(out, std::move(acc));
}

TruncSeries TruncSeries::mul(const TruncSeries& o) const {
  check_same_ring(o);
  return mul_into(*this, o, ring_);
}

TruncSeries TruncSeries::scalar_mul(felt c) const {
  const FieldCtx& F = ring_->field();
  TruncSeries r(ring_);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = F.mul(c_[i], c);
  return r;
}

TruncSeries TruncSeries::conj() const {
  if (ring_->field().deg() != 2)
    throw std::domain_error("conj: base field has no nontrivial involution");
  const FieldCtx& F = ring_->field();
  TruncSeries r(ring_);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = F.frob(c_[i]);
  return r;
}

TruncSeries TruncSeries::shift(int k) const {
  TruncSeries r(ring_);
  for (int e = ring_->lo(); e < ring_->hi(); ++e) {
    felt c = coeff(e);
    if (!c) continue;
    int e2 = e + k;
    if (e2 >= ring_->hi()) continue;
    if (e2 < ring_->lo()) throw std::domain_error("shift: nonzero term below window");
    r.c_[e2 - ring_->lo()] = c;
  }
  return r;
}

TruncSeries TruncSeries::unit_inv() const {
  const FieldCtx& F = ring_->field();
  for (int e = ring_->lo(); e < 0; ++e)
    if (coeff(e)) throw std::domain_error("unit_inv: negative-exponent terms present");
  felt c0 = coeff(0);
  if (!c0) throw std::domain_error("unit_inv: not a unit");
  // Standard series inversion, one coefficient at a time.
  TruncSeries r(ring_);
  r.c_[0 - ring_->lo()] = F.inv(c0);
  for (int e = 1; e < ring_->hi(); ++e) {
    felt s = 0;
    for (int j = 0; j < e; ++j) s = F.add(s, F.mul(r.coeff(j), coeff(e - j)));
    r.c_[e - ring_->lo()] = F.neg(F.div(s, c0));
  }
  return r;
}

TruncSeries TruncSeries::rewindow(RingPtr target) const {
  if (!(*ring_->field_ptr() == *target->field_ptr()))
    throw std::domain_error("rewindow: field mismatch");
  TruncSeries r(target);
  for (int e = ring_->lo(); e < ring_->hi(); ++e) {
    felt c = coeff(e);
    if (!c) continue;
    if (e < target->lo() || e >= target->hi())
      throw std::domain_error("rewindow: nonzero coefficient outside target window");
    r = r.add(TruncSeries::monomial(target, e, c));
  }
  return r;
}

bool TruncSeries::operator==(const TruncSeries& o) const {
  return *ring_ == *o.ring_ && c_ == o.c_;
}

std::string TruncSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (int e = ring_->lo(); e < ring_->hi(); ++e) {
    felt c = coeff(e);
    if (!c) continue;
    if (!first) os << " + ";
    os << int(c) << "*t^" << e;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

TruncMatrix::TruncMatrix(RingPtr ring, int rows, int cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), e_(rows * cols, TruncSeries(ring_)) {}

TruncMatrix TruncMatrix::identity(RingPtr ring, int n) {
  TruncMatrix m(ring, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = TruncSeries::constant(ring, 1);
  return m;
}

TruncMatrix TruncMatrix::anti_identity(RingPtr ring, int n) {
  TruncMatrix m(ring, n, n);
  for (int i = 0; i < n; ++i) m.at(i, n - 1 - i) = TruncSeries::constant(ring, 1);
  return m;
}

TruncMatrix TruncMatrix::mul(const TruncMatrix& o) const {
  if (cols_ != o.rows_) throw std::domain_error("TruncMatrix::mul: shape mismatch");
  TruncMatrix r(ring_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < o.cols_; ++j) {
      TruncSeries s(ring_);
      for (int k = 0; k < cols_; ++k) s = s.add(at(i, k).mul(o.at(k, j)));
      r.at(i, j) = s;
    }
  return r;
}

TruncMatrix TruncMatrix::add(const TruncMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::domain_error("TruncMatrix::add: shape");
  TruncMatrix r(ring_, rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i].add(o.e_[i]);
  return r;
}

TruncMatrix TruncMatrix::sub(const TruncMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::domain_error("TruncMatrix::sub: shape");
  TruncMatrix r(ring_, rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i].sub(o.e_[i]);
  return r;
}

TruncMatrix TruncMatrix::scalar_mul(const TruncSeries& s) const {
  TruncMatrix r(ring_, rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i].mul(s);
  return r;
}

TruncMatrix TruncMatrix::conj_transpose() const {
  TruncMatrix r(ring_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j).conj();
  return r;
}

TruncMatrix TruncMatrix::transpose() const {
  TruncMatrix r(ring_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

TruncMatrix TruncMatrix::conj() const {
  TruncMatrix r(ring_, rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i].conj();
  return r;
}

std::vector<TruncSeries> TruncMatrix::apply(const std::vector<TruncSeries>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::domain_error("apply: shape mismatch");
  std::vector<TruncSeries> r(rows_, TruncSeries(ring_));
  for (int i = 0; i < rows_; ++i) {
    TruncSeries s(ring_);
    for (int k = 0; k < cols_; ++k) s = s.add(at(i, k).mul(v[k]));
    r[i] = s;
  }
  return r;
}

std::vector<TruncSeries> TruncMatrix::column(int c) const {
  std::vector<TruncSeries> r(rows_, TruncSeries(ring_));
  for (int i = 0; i < rows_; ++i) r[i] = at(i, c);
  return r;
}

TruncMatrix TruncMatrix::inverse() const {
  if (rows_ != cols_) throw std::domain_error("inverse: not square");
  int n = rows_;
  TruncMatrix a = *this;
  TruncMatrix inv = identity(ring_, n);
  std::vector<bool> used(n, false);
  std::vector<int> pivot_of_col(n, -1);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = 0; r < n; ++r) {
      if (used[r]) continue;
      // unit pivot: valuation 0 and window reaching 0
      if (a.at(r, c).coeff(0) != 0 && a.at(r, c).valuation() >= 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) throw std::domain_error("inverse: no unit pivot, matrix not invertible");
    used[piv] = true;
    pivot_of_col[c] = piv;
    TruncSeries pinv = a.at(piv, c).unit_inv();
    for (int j = 0; j < n; ++j) {
      a.at(piv, j) = a.at(piv, j).mul(pinv);
      inv.at(piv, j) = inv.at(piv, j).mul(pinv);
    }
    for (int r = 0; r < n; ++r) {
      if (r == piv) continue;
      TruncSeries f = a.at(r, c);
      if (f.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        a.at(r, j) = a.at(r, j).sub(f.mul(a.at(piv, j)));
        inv.at(r, j) = inv.at(r, j).sub(f.mul(inv.at(piv, j)));
      }
    }
  }
  // rows permuted: row pivot_of_col[c] currently holds row c of the inverse
  TruncMatrix out(ring_, n, n);
  for (int c = 0; c < n; ++c)
    for (int j = 0; j < n; ++j) out.at(c, j) = inv.at(pivot_of_col[c], j);
  return out;
}

bool TruncMatrix::operator==(const TruncMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < e_.size(); ++i)
    if (!(e_[i] == o.e_[i])) return false;
  return true;
}

}  // namespace guflag

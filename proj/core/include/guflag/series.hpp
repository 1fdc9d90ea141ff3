#pragma once

#include <memory>
#include <string>
#include <vector>

#include "guflag/field.hpp"

namespace guflag {

/// Coefficient window [lo, hi) for truncated Laurent polynomials in t over a
/// finite field.  Conjugation acts on coefficients by Frobenius and fixes t.
class SeriesRing {
public:
  SeriesRing(FieldPtr base, int lo, int hi);

  const FieldCtx& field() const { return *base_; }
  FieldPtr field_ptr() const { return base_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }
  int height() const { return hi_ - lo_; }

  bool operator==(const SeriesRing& o) const {
    return lo_ == o.lo_ && hi_ == o.hi_ && *base_ == *o.base_;
  }

private:
  FieldPtr base_;
  int lo_, hi_;
};

using RingPtr = std::shared_ptr<const SeriesRing>;

RingPtr make_ring(FieldPtr base, int lo, int hi);

/// Element of K[t] truncated to the ring window.  Immutable value type.
class TruncSeries {
public:
  TruncSeries() = default;
  explicit TruncSeries(RingPtr ring);
  TruncSeries(RingPtr ring, std::vector<felt> coeffs);  // indexed lo..hi-1

  static TruncSeries monomial(RingPtr ring, int exponent, felt c = 1);
  static TruncSeries constant(RingPtr ring, felt c);

  const RingPtr& ring() const { return ring_; }
  felt coeff(int exponent) const;
  bool is_zero() const;
  /// Least exponent with nonzero coefficient; ring()->hi() when zero.
  int valuation() const;

  TruncSeries add(const TruncSeries& o) const;
  TruncSeries sub(const TruncSeries& o) const;
  TruncSeries neg() const;
  /// Product within the common window.  Throws if a nonzero product term
  /// would fall below lo: low-end truncation is never silent.
  TruncSeries mul(const TruncSeries& o) const;
  TruncSeries scalar_mul(felt c) const;
  /// Coefficient-wise Frobenius; requires a deg-2 base field.
  TruncSeries conj() const;
  /// Multiply by t^k, truncating exponents >= hi; throws if a nonzero term
  /// would land below lo.
  TruncSeries shift(int k) const;
  /// Inverse of a unit (valuation min(lo,0)... precisely: requires the
  /// coefficient at exponent 0 to be nonzero and all below to vanish).
  TruncSeries unit_inv() const;

  /// Re-express in another window over the same field.  Nonzero coefficients
  /// outside the target window raise domain_error; new room is zero-filled.
  TruncSeries rewindow(RingPtr target) const;

  bool operator==(const TruncSeries& o) const;
  bool operator!=(const TruncSeries& o) const { return !(*this == o); }

  std::string str() const;

private:
  RingPtr ring_;
  std::vector<felt> c_;  // size hi-lo

  void check_same_ring(const TruncSeries& o) const;
};

/// Product of two series from possibly different windows, truncated into
/// `out`.  Exact: throws if a nonzero term falls below out->lo().
TruncSeries mul_into(const TruncSeries& a, const TruncSeries& b, RingPtr out);

/// Dense matrix over a SeriesRing.
class TruncMatrix {
public:
  TruncMatrix() = default;
  TruncMatrix(RingPtr ring, int rows, int cols);

  static TruncMatrix identity(RingPtr ring, int n);
  /// Anti-identity: 1 on the anti-diagonal, 0 elsewhere.
  static TruncMatrix anti_identity(RingPtr ring, int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const RingPtr& ring() const { return ring_; }

  const TruncSeries& at(int r, int c) const { return e_[r * cols_ + c]; }
  TruncSeries& at(int r, int c) { return e_[r * cols_ + c]; }

  TruncMatrix mul(const TruncMatrix& o) const;
  TruncMatrix add(const TruncMatrix& o) const;
  TruncMatrix sub(const TruncMatrix& o) const;
  TruncMatrix scalar_mul(const TruncSeries& s) const;
  TruncMatrix conj_transpose() const;
  TruncMatrix transpose() const;
  TruncMatrix conj() const;

  std::vector<TruncSeries> apply(const std::vector<TruncSeries>& v) const;
  std::vector<TruncSeries> column(int c) const;

  /// Inverse by Gaussian elimination with unit pivots.  Throws
  /// domain_error when the matrix is not invertible over the local ring.
  TruncMatrix inverse() const;

  bool operator==(const TruncMatrix& o) const;
  bool operator!=(const TruncMatrix& o) const { return !(*this == o); }

private:
  RingPtr ring_;
  int rows_ = 0, cols_ = 0;
  std::vector<TruncSeries> e_;
};

}  // namespace guflag

#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace guflag {

/// Exact rational with 64-bit components; throws on overflow.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n) : num(n) {}
  Rational(long long n, long long d);

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational operator-() const { return Rational(-num, den); }
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  bool is_zero() const { return num == 0; }

  /// p-adic valuation; throws on zero.
  int valuation(int p) const;
  /// Residue mod p of the unit part p^{-v} * this; defined for odd p.
  int unit_mod_p(int p) const;
};

/// Element of the unramified quadratic extension Q_p(s), s^2 = eps a unit
/// non-residue, modeled exactly as x + y s with rational x, y.  Conjugation
/// flips the sign of y.  Adequate for isometry-class computations, which
/// only need exact determinants and valuation parities.
struct QuadScalar {
  Rational x, y;

  QuadScalar() = default;
  QuadScalar(Rational re) : x(re) {}
  QuadScalar(Rational re, Rational im) : x(re), y(im) {}

  QuadScalar conj() const { return {x, -y}; }
  bool is_zero() const { return x.is_zero() && y.is_zero(); }
  bool is_rational() const { return y.is_zero(); }
};

QuadScalar qadd(const QuadScalar& a, const QuadScalar& b);
QuadScalar qsub(const QuadScalar& a, const QuadScalar& b);
QuadScalar qmul(const QuadScalar& a, const QuadScalar& b, int eps);
QuadScalar qdiv(const QuadScalar& a, const QuadScalar& b, int eps);

/// Q_p scalar carried only as (valuation, unit class mod p): all the
/// classifier needs.  Convertible to an exact Rational p^v * u.
struct LocalFieldScalar {
  int valuation = 0;
  int unit_class = 1;  // in 1..p-1

  Rational to_rational(int p) const;
};

}  // namespace guflag

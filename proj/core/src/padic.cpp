#include "guflag/padic.hpp"

#include <numeric>

namespace guflag {

namespace {

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Rational: overflow");
  return r;
}

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Rational: overflow");
  return r;
}

}  // namespace

Rational::Rational(long long n, long long d) : num(n), den(d) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational Rational::operator+(const Rational& o) const {
  return Rational(checked_add(checked_mul(num, o.den), checked_mul(o.num, den)),
                  checked_mul(den, o.den));
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
  return Rational(checked_mul(num, o.num), checked_mul(den, o.den));
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num == 0) throw std::domain_error("Rational: division by zero");
  return Rational(checked_mul(num, o.den), checked_mul(den, o.num));
}

int Rational::valuation(int p) const {
  if (num == 0) throw std::domain_error("valuation of zero");
  int v = 0;
  long long n = num < 0 ? -num : num;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  long long d = den;
  while (d % p == 0) {
    d /= p;
    --v;
  }
  return v;
}

int Rational::unit_mod_p(int p) const {
  if (num == 0) throw std::domain_error("unit part of zero");
  long long n = num, d = den;
  while (n % p == 0) n /= p;
  while (d % p == 0) d /= p;
  long long nm = ((n % p) + p) % p;
  long long dm = ((d % p) + p) % p;
  // invert dm mod p
  long long inv = 1;
  for (long long k = 1; k < p; ++k)
    if ((dm * k) % p == 1) {
      inv = k;
      break;
    }
  return static_cast<int>((nm * inv) % p);
}

QuadScalar qadd(const QuadScalar& a, const QuadScalar& b) { return {a.x + b.x, a.y + b.y}; }
QuadScalar qsub(const QuadScalar& a, const QuadScalar& b) { return {a.x - b.x, a.y - b.y}; }

QuadScalar qmul(const QuadScalar& a, const QuadScalar& b, int eps) {
  return {a.x * b.x + a.y * b.y * Rational(eps), a.x * b.y + a.y * b.x};
}

QuadScalar qdiv(const QuadScalar& a, const QuadScalar& b, int eps) {
  // norm = x^2 - eps y^2
  Rational nrm = b.x * b.x - b.y * b.y * Rational(eps);
  if (nrm.is_zero()) throw std::domain_error("QuadScalar: division by zero");
  QuadScalar c = qmul(a, b.conj(), eps);
  return {c.x / nrm, c.y / nrm};
}

Rational LocalFieldScalar::to_rational(int p) const {
  if (unit_class <= 0 || unit_class >= p) throw std::domain_error("LocalFieldScalar: bad unit class");
  Rational r(unit_class);
  Rational pw(1);
  int v = valuation;
  while (v > 0) {
    pw = pw * Rational(p);
    --v;
  }
  while (v < 0) {
    pw = pw / Rational(p);
    ++v;
  }
  return r * pw;
}

}  // namespace guflag

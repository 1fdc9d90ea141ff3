#include "guflag/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace guflag {

namespace {

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("LaurentPoly: overflow");
  return r;
}

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("LaurentPoly: overflow");
  return r;
}

}  // namespace

void LaurentPoly::add_term(int exp, long long coeff) {
  if (coeff == 0) return;
  auto it = c_.find(exp);
  if (it == c_.end()) {
    c_[exp] = coeff;
  } else {
    it->second = checked_add(it->second, coeff);
    if (it->second == 0) c_.erase(it);
  }
}

LaurentPoly LaurentPoly::monomial(long long coeff, int exp) {
  LaurentPoly p;
  p.add_term(exp, coeff);
  return p;
}

long long LaurentPoly::coeff(int exp) const {
  auto it = c_.find(exp);
  return it == c_.end() ? 0 : it->second;
}

int LaurentPoly::min_exp() const {
  if (c_.empty()) throw std::domain_error("min_exp of zero");
  return c_.begin()->first;
}

int LaurentPoly::max_exp() const {
  if (c_.empty()) throw std::domain_error("max_exp of zero");
  return c_.rbegin()->first;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (auto [e, c] : o.c_) r.add_term(e, c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (auto [e, c] : o.c_) r.add_term(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (auto [e, c] : c_) r.c_[e] = -c;
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (auto [e1, c1] : c_)
    for (auto [e2, c2] : o.c_) r.add_term(e1 + e2, checked_mul(c1, c2));
  return r;
}

LaurentPoly LaurentPoly::shift(int k) const {
  LaurentPoly r;
  for (auto [e, c] : c_) r.c_[e + k] = c;
  return r;
}

LaurentPoly LaurentPoly::divide(const LaurentPoly& divisor, LaurentPoly& remainder) const {
  if (divisor.is_zero()) throw std::domain_error("LaurentPoly: division by zero");
  LaurentPoly q;
  LaurentPoly rem = *this;
  const int de = divisor.max_exp();
  const long long dc = divisor.c_.rbegin()->second;
  // Lowest quotient exponent any exact division could produce.
  const int qmin = is_zero() ? 0 : min_exp() - divisor.min_exp();
  while (!rem.is_zero()) {
    int e = rem.max_exp();
    long long c = rem.c_.rbegin()->second;
    int qe = e - de;
    if (c % dc != 0 || qe < qmin) break;
    LaurentPoly t = monomial(c / dc, qe);
    q = q + t;
    rem = rem - t * divisor;
  }
  remainder = rem;
  return q;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  LaurentPoly rem;
  LaurentPoly q = divide(divisor, rem);
  if (!rem.is_zero()) throw std::domain_error("LaurentPoly: inexact division");
  return q;
}

long long LaurentPoly::eval_at_v2(long long q) const {
  long long s = 0;
  for (auto [e, c] : c_) {
    if (e % 2 != 0) throw std::domain_error("eval_at_v2: odd power of v");
    int k = e / 2;
    if (k < 0) throw std::domain_error("eval_at_v2: negative power of q");
    long long pw = 1;
    for (int i = 0; i < k; ++i) pw = checked_mul(pw, q);
    s = checked_add(s, checked_mul(c, pw));
  }
  return s;
}

std::string LaurentPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto [e, c] : c_) {
    if (!first) os << (c >= 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    long long ac = c < 0 ? -c : c;
    if (e == 0 || ac != 1) os << ac;
    if (e != 0) {
      os << "v";
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

}  // namespace guflag

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace guflag {

/// Laurent polynomial in one variable v with 64-bit integer coefficients,
/// overflow-checked.  The Hecke parameters enter as q_s = v^{2 e_s}, so all
/// square roots q(mu)^{1/2} are exact monomials.
class LaurentPoly {
public:
  LaurentPoly() = default;
  static LaurentPoly zero() { return {}; }
  static LaurentPoly monomial(long long coeff, int exp);
  static LaurentPoly constant(long long c) { return monomial(c, 0); }

  bool is_zero() const { return c_.empty(); }
  bool is_monomial() const { return c_.size() == 1; }
  long long coeff(int exp) const;
  int min_exp() const;
  int max_exp() const;
  const std::map<int, long long>& terms() const { return c_; }

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  LaurentPoly shift(int k) const;  // multiply by v^k

  /// Exact division; throws domain_error when the remainder is nonzero.
  LaurentPoly divide_exact(const LaurentPoly& divisor) const;
  /// Division with remainder (denominator leading-term based); returns
  /// quotient and sets remainder.
  LaurentPoly divide(const LaurentPoly& divisor, LaurentPoly& remainder) const;

  /// Evaluate with v^2 = q; throws when an odd power of v survives.
  long long eval_at_v2(long long q) const;

  std::string str() const;

private:
  std::map<int, long long> c_;  // exponent -> coefficient, no zeros stored

  void add_term(int exp, long long coeff);
};

}  // namespace guflag

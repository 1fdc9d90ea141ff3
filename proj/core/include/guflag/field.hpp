#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

namespace guflag {

using felt = std::uint16_t;

/// Arithmetic context for F_p or F_{p^2}, p an odd prime.
///
/// Elements are encoded as integers 0..q-1 in the power basis of the stored
/// modulus: x = a0 + a1*p represents a0 + a1*g where g is the class of the
/// generator of the extension (deg 2), or just a0 (deg 1).  Multiplication
/// and inversion go through log/antilog tables built once at construction,
/// so all field operations are table lookups.
class FieldCtx {
public:
  /// deg == 1 builds F_p; deg == 2 builds F_{p^2} with modulus x^2 - eps,
  /// eps the least quadratic non-residue mod p.
  FieldCtx(int p, int deg);

  int p() const { return p_; }
  int deg() const { return deg_; }
  int q() const { return q_; }

  /// Modulus coefficients, constant term first (deg 2 only: {-eps, 0, 1}).
  const std::vector<int>& modulus() const { return modulus_; }

  felt zero() const { return 0; }
  felt one() const { return 1; }

  felt add(felt a, felt b) const;
  felt sub(felt a, felt b) const;
  felt neg(felt a) const;
  felt mul(felt a, felt b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  felt inv(felt a) const {
    if (a == 0) throw std::domain_error("FieldCtx::inv: zero");
    return exp_[qm1_ - log_[a]];
  }
  felt div(felt a, felt b) const { return mul(a, inv(b)); }

  /// Frobenius x -> x^p.  Identity on deg-1 contexts.
  felt frob(felt a) const { return frob_[a]; }

  /// Trace to the prime field (deg 2: x + x^p, reported as an F_p element).
  felt trace(felt a) const { return add(a, frob(a)); }

  /// True for elements of the prime subfield.
  bool in_prime_field(felt a) const { return a < static_cast<felt>(p_); }

  felt from_int(long long n) const;

  /// Multiplicative generator used for the log tables.
  felt generator() const { return gen_; }

  /// A fixed nonzero element with x + frob(x) == 0 (deg 2 only).
  /// For modulus x^2 - eps this is the basis element g itself.
  felt trace_zero_unit() const;

  bool operator==(const FieldCtx& o) const {
    return p_ == o.p_ && deg_ == o.deg_ && modulus_ == o.modulus_;
  }

private:
  int p_, deg_, q_, qm1_;
  felt gen_;
  std::vector<int> modulus_;
  std::vector<int> log_;    // log_[x] for x != 0
  std::vector<felt> exp_;   // exp_[k], k in 0..2(q-1)
  std::vector<felt> frob_;

  felt raw_mul(felt a, felt b) const;  // modulus reduction, table-free
};

using FieldPtr = std::shared_ptr<const FieldCtx>;

FieldPtr make_field(int p, int deg);

bool is_prime(int n);

}  // namespace guflag

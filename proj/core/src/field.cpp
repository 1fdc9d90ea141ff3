#include "guflag/field.hpp"

namespace guflag {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

namespace {

int least_nonresidue(int p) {
  std::vector<bool> residue(p, false);
  for (int x = 1; x < p; ++x) residue[(x * x) % p] = true;
  for (int e = 2; e < p; ++e)
    if (!residue[e]) return e;
  throw std::logic_error("no quadratic non-residue (p = 2?)");
}

}  // namespace

FieldCtx::FieldCtx(int p, int deg) : p_(p), deg_(deg) {
  if (!is_prime(p) || p == 2) throw std::domain_error("FieldCtx: p must be an odd prime");
  if (deg != 1 && deg != 2) throw std::domain_error("FieldCtx: deg must be 1 or 2");
  q_ = (deg == 1) ? p : p * p;
  qm1_ = q_ - 1;
  if (deg == 1) {
    modulus_ = {0, 1};  // x itself; unused
  } else {
    int eps = least_nonresidue(p);
    modulus_ = {-eps, 0, 1};  // x^2 - eps
  }

  // Find a multiplicative generator by brute force, then fill the tables.
  log_.assign(q_, -1);
  exp_.assign(2 * qm1_ + 1, 0);
  for (int cand = 1; cand < q_; ++cand) {
    felt g = static_cast<felt>(cand);
    felt x = 1;
    int order = 0;
    do {
      x = raw_mul(x, g);
      ++order;
    } while (x != 1);
    if (order == qm1_) {
      gen_ = g;
      break;
    }
    if (cand == q_ - 1) throw std::logic_error("no generator found");
  }
  felt x = 1;
  for (int k = 0; k < qm1_; ++k) {
    log_[x] = k;
    exp_[k] = x;
    exp_[k + qm1_] = x;
    x = raw_mul(x, gen_);
  }
  exp_[2 * qm1_] = 1;

  frob_.assign(q_, 0);
  for (int a = 0; a < q_; ++a) {
    felt y = 1;
    for (int k = 0; k < p_; ++k) y = raw_mul(y, static_cast<felt>(a));
    frob_[a] = y;
  }
}

felt FieldCtx::raw_mul(felt a, felt b) const {
  if (deg_ == 1) return static_cast<felt>((int(a) * int(b)) % p_);
  int a0 = a % p_, a1 = a / p_;
  int b0 = b % p_, b1 = b / p_;
  int eps = -modulus_[0];
  // (a0 + a1 g)(b0 + b1 g), g^2 = eps
  int c0 = (a0 * b0 + ((a1 * b1) % p_) * eps) % p_;
  int c1 = (a0 * b1 + a1 * b0) % p_;
  return static_cast<felt>(c0 + c1 * p_);
}

felt FieldCtx::add(felt a, felt b) const {
  int a0 = a % p_, a1 = a / p_;
  int b0 = b % p_, b1 = b / p_;
  return static_cast<felt>((a0 + b0) % p_ + ((a1 + b1) % p_) * p_);
}

felt FieldCtx::sub(felt a, felt b) const { return add(a, neg(b)); }

felt FieldCtx::neg(felt a) const {
  int a0 = a % p_, a1 = a / p_;
  return static_cast<felt>((p_ - a0) % p_ + ((p_ - a1) % p_) * p_);
}

felt FieldCtx::from_int(long long n) const {
  long long r = n % p_;
  if (r < 0) r += p_;
  return static_cast<felt>(r);
}

felt FieldCtx::trace_zero_unit() const {
  if (deg_ != 2) throw std::domain_error("trace_zero_unit: needs a deg-2 context");
  return static_cast<felt>(p_);  // the basis element g: frob(g) = -g since g^2 = eps
}

FieldPtr make_field(int p, int deg) { return std::make_shared<FieldCtx>(p, deg); }

}  // namespace guflag

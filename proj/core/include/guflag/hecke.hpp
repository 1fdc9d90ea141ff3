#pragma once

#include <functional>
#include <map>
#include <vector>

#include "guflag/laurent.hpp"
#include "guflag/weyl.hpp"

namespace guflag {

/// Per-simple-reflection exponents e_s, constant on conjugacy classes of
/// simple reflections in the extended group; the Hecke parameter at s is
/// q_s = v^{2 e_s}.
class ParameterSystem {
public:
  ParameterSystem() = default;
  /// Class exponents, indexed by GroupCtx::simple_class.
  ParameterSystem(const GroupCtx& W, std::vector<int> class_exponents);
  static ParameterSystem equal(const GroupCtx& W) {
    return ParameterSystem(W, std::vector<int>(W.m() >= 2 ? 2 : 1, 1));
  }

  int exponent(int simple) const { return exp_by_simple_.at(simple); }
  const std::vector<int>& class_exponents() const { return class_exp_; }
  /// q_s as a Laurent polynomial v^{2 e_s}.
  LaurentPoly q_s(int simple) const { return LaurentPoly::monomial(1, 2 * exponent(simple)); }

private:
  std::vector<int> class_exp_;
  std::vector<int> exp_by_simple_;
};

/// Finitely supported map WeylElement -> Laurent polynomial, the T-basis
/// coordinates of an Iwahori-Hecke algebra element.
class HeckeElement {
public:
  HeckeElement() = default;

  static HeckeElement basis(const WeylElement& w) {
    HeckeElement h;
    h.add(w, LaurentPoly::constant(1));
    return h;
  }
  static HeckeElement zero() { return {}; }

  void add(const WeylElement& w, const LaurentPoly& c);
  LaurentPoly coeff(const WeylElement& w) const;
  const std::map<WeylElement, LaurentPoly>& support() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  HeckeElement operator+(const HeckeElement& o) const;
  HeckeElement operator-(const HeckeElement& o) const;
  HeckeElement scale(const LaurentPoly& f) const;
  bool operator==(const HeckeElement& o) const { return c_ == o.c_; }

private:
  std::map<WeylElement, LaurentPoly> c_;
};

/// The Iwahori-Hecke algebra of GU_d over Z[v, v^{-1}] with a configurable
/// parameter system: T-basis multiplication, Bernstein elements, the central
/// element z_mu, the trace element, and the characterization-based solver.
class HeckeAlgebra {
public:
  HeckeAlgebra(const GroupCtx& W, ParameterSystem params);

  const GroupCtx& group() const { return *W_; }
  const ParameterSystem& params() const { return params_; }

  HeckeElement multiply(const HeckeElement& h1, const HeckeElement& h2) const;
  /// T_s * h and h * T_s, the building blocks of multiply.
  HeckeElement left_simple(int s, const HeckeElement& h) const;
  HeckeElement right_simple(const HeckeElement& h, int s) const;

  /// T_w^{-1} via T_s^{-1} = q_s^{-1} T_s - (1 - q_s^{-1}) T_e along a
  /// reduced word.  Coefficient denominators are monomials, so the result
  /// stays inside Laurent polynomials.
  HeckeElement inverse_basis(const WeylElement& w) const;

  /// Sum of e_{s} over a reduced word of t_lam (lam dominant), so that
  /// q(lam)^{1/2} = v^{word_exponent(lam)}.
  int word_exponent(const Cocharacter& lam) const;
  /// q(mu) = [I t_mu I : I] as v^{2 E(mu)}.
  LaurentPoly q_index(const Cocharacter& mu) const;

  HeckeElement theta(const Cocharacter& lam) const;
  HeckeElement bernstein_z(const Cocharacter& mu) const;
  HeckeElement sstrace_element(const Cocharacter& mu) const;

  bool is_central(const HeckeElement& h) const;

  /// Solves for the unique central element supported on Adm(mu) with
  /// T_{t_mu}-coefficient q(mu)^{-1/2}; throws when the solution space is
  /// not one-dimensional.  Fraction-free elimination over Z[v, v^{-1}].
  HeckeElement central_from_characterization(const Cocharacter& mu) const;

  /// Dimension of the space of elements supported on Adm(mu) commuting with
  /// all generators (diagnostic for the characterization).
  int characterization_nullity(const Cocharacter& mu) const;

private:
  const GroupCtx* W_;
  ParameterSystem params_;

  HeckeElement mul_basis(const WeylElement& x, const HeckeElement& rhs) const;
};

/// Fit e_s from census cell sizes: for each simple s, |C_{s omega}| must be
/// q^{e_s} with e_s a positive integer, consistent across the given primes
/// and constant on conjugacy classes.  `cell_size(q, w)` reports the number
/// of F_q-points of the cell labeled w.
ParameterSystem fit_parameters(const GroupCtx& W, const std::vector<int>& q_list,
                               const std::function<long long(int, const WeylElement&)>& cell_size);

}  // namespace guflag

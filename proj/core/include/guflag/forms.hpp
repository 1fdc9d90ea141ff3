#pragma once

#include <vector>

#include "guflag/padic.hpp"
#include "guflag/submodule.hpp"

namespace guflag {

/// Hermitian pairing t^twist * (v, w) -> v^T gram conj(w) over a series ring
/// with deg-2 coefficients.  The default gram is the anti-identity.
class HermitianForm {
public:
  HermitianForm(RingPtr ring, int d, int twist = 0);
  HermitianForm(RingPtr ring, TruncMatrix gram, int twist = 0);

  const RingPtr& ring() const { return ring_; }
  int d() const { return d_; }
  int twist() const { return twist_; }
  const TruncMatrix& gram() const { return gram_; }

  /// Pairing value, computed exactly in a derived codomain window.
  TruncSeries pair(const std::vector<TruncSeries>& v, const std::vector<TruncSeries>& w) const;

  /// Window image of {x : pair(L, x) has zero coefficients below the
  /// threshold exponent}.  Throws when the window is too narrow for the
  /// result to be faithful.
  Submodule dual_lattice(const Submodule& L, int threshold) const;

  /// conj(g)^T gram g == multiplier * gram, checked exactly; `mod_t` checks
  /// only the constant coefficient.
  bool is_similitude(const TruncMatrix& g, const TruncSeries& multiplier, bool mod_t) const;

  /// Gram matrix of the basis images, G_{ij} = pair(g e_i, g e_j), in the
  /// matrix window (twist not applied).
  TruncMatrix basis_gram(const TruncMatrix& g) const;

private:
  RingPtr ring_;
  int d_;
  int twist_;
  TruncMatrix gram_;
};

/// Residue-field correspondence between hermitian forms on K^d (K = F_{q^2})
/// and internally hermitian alternating F_q-bilinear forms on K^d = F_q^{2d}.
/// `zeta` must satisfy conj(zeta) = -zeta, zeta != 0.
struct FormCorrespondence {
  FieldPtr K;  // deg-2 context
  felt zeta;

  explicit FormCorrespondence(FieldPtr field);
  FormCorrespondence(FieldPtr field, felt zeta_);

  /// d x d hermitian Gram over K -> 2d x 2d alternating Gram over F_q
  /// (basis e_1, g e_1, e_2, g e_2, ... with g the quadratic generator).
  FMatrix hermitian_to_alternating(const FMatrix& H) const;
  /// Inverse direction; entries of the result are K-elements.
  FMatrix alternating_to_hermitian(const FMatrix& A) const;

  bool is_hermitian(const FMatrix& H) const;
  bool is_alternating(const FMatrix& A) const;
};

enum class IsometryClass { quasi_split, non_quasi_split };

/// Classify a nondegenerate hermitian form over the unramified quadratic
/// extension of Q_p by the norm class of its determinant: quasi-split iff
/// the determinant valuation is even.
IsometryClass isometry_class(const std::vector<std::vector<QuadScalar>>& gram, int p, int eps);

/// Convenience overload for diagonal forms given as (valuation, unit) data.
IsometryClass isometry_class_diag(const std::vector<LocalFieldScalar>& diag, int p);

/// Correct an approximate similitude to an exact one by Newton steps over
/// the nilpotent ideals (t^{2^j}).
///
/// g must be invertible, a similitude with multiplier c modulo t, and its
/// column i must lie in the flag module N_i = S^i + t S^{d-i} (exactly: the
/// below-diagonal t-divisibility pattern).  The result g' satisfies
/// g' == g mod t, is an exact similitude with multiplier c in the window,
/// and preserves the same flag.  flag_bounds may override the standard
/// pattern; it must be a chain of d submodules with column i constrained to
/// flag_bounds[i].
TruncMatrix hensel_unitarize(const TruncMatrix& g, const HermitianForm& phi,
                             const TruncSeries& c,
                             const std::vector<Submodule>* flag_bounds = nullptr);

/// The standard flag modules N_i = S^{i+1} + t S^{d-i-1} (column index i,
/// 0-based) in the given window.
std::vector<Submodule> standard_flag(RingPtr ring, int d);

}  // namespace guflag

#pragma once

#include <optional>
#include <vector>

#include "guflag/linalg.hpp"
#include "guflag/series.hpp"

namespace guflag {

/// Finitely generated t-stable submodule of the window module
/// (t^lo K[t]/t^hi K[t])^d, held in a unique canonical generating form.
///
/// The canonical form is a column-style Howell form over K[t]/(t^height):
/// pivot entries are monic t-powers t^e at strictly increasing rows, entries
/// above a pivot vanish, entries in other columns at a pivot row are reduced
/// modulo the pivot.  Two submodules are equal iff their canon matrices are
/// identical, so equality is a bitwise comparison.
///
/// A Submodule also stands for the preimage lattice
///     span(lifted generators) + t^hi K[[t]]^d
/// inside K((t))^d; the lattice-level operations (dual, scale) are defined
/// with respect to that interpretation.
class Submodule {
public:
  Submodule() = default;

  /// Canonicalize a generating set given as the columns of `gens`.
  static Submodule canonicalize(const TruncMatrix& gens);
  static Submodule zero(RingPtr ring, int ambient_rank);
  /// Monomial lattice: coordinate c generated by t^{val[c]} (entries >= hi
  /// give a zero coordinate; entries are clamped to the window from below
  /// only when `clamp` is set, otherwise a below-window valuation throws).
  static Submodule monomial(RingPtr ring, const std::vector<int>& val, bool clamp = false);
  /// Image of a full standard-chain member t^k V_i, V_i the shifted chain
  /// with t^{-1} in the first i coordinates.
  static Submodule chain_member(RingPtr ring, int d, int i, int k = 0);

  const RingPtr& ring() const { return ring_; }
  int ambient_rank() const { return d_; }
  int num_generators() const { return canon_.cols(); }
  const TruncMatrix& canon() const { return canon_; }
  const std::vector<int>& pivot_rows() const { return pivot_row_; }
  /// Multiset of pivot t-exponents (elementary divisors within the window).
  const std::vector<int>& divisor_profile() const { return pivot_exp_; }

  /// Dimension over the coefficient field K.
  int dim() const;
  /// Dimension over the prime field F_q (deg * dim()).
  int dim_prime() const { return ring_->field().deg() * dim(); }

  bool is_zero() const { return canon_.cols() == 0; }
  bool member(const std::vector<TruncSeries>& v) const;
  bool contains(const Submodule& other) const;

  Submodule join(const Submodule& other) const;
  Submodule meet(const Submodule& other) const;

  /// Lattice scaling by t^k.  For k > 0 requires the lattice to contain
  /// t^{hi-k} K[[t]]^d (so the implicit tail stays correct); for k < 0 the
  /// generators must stay inside the window.
  Submodule scale(int k) const;

  /// Reinterpret in a wider window: generators are lifted verbatim and the
  /// implicit tail t^{hi_old} K[[t]]^d is materialized as monomials.
  Submodule rewindow(RingPtr target) const;

  /// Apply an invertible polynomial matrix (entries with exponents >= 0 and
  /// unit determinant) to the lattice.
  Submodule apply(const TruncMatrix& g) const;

  /// F-basis of the module as flat window vectors (row-major FMatrix, one
  /// basis vector per row; column index = coord * height + (exp - lo)).
  FMatrix f_basis() const;

  /// Expand a flat window vector back into series coordinates.
  std::vector<TruncSeries> unflatten(const std::vector<felt>& flat) const;
  std::vector<felt> flatten(const std::vector<TruncSeries>& v) const;

  bool operator==(const Submodule& other) const;
  bool operator!=(const Submodule& other) const { return !(*this == other); }

  /// Deterministic ordering/comparison key for use in maps.
  std::vector<felt> key() const;

private:
  RingPtr ring_;
  int d_ = 0;
  TruncMatrix canon_;
  std::vector<int> pivot_row_;
  std::vector<int> pivot_exp_;
};

/// Rebuild a Submodule from an F-basis given as FMatrix rows.
Submodule submodule_from_f_rows(RingPtr ring, int d, const FMatrix& rows);

}  // namespace guflag

#pragma once

#include <vector>

#include "guflag/field.hpp"

namespace guflag {

/// Dense matrix over a finite field, row-major.  Just enough linear algebra
/// for the lattice computations: rank, RREF, nullspace, intersection.
struct FMatrix {
  const FieldCtx* F = nullptr;
  int rows = 0, cols = 0;
  std::vector<felt> a;

  FMatrix() = default;
  FMatrix(const FieldCtx& field, int r, int c) : F(&field), rows(r), cols(c), a(size_t(r) * c, 0) {}

  felt& at(int r, int c) { return a[size_t(r) * cols + c]; }
  felt at(int r, int c) const { return a[size_t(r) * cols + c]; }
};

/// In-place row reduction to reduced row-echelon form; returns pivot columns.
std::vector<int> rref(FMatrix& m);

int rank(FMatrix m);

/// Basis of the right nullspace, one vector per returned row.
FMatrix nullspace(const FMatrix& m);

/// Row-space intersection of two matrices (rows spanning subspaces of F^n).
FMatrix row_intersection(const FMatrix& a, const FMatrix& b);

/// True when v lies in the row space of rref_m (must already be in RREF with
/// the given pivot columns).
bool in_row_space(const FMatrix& rref_m, const std::vector<int>& pivots,
                  std::vector<felt> v);

}  // namespace guflag

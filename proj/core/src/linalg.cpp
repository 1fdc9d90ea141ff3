#include "guflag/linalg.hpp"

namespace guflag {

std::vector<int> rref(FMatrix& m) {
  const FieldCtx& F = *m.F;
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int piv = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    felt inv = F.inv(m.at(r, c));
    for (int j = 0; j < m.cols; ++j) m.at(r, j) = F.mul(m.at(r, j), inv);
    for (int i = 0; i < m.rows; ++i) {
      if (i == r) continue;
      felt f = m.at(i, c);
      if (!f) continue;
      for (int j = 0; j < m.cols; ++j) m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank(FMatrix m) { return static_cast<int>(rref(m).size()); }

FMatrix nullspace(const FMatrix& m) {
  const FieldCtx& F = *m.F;
  FMatrix w = m;
  std::vector<int> pivots = rref(w);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  int nfree = m.cols - static_cast<int>(pivots.size());
  FMatrix ns(F, nfree, m.cols);
  int row = 0;
  for (int c = 0; c < m.cols; ++c) {
    if (is_pivot[c]) continue;
    ns.at(row, c) = 1;
    for (size_t k = 0; k < pivots.size(); ++k) {
      // pivot row k has 1 at pivots[k]
      ns.at(row, pivots[k]) = F.neg(w.at(static_cast<int>(k), c));
    }
    ++row;
  }
  return ns;
}

FMatrix row_intersection(const FMatrix& a, const FMatrix& b) {
  const FieldCtx& F = *a.F;
  if (a.rows == 0 || b.rows == 0) return FMatrix(F, 0, a.cols);
  // Kernel of [a^T | b^T] gives coefficient pairs (x, y) with x*a = -y*b.
  FMatrix m(F, a.cols, a.rows + b.rows);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) m.at(j, i) = a.at(i, j);
  for (int i = 0; i < b.rows; ++i)
    for (int j = 0; j < b.cols; ++j) m.at(j, a.rows + i) = b.at(i, j);
  FMatrix ker = nullspace(m);
  FMatrix out(F, ker.rows, a.cols);
  for (int i = 0; i < ker.rows; ++i)
    for (int j = 0; j < a.cols; ++j) {
      felt s = 0;
      for (int k = 0; k < a.rows; ++k) s = F.add(s, F.mul(ker.at(i, k), a.at(k, j)));
      out.at(i, j) = s;
    }
  // The rows may be dependent; reduce to a basis.
  std::vector<int> piv = rref(out);
  FMatrix basis(F, static_cast<int>(piv.size()), a.cols);
  for (int i = 0; i < basis.rows; ++i)
    for (int j = 0; j < a.cols; ++j) basis.at(i, j) = out.at(i, j);
  return basis;
}

bool in_row_space(const FMatrix& rref_m, const std::vector<int>& pivots, std::vector<felt> v) {
  const FieldCtx& F = *rref_m.F;
  for (size_t k = 0; k < pivots.size(); ++k) {
    felt f = v[pivots[k]];
    if (!f) continue;
    for (int j = 0; j < rref_m.cols; ++j)
      v[j] = F.sub(v[j], F.mul(f, rref_m.at(static_cast<int>(k), j)));
  }
  for (felt x : v)
    if (x) return false;
  return true;
}

}  // namespace guflag

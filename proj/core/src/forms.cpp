#include "guflag/forms.hpp"

#include <algorithm>

namespace guflag {

HermitianForm::HermitianForm(RingPtr ring, int d, int twist)
    : ring_(std::move(ring)), d_(d), twist_(twist), gram_(TruncMatrix::anti_identity(ring_, d)) {}

HermitianForm::HermitianForm(RingPtr ring, TruncMatrix gram, int twist)
    : ring_(std::move(ring)), d_(gram.rows()), twist_(twist), gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols()) throw std::domain_error("HermitianForm: gram not square");
  if (!(gram_.conj_transpose() == gram_))
    throw std::domain_error("HermitianForm: gram not hermitian");
}

TruncSeries HermitianForm::pair(const std::vector<TruncSeries>& v,
                                const std::vector<TruncSeries>& w) const {
  if (static_cast<int>(v.size()) != d_ || static_cast<int>(w.size()) != d_)
    throw std::domain_error("pair: length mismatch");
  const int lo = ring_->lo(), hi = ring_->hi();
  int glo = 0, ghi = 1;
  for (int i = 0; i < d_; ++i)
    for (int j = 0; j < d_; ++j)
      if (!gram_.at(i, j).is_zero()) {
        glo = std::min(glo, gram_.at(i, j).valuation());
        ghi = std::max(ghi, hi);
      }
  RingPtr out = make_ring(ring_->field_ptr(), 2 * lo + glo + std::min(twist_, 0),
                          2 * (hi - 1) + ghi + std::max(twist_, 0) + 1);
  TruncSeries acc(out);
  for (int i = 0; i < d_; ++i) {
    if (v[i].is_zero()) continue;
    for (int j = 0; j < d_; ++j) {
      if (gram_.at(i, j).is_zero() || w[j].is_zero()) continue;
      TruncSeries gij = mul_into(gram_.at(i, j), w[j].conj(), out);
      acc = acc.add(mul_into(v[i], gij, out));
    }
  }
  return acc.shift(twist_);
}

Submodule HermitianForm::dual_lattice(const Submodule& L, int threshold) const {
  if (!(*L.ring() == *ring_)) throw std::domain_error("dual_lattice: ring mismatch");
  const int lo = ring_->lo(), hi = ring_->hi(), h = hi - lo;
  int gmin = 0;
  for (int i = 0; i < d_; ++i)
    for (int j = 0; j < d_; ++j)
      if (!gram_.at(i, j).is_zero()) gmin = std::min(gmin, gram_.at(i, j).valuation());
  // Tail terms of the lattice pair into exponents >= lo + hi + twist + gmin;
  // the constraint set is faithful only when they are invisible below the
  // threshold.
  if (threshold > lo + hi + twist_ + gmin)
    throw std::domain_error("dual_lattice: window too narrow to express the dual");

  const FieldCtx& F = ring_->field();
  const int D = d_ * h;
  // Unknown y = conj(x) flattened; constraints are F-linear in y.
  // coefficient_e( pair(g, x) ) = sum over i,j,e1,e2 with e1+e2+e3+twist = e:
  //   g_i[e1] * gram_{ij}[e3] * y_{j}[e2]
  std::vector<std::vector<felt>> rows;
  for (int col = 0; col < L.num_generators(); ++col) {
    auto gen = L.canon().column(col);
    const int emin = 2 * lo + gmin + std::min(twist_, 0);
    for (int e = emin; e < threshold; ++e) {
      std::vector<felt> row(D, 0);
      bool nonzero = false;
      for (int i = 0; i < d_; ++i) {
        if (gen[i].is_zero()) continue;
        for (int j = 0; j < d_; ++j) {
          if (gram_.at(i, j).is_zero()) continue;
          for (int e1 = lo; e1 < hi; ++e1) {
            felt a = gen[i].coeff(e1);
            if (!a) continue;
            for (int e3 = lo; e3 < hi; ++e3) {
              felt g = gram_.at(i, j).coeff(e3);
              if (!g) continue;
              int e2 = e - twist_ - e1 - e3;
              if (e2 < lo || e2 >= hi) continue;
              felt coef = F.mul(a, g);
              int idx = j * h + (e2 - lo);
              row[idx] = F.add(row[idx], coef);
              nonzero = true;
            }
          }
        }
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) {
    // no constraints: the dual is everything
    std::vector<int> val(d_, lo);
    return Submodule::monomial(ring_, val);
  }
  FMatrix M(F, static_cast<int>(rows.size()), D);
  for (size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < D; ++c) M.at(static_cast<int>(r), c) = rows[r][c];
  FMatrix ns = nullspace(M);
  // back from y to x by coordinate-wise Frobenius
  FMatrix xs(F, ns.rows, ns.cols);
  for (int r = 0; r < ns.rows; ++r)
    for (int c = 0; c < ns.cols; ++c) xs.at(r, c) = F.frob(ns.at(r, c));
  return submodule_from_f_rows(ring_, d_, xs);
}

TruncMatrix HermitianForm::basis_gram(const TruncMatrix& g) const {
  // conj-transpose(g) * gram-as-matrix * conj(g) pattern, but entrywise via
  // pair semantics: G_{ij} = sum_r,s g_{ri} gram_{rs} conj(g_{sj}).
  TruncMatrix G(ring_, d_, d_);
  for (int i = 0; i < d_; ++i)
    for (int j = 0; j < d_; ++j) {
      TruncSeries acc(ring_);
      for (int r = 0; r < d_; ++r) {
        if (g.at(r, i).is_zero()) continue;
        for (int s = 0; s < d_; ++s) {
          if (gram_.at(r, s).is_zero() || g.at(s, j).is_zero()) continue;
          acc = acc.add(g.at(r, i).mul(gram_.at(r, s)).mul(g.at(s, j).conj()));
        }
      }
      G.at(i, j) = acc;
    }
  return G;
}

bool HermitianForm::is_similitude(const TruncMatrix& g, const TruncSeries& multiplier,
                                  bool mod_t) const {
  TruncMatrix G = basis_gram(g);
  TruncMatrix target = gram_.scalar_mul(multiplier);
  if (!mod_t) return G == target;
  for (int i = 0; i < d_; ++i)
    for (int j = 0; j < d_; ++j)
      if (G.at(i, j).coeff(0) != target.at(i, j).coeff(0)) return false;
  return true;
}

FormCorrespondence::FormCorrespondence(FieldPtr field) : K(std::move(field)) {
  if (K->deg() != 2) throw std::domain_error("FormCorrespondence: needs deg-2 field");
  zeta = K->trace_zero_unit();
}

FormCorrespondence::FormCorrespondence(FieldPtr field, felt zeta_)
    : K(std::move(field)), zeta(zeta_) {
  if (K->deg() != 2) throw std::domain_error("FormCorrespondence: needs deg-2 field");
  if (zeta == 0 || K->add(zeta, K->frob(zeta)) != 0)
    throw std::domain_error("FormCorrespondence: zeta must be nonzero with conj(zeta) = -zeta");
}

bool FormCorrespondence::is_hermitian(const FMatrix& H) const {
  for (int i = 0; i < H.rows; ++i)
    for (int j = 0; j < H.cols; ++j)
      if (K->frob(H.at(j, i)) != H.at(i, j)) return false;
  return true;
}

bool FormCorrespondence::is_alternating(const FMatrix& A) const {
  for (int i = 0; i < A.rows; ++i) {
    if (A.at(i, i) != 0) return false;
    for (int j = 0; j < A.cols; ++j)
      if (A.at(i, j) != K->neg(A.at(j, i))) return false;
  }
  return true;
}

FMatrix FormCorrespondence::hermitian_to_alternating(const FMatrix& H) const {
  const int d = H.rows;
  const felt g = K->trace_zero_unit();
  // F_q-basis of K^d: b_{2i} = e_i, b_{2i+1} = g e_i.
  // psi(u, v) = Tr(zeta * phi(u, v)); phi(x e_i, y e_j) = x H_ij conj(y).
  FMatrix A(*K, 2 * d, 2 * d);
  auto phi_val = [&](int bi, int bj) -> felt {
    int i = bi / 2, j = bj / 2;
    felt x = (bi % 2) ? g : K->one();
    felt y = (bj % 2) ? g : K->one();
    return K->mul(K->mul(x, H.at(i, j)), K->frob(y));
  };
  for (int bi = 0; bi < 2 * d; ++bi)
    for (int bj = 0; bj < 2 * d; ++bj) {
      felt tr = K->trace(K->mul(zeta, phi_val(bi, bj)));
      if (!K->in_prime_field(tr)) throw std::logic_error("trace left the prime field");
      A.at(bi, bj) = tr;
    }
  return A;
}

FMatrix FormCorrespondence::alternating_to_hermitian(const FMatrix& A) const {
  const int d = A.rows / 2;
  const felt g = K->trace_zero_unit();
  const felt zinv = K->inv(zeta);
  const felt half = K->inv(K->from_int(2));
  // zeta^{-1} = alpha + beta g in the power basis
  felt alpha = static_cast<felt>(zinv % K->p());
  felt beta = static_cast<felt>(zinv / K->p());
  FMatrix H(*K, d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      // phi(e_i, e_j) = (zeta^{-1} psi(e_i, e_j) + psi(zeta^{-1} e_i, e_j)) / 2
      felt psi_ij = A.at(2 * i, 2 * j);
      felt term1 = K->mul(zinv, psi_ij);
      felt psi_z = K->add(K->mul(alpha, A.at(2 * i, 2 * j)), K->mul(beta, A.at(2 * i + 1, 2 * j)));
      H.at(i, j) = K->mul(K->add(term1, psi_z), half);
    }
  return H;
}

IsometryClass isometry_class(const std::vector<std::vector<QuadScalar>>& gram, int p, int eps) {
  const int d = static_cast<int>(gram.size());
  if (d % 2) throw std::domain_error("isometry_class: d must be even");
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      QuadScalar diff = qsub(gram[i][j], gram[j][i].conj());
      if (!diff.is_zero()) throw std::domain_error("isometry_class: gram not hermitian");
    }
  // determinant by fraction-free-ish Gaussian elimination over Q_p(s)
  std::vector<std::vector<QuadScalar>> a = gram;
  QuadScalar det{Rational(1)};
  for (int c = 0; c < d; ++c) {
    int piv = -1;
    for (int r = c; r < d; ++r)
      if (!a[r][c].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::domain_error("isometry_class: singular gram");
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = qmul(det, QuadScalar{Rational(-1)}, eps);
    }
    det = qmul(det, a[c][c], eps);
    for (int r = c + 1; r < d; ++r) {
      if (a[r][c].is_zero()) continue;
      QuadScalar f = qdiv(a[r][c], a[c][c], eps);
      for (int j = c; j < d; ++j) a[r][j] = qsub(a[r][j], qmul(f, a[c][j], eps));
    }
  }
  if (!det.is_rational())
    throw std::logic_error("isometry_class: hermitian determinant must be conj-fixed");
  int v = det.x.valuation(p);
  return (v % 2 == 0) ? IsometryClass::quasi_split : IsometryClass::non_quasi_split;
}

IsometryClass isometry_class_diag(const std::vector<LocalFieldScalar>& diag, int p) {
  long long v = 0;
  for (const auto& s : diag) v += s.valuation;
  return (v % 2 == 0) ? IsometryClass::quasi_split : IsometryClass::non_quasi_split;
}

std::vector<Submodule> standard_flag(RingPtr ring, int d) {
  std::vector<Submodule> flag;
  for (int c = 0; c < d; ++c) {
    std::vector<int> val(d);
    for (int r = 0; r < d; ++r) val[r] = (r <= c) ? 0 : 1;
    flag.push_back(Submodule::monomial(ring, val));
  }
  return flag;
}

TruncMatrix hensel_unitarize(const TruncMatrix& g, const HermitianForm& phi,
                             const TruncSeries& c, const std::vector<Submodule>* flag_bounds) {
  RingPtr ring = g.ring();
  const int d = g.rows();
  if (ring->lo() != 0) throw std::domain_error("hensel_unitarize: window must start at 0");
  if (ring->field().deg() != 2 || ring->field().p() == 2)
    throw std::domain_error("hensel_unitarize: needs deg-2 coefficients, p odd");
  if (!(c == c.conj())) throw std::domain_error("hensel_unitarize: multiplier not conj-fixed");
  if (c.coeff(0) == 0) throw std::domain_error("hensel_unitarize: multiplier not a unit");

  std::vector<Submodule> flag = flag_bounds ? *flag_bounds : standard_flag(ring, d);
  if (static_cast<int>(flag.size()) != d)
    throw std::domain_error("hensel_unitarize: flag must have d members");
  for (int i = 0; i < d; ++i)
    if (!flag[i].member(g.column(i)))
      throw std::domain_error("hensel_unitarize: column escapes its flag bound");

  const TruncMatrix J = TruncMatrix::anti_identity(ring, d);
  const TruncMatrix target = J.scalar_mul(c);
  if (!phi.is_similitude(g, c, /*mod_t=*/true))
    throw std::domain_error("hensel_unitarize: reduction mod t is not a similitude");

  const FieldCtx& F = ring->field();
  const felt minus_half = F.neg(F.inv(F.from_int(2)));

  TruncMatrix cur = g;
  const int H = ring->hi();
  for (int prec = 1; prec < H; prec *= 2) {
    TruncMatrix G = phi.basis_gram(cur);
    TruncMatrix X = G.sub(target);
    bool zero = true;
    for (int i = 0; i < d && zero; ++i)
      for (int j = 0; j < d; ++j)
        if (!X.at(i, j).is_zero()) {
          zero = false;
          break;
        }
    if (zero) break;
    // corrections m_i with pair(m_i, v_j) = -1/2 x_ij: solve alpha G = beta
    TruncMatrix beta = X.scalar_mul(TruncSeries::constant(ring, 1)).conj().conj();
    beta = X;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) beta.at(i, j) = beta.at(i, j).scalar_mul(minus_half);
    TruncMatrix alpha = beta.mul(G.inverse());
    // m_i = sum_s alpha_{is} v_s, i.e. correction matrix = cur * alpha^T
    TruncMatrix corr = cur.mul(alpha.transpose());
    cur = cur.add(corr);
  }

  TruncMatrix Gfinal = phi.basis_gram(cur);
  if (!(Gfinal == target))
    throw std::logic_error("hensel_unitarize: Newton iteration failed to converge");
  for (int i = 0; i < d; ++i)
    if (!flag[i].member(cur.column(i)))
      throw std::logic_error("hensel_unitarize: correction left the flag");
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (cur.at(i, j).coeff(0) != g.at(i, j).coeff(0))
        throw std::logic_error("hensel_unitarize: mod-t reduction changed");
  return cur;
}

}  // namespace guflag

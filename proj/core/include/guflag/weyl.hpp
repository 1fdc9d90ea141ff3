#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "guflag/padic.hpp"
#include "guflag/series.hpp"

namespace guflag {

/// Element of the extended affine Weyl group of the even unitary similitude
/// group, in the monomial-matrix model: the matrix g with g[pi(i), i] = t^{a_i}
/// satisfies conj(g)^T J g = t^gamma J.  Indices are 0-based throughout.
struct WeylElement {
  std::vector<int> pi;        // permutation, pi[i] = image of i
  std::vector<long long> a;   // t-exponents, a[i] + a[d-1-i] = gamma
  long long gamma = 0;

  int d() const { return static_cast<int>(pi.size()); }

  bool operator==(const WeylElement& o) const {
    return pi == o.pi && a == o.a && gamma == o.gamma;
  }
  bool operator<(const WeylElement& o) const {
    if (gamma != o.gamma) return gamma < o.gamma;
    if (pi != o.pi) return pi < o.pi;
    return a < o.a;
  }

  std::string str() const;
};

/// Cocharacter of the maximal split torus: full coordinate vector plus the
/// similitude weight, a[i] + a[d-1-i] = gamma.
struct Cocharacter {
  std::vector<long long> a;
  long long gamma = 0;

  int d() const { return static_cast<int>(a.size()); }
  bool operator==(const Cocharacter& o) const { return a == o.a && gamma == o.gamma; }
  bool operator<(const Cocharacter& o) const {
    if (gamma != o.gamma) return gamma < o.gamma;
    return a < o.a;
  }
};

struct ReducedWord {
  std::vector<int> word;  // simple reflection indices
  WeylElement omega;      // length-zero tail
};

/// Alcove geometry and Coxeter combinatorics for GU_d, d = 2m even.
///
/// The apartment carries coordinates (x_1..x_d; c) with x_i + x_{d+1-i} = c,
/// the reflection hyperplanes are the three families
///   x_i - x_j = k,   x_i + x_j - c = k,   2x_i - c = k   (i < j <= m, k in Z),
/// and the base alcove is the one fixed by the standard-chain Iwahori.  The
/// m+1 walls of the base alcove define the simple reflections s_0..s_m; the
/// length-zero subgroup is infinite cyclic, generated by omega().
class GroupCtx {
public:
  explicit GroupCtx(int d);

  int d() const { return d_; }
  int m() const { return m_; }
  int num_simples() const { return m_ + 1; }

  WeylElement identity() const;
  WeylElement simple(int k) const;  // k in 0..m
  /// Generator of the length-zero subgroup Omega (gamma = 1).
  WeylElement omega() const;
  WeylElement omega_power(long long k) const;

  WeylElement compose(const WeylElement& u, const WeylElement& v) const;
  WeylElement invert(const WeylElement& u) const;
  WeylElement translation(const Cocharacter& lam) const;
  /// Translation part when pi is trivial.
  std::optional<Cocharacter> as_translation(const WeylElement& w) const;

  void check(const WeylElement& w) const;
  void check(const Cocharacter& lam) const;

  /// Hyperplanes separating the base alcove from w(base alcove).
  long long length(const WeylElement& w) const;

  bool is_left_descent(int k, const WeylElement& w) const;
  ReducedWord reduced_word(const WeylElement& w) const;
  WeylElement from_word(const std::vector<int>& word, const WeylElement& omega) const;

  bool bruhat_leq(const WeylElement& x, const WeylElement& y) const;

  bool is_dominant(const Cocharacter& lam) const;
  Cocharacter dominant_representative(const Cocharacter& lam) const;
  std::set<Cocharacter> finite_orbit(const Cocharacter& mu) const;
  std::set<WeylElement> admissible(const Cocharacter& mu) const;
  std::vector<Cocharacter> dominant_in_window(int m_trunc, int n_trunc) const;

  /// The local-model cocharacter (1^m, 0^m; 1).
  Cocharacter minuscule_mu() const;

  /// Monomial matrix of w over the given window.
  TruncMatrix monomial_matrix(const WeylElement& w, RingPtr ring) const;

  /// Wall class of a simple reflection under conjugacy in the extended
  /// group: 0 for the 2x_i - c family, 1 for the x_i +- x_j family.
  int simple_class(int k) const { return (k == 0 || k == m_) ? 0 : 1; }

private:
  int d_, m_;

  struct Point {
    std::vector<Rational> x;
    Rational c;
  };
  Point base_point() const;
  Point act(const WeylElement& w, const Point& p) const;

  bool bruhat_leq_aff(const WeylElement& x, const WeylElement& y,
                      std::map<std::pair<WeylElement, WeylElement>, bool>& memo) const;
};

}  // namespace guflag

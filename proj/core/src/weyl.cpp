#include "guflag/weyl.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace guflag {

std::string WeylElement::str() const {
  std::ostringstream os;
  os << "(pi=[";
  for (size_t i = 0; i < pi.size(); ++i) os << (i ? "," : "") << pi[i];
  os << "], a=[";
  for (size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << "], g=" << gamma << ")";
  return os.str();
}

GroupCtx::GroupCtx(int d) : d_(d), m_(d / 2) {
  if (d < 2 || d % 2) throw std::domain_error("GroupCtx: d must be even and >= 2");
}

WeylElement GroupCtx::identity() const {
  WeylElement w;
  w.pi.resize(d_);
  for (int i = 0; i < d_; ++i) w.pi[i] = i;
  w.a.assign(d_, 0);
  w.gamma = 0;
  return w;
}

WeylElement GroupCtx::simple(int k) const {
  if (k < 0 || k > m_) throw std::domain_error("simple: index out of range");
  WeylElement w = identity();
  if (k == 0) {
    std::swap(w.pi[0], w.pi[d_ - 1]);
  } else if (k < m_) {
    std::swap(w.pi[k - 1], w.pi[k]);
    std::swap(w.pi[d_ - 1 - k], w.pi[d_ - k]);
  } else {
    std::swap(w.pi[m_ - 1], w.pi[m_]);
    w.a[m_ - 1] = 1;
    w.a[m_] = -1;
  }
  return w;
}

WeylElement GroupCtx::omega() const {
  WeylElement w;
  w.pi.resize(d_);
  w.a.assign(d_, 0);
  for (int i = 0; i < m_; ++i) {
    w.pi[i] = i + m_;
    w.pi[i + m_] = i;
    w.a[i] = 1;
  }
  w.gamma = 1;
  return w;
}

WeylElement GroupCtx::omega_power(long long k) const {
  WeylElement r = identity();
  WeylElement g = k >= 0 ? omega() : invert(omega());
  long long n = k >= 0 ? k : -k;
  for (long long i = 0; i < n; ++i) r = compose(r, g);
  return r;
}

WeylElement GroupCtx::compose(const WeylElement& u, const WeylElement& v) const {
  WeylElement w;
  w.pi.resize(d_);
  w.a.resize(d_);
  for (int i = 0; i < d_; ++i) {
    w.pi[i] = u.pi[v.pi[i]];
    w.a[i] = v.a[i] + u.a[v.pi[i]];
  }
  w.gamma = u.gamma + v.gamma;
  return w;
}

WeylElement GroupCtx::invert(const WeylElement& u) const {
  WeylElement w;
  w.pi.resize(d_);
  w.a.resize(d_);
  for (int i = 0; i < d_; ++i) w.pi[u.pi[i]] = i;
  for (int i = 0; i < d_; ++i) w.a[i] = -u.a[w.pi[i]];
  w.gamma = -u.gamma;
  return w;
}

WeylElement GroupCtx::translation(const Cocharacter& lam) const {
  check(lam);
  WeylElement w = identity();
  w.a = lam.a;
  w.gamma = lam.gamma;
  return w;
}

std::optional<Cocharacter> GroupCtx::as_translation(const WeylElement& w) const {
  for (int i = 0; i < d_; ++i)
    if (w.pi[i] != i) return std::nullopt;
  Cocharacter lam;
  lam.a = w.a;
  lam.gamma = w.gamma;
  return lam;
}

void GroupCtx::check(const WeylElement& w) const {
  if (w.d() != d_ || static_cast<int>(w.a.size()) != d_)
    throw std::domain_error("WeylElement: dimension mismatch");
  std::vector<bool> seen(d_, false);
  for (int i = 0; i < d_; ++i) {
    if (w.pi[i] < 0 || w.pi[i] >= d_ || seen[w.pi[i]])
      throw std::domain_error("WeylElement: not a permutation");
    seen[w.pi[i]] = true;
  }
  for (int i = 0; i < d_; ++i) {
    if (w.pi[d_ - 1 - i] != d_ - 1 - w.pi[i])
      throw std::domain_error("WeylElement: permutation not duality-equivariant");
    if (w.a[i] + w.a[d_ - 1 - i] != w.gamma)
      throw std::domain_error("WeylElement: exponents incompatible with gamma");
  }
}

void GroupCtx::check(const Cocharacter& lam) const {
  if (lam.d() != d_) throw std::domain_error("Cocharacter: dimension mismatch");
  for (int i = 0; i < d_; ++i)
    if (lam.a[i] + lam.a[d_ - 1 - i] != lam.gamma)
      throw std::domain_error("Cocharacter: coordinates incompatible with gamma");
}

GroupCtx::Point GroupCtx::base_point() const {
  // Generic interior point of the base alcove 0 > b_1 > ... > b_m > -1/2,
  // b_i = x_i - c/2, with an odd denominator so no image meets a wall.
  Point p;
  p.c = Rational(0);
  p.x.resize(d_);
  const long long den = 2 * m_ + 3;
  for (int i = 0; i < m_; ++i) {
    p.x[i] = Rational(-(i + 1), den);
    p.x[d_ - 1 - i] = Rational(i + 1, den);
  }
  return p;
}

GroupCtx::Point GroupCtx::act(const WeylElement& w, const Point& p) const {
  Point q;
  q.x.resize(d_);
  for (int i = 0; i < d_; ++i) q.x[w.pi[i]] = p.x[i] + Rational(w.a[i]);
  q.c = p.c + Rational(w.gamma);
  return q;
}

namespace {

// integers strictly between two non-integral rationals
long long integers_between(const Rational& a, const Rational& b) {
  auto floor_of = [](const Rational& r) -> long long {
    long long q = r.num / r.den;
    if (r.num % r.den != 0 && r.num < 0) --q;
    return q;
  };
  if (a.num % a.den == 0 || b.num % b.den == 0)
    throw std::logic_error("alcove point lies on a wall");
  long long fa = floor_of(a), fb = floor_of(b);
  return fa > fb ? fa - fb : fb - fa;
}

}  // namespace

long long GroupCtx::length(const WeylElement& w) const {
  Point p = base_point();
  Point q = act(w, p);
  long long count = 0;
  for (int i = 0; i < m_; ++i) {
    for (int j = i + 1; j < m_; ++j) {
      count += integers_between(p.x[i] - p.x[j], q.x[i] - q.x[j]);
      count += integers_between(p.x[i] + p.x[j] - p.c, q.x[i] + q.x[j] - q.c);
    }
    count += integers_between(p.x[i] + p.x[i] - p.c, q.x[i] + q.x[i] - q.c);
  }
  return count;
}

bool GroupCtx::is_left_descent(int k, const WeylElement& w) const {
  return length(compose(simple(k), w)) < length(w);
}

ReducedWord GroupCtx::reduced_word(const WeylElement& w) const {
  ReducedWord rw;
  WeylElement cur = w;
  long long len = length(cur);
  while (len > 0) {
    bool found = false;
    for (int k = 0; k <= m_; ++k) {
      WeylElement nxt = compose(simple(k), cur);
      long long nl = length(nxt);
      if (nl < len) {
        rw.word.push_back(k);
        cur = nxt;
        len = nl;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("reduced_word: no descent on a positive-length element");
  }
  // cur has length zero; it must be a power of omega, indexed by gamma.
  WeylElement expect = omega_power(cur.gamma);
  if (!(expect == cur))
    throw std::logic_error(
        "reduced_word: length-zero element is not a power of the Omega generator "
        "(component grading anomaly)");
  rw.omega = cur;
  return rw;
}

WeylElement GroupCtx::from_word(const std::vector<int>& word, const WeylElement& om) const {
  WeylElement w = identity();
  for (int k : word) w = compose(w, simple(k));
  return compose(w, om);
}

bool GroupCtx::bruhat_leq(const WeylElement& x, const WeylElement& y) const {
  // Same Omega-coset or incomparable.
  WeylElement ox = omega_power(x.gamma), oy = omega_power(y.gamma);
  WeylElement xa = compose(x, invert(ox));
  WeylElement ya = compose(y, invert(oy));
  if (!(ox == oy)) return false;
  std::map<std::pair<WeylElement, WeylElement>, bool> memo;
  return bruhat_leq_aff(xa, ya, memo);
}

bool GroupCtx::bruhat_leq_aff(const WeylElement& x, const WeylElement& y,
                              std::map<std::pair<WeylElement, WeylElement>, bool>& memo) const {
  long long lx = length(x), ly = length(y);
  if (lx > ly) return false;
  if (lx == ly) return x == y;
  auto it = memo.find({x, y});
  if (it != memo.end()) return it->second;
  int s = -1;
  for (int k = 0; k <= m_; ++k)
    if (is_left_descent(k, y)) {
      s = k;
      break;
    }
  if (s < 0) throw std::logic_error("bruhat: positive-length element without descent");
  WeylElement sy = compose(simple(s), y);
  WeylElement sx = compose(simple(s), x);
  bool r;
  if (length(sx) < lx)
    r = bruhat_leq_aff(sx, sy, memo);
  else
    r = bruhat_leq_aff(x, sy, memo);
  memo[{x, y}] = r;
  return r;
}

bool GroupCtx::is_dominant(const Cocharacter& lam) const {
  for (int i = 0; i + 1 < d_; ++i)
    if (lam.a[i] < lam.a[i + 1]) return false;
  return true;
}

Cocharacter GroupCtx::dominant_representative(const Cocharacter& lam) const {
  // Sort the b-coordinates' absolute values descending: the finite Weyl group
  // permutes b-coordinates and flips their signs (2a_i vs gamma keeps parity).
  std::vector<long long> twice_b(m_);
  for (int i = 0; i < m_; ++i) twice_b[i] = 2 * lam.a[i] - lam.gamma;
  for (auto& v : twice_b) v = v < 0 ? -v : v;
  std::sort(twice_b.begin(), twice_b.end(), std::greater<>());
  Cocharacter out;
  out.gamma = lam.gamma;
  out.a.assign(d_, 0);
  for (int i = 0; i < m_; ++i) {
    long long ai2 = twice_b[i] + lam.gamma;
    if (ai2 % 2 != 0) throw std::logic_error("dominant_representative: parity");
    out.a[i] = ai2 / 2;
    out.a[d_ - 1 - i] = lam.gamma - out.a[i];
  }
  return out;
}

std::set<Cocharacter> GroupCtx::finite_orbit(const Cocharacter& mu0) const {
  Cocharacter mu = is_dominant(mu0) ? mu0 : dominant_representative(mu0);
  check(mu);
  std::set<Cocharacter> orbit{mu};
  std::vector<Cocharacter> frontier{mu};
  while (!frontier.empty()) {
    std::vector<Cocharacter> next;
    for (const auto& lam : frontier) {
      // adjacent swaps of b-coordinates and the sign flip of b_m
      for (int i = 0; i + 1 < m_; ++i) {
        Cocharacter nu = lam;
        std::swap(nu.a[i], nu.a[i + 1]);
        std::swap(nu.a[d_ - 1 - i], nu.a[d_ - 2 - i]);
        if (orbit.insert(nu).second) next.push_back(nu);
      }
      Cocharacter nu = lam;
      std::swap(nu.a[m_ - 1], nu.a[m_]);
      if (orbit.insert(nu).second) next.push_back(nu);
    }
    frontier = std::move(next);
  }
  return orbit;
}

std::set<WeylElement> GroupCtx::admissible(const Cocharacter& mu) const {
  if (!is_dominant(mu)) throw std::domain_error("admissible: mu must be dominant");
  std::set<WeylElement> out;
  // downset of one element: D(v) = D(sv) union s*D(sv) for a descent s
  std::map<WeylElement, std::set<WeylElement>> memo;
  std::function<const std::set<WeylElement>&(const WeylElement&)> down =
      [&](const WeylElement& v) -> const std::set<WeylElement>& {
    auto it = memo.find(v);
    if (it != memo.end()) return it->second;
    std::set<WeylElement> dv;
    if (length(v) == 0) {
      dv.insert(v);
    } else {
      int s = -1;
      for (int k = 0; k <= m_; ++k)
        if (is_left_descent(k, v)) {
          s = k;
          break;
        }
      const auto& rest = down(compose(simple(s), v));
      for (const auto& u : rest) {
        dv.insert(u);
        dv.insert(compose(simple(s), u));
      }
    }
    return memo.emplace(v, std::move(dv)).first->second;
  };
  for (const auto& lam : finite_orbit(mu)) {
    const auto& dv = down(translation(lam));
    out.insert(dv.begin(), dv.end());
  }
  // the downset recursion can overshoot: keep only u <= some translation
  std::set<WeylElement> filtered;
  for (const auto& u : out) {
    for (const auto& lam : finite_orbit(mu)) {
      if (bruhat_leq(u, translation(lam))) {
        filtered.insert(u);
        break;
      }
    }
  }
  return filtered;
}

std::vector<Cocharacter> GroupCtx::dominant_in_window(int m_trunc, int n_trunc) const {
  const long long gamma = static_cast<long long>(n_trunc) - m_trunc;
  std::vector<Cocharacter> out;
  std::vector<long long> a(m_);
  // enumerate n >= a_1 >= ... >= a_m with 2 a_m >= gamma and a_i <= n,
  // mirrored coordinates handled by the gamma relation
  std::function<void(int, long long)> rec = [&](int idx, long long hi_bound) {
    if (idx == m_) {
      Cocharacter lam;
      lam.gamma = gamma;
      lam.a.assign(d_, 0);
      for (int i = 0; i < m_; ++i) {
        lam.a[i] = a[i];
        lam.a[d_ - 1 - i] = gamma - a[i];
      }
      if (is_dominant(lam)) {
        bool inwin = true;
        for (int i = 0; i < d_; ++i)
          if (lam.a[i] < -static_cast<long long>(m_trunc) || lam.a[i] > n_trunc) inwin = false;
        if (inwin) out.push_back(lam);
      }
      return;
    }
    long long lo_bound = (gamma >= 0) ? (gamma + 1) / 2 : gamma / 2;  // ceil(gamma/2)
    for (long long v = lo_bound; v <= hi_bound; ++v) {
      a[idx] = v;
      rec(idx + 1, v);
    }
  };
  rec(0, n_trunc);
  std::sort(out.begin(), out.end());
  return out;
}

Cocharacter GroupCtx::minuscule_mu() const {
  Cocharacter mu;
  mu.gamma = 1;
  mu.a.assign(d_, 0);
  for (int i = 0; i < m_; ++i) mu.a[i] = 1;
  return mu;
}

TruncMatrix GroupCtx::monomial_matrix(const WeylElement& w, RingPtr ring) const {
  TruncMatrix g(ring, d_, d_);
  for (int i = 0; i < d_; ++i)
    g.at(w.pi[i], i) = TruncSeries::monomial(ring, static_cast<int>(w.a[i]), 1);
  return g;
}

}  // namespace guflag

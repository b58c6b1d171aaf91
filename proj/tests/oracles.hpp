#pragma once

// Independent reference computations used by the tests. None of these call
// the library routine they are compared against.

#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "degen/degen.hpp"

namespace oracle {

using degen::Integer;
using degen::IntMatrix;
using degen::RatMatrix;
using degen::Rational;

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

// ---------------------------------------------------------------------------
// Unimodular matrices with known inverses
// ---------------------------------------------------------------------------

struct Unimodular {
  IntMatrix m, inv;
};

/// Product of random elementary operations; the inverse is tracked
/// alongside, so no inversion routine is involved.
inline Unimodular random_unimodular(Rng& rng, std::size_t n, int steps = 6) {
  Unimodular u{IntMatrix::identity(n), IntMatrix::identity(n)};
  if (n < 2) {
    if (n == 1 && uniform(rng, 0, 1)) {
      u.m(0, 0) = -1;
      u.inv(0, 0) = -1;
    }
    return u;
  }
  for (int s = 0; s < steps; ++s) {
    std::size_t i = static_cast<std::size_t>(uniform(rng, 0, long(n) - 1));
    std::size_t j = static_cast<std::size_t>(uniform(rng, 0, long(n) - 2));
    if (j >= i) ++j;
    const Integer c = uniform(rng, -2, 2);
    // m <- E m with E = I + c e_ij (row i += c row j); inv <- inv E^{-1}
    u.m.add_row(i, j, c);
    u.inv.add_col(j, i, Integer(-c));
  }
  return u;
}

inline RatMatrix rat(const IntMatrix& m) { return degen::to_rational(m); }

/// a/b in canonical form (the two-argument mpq constructor does not reduce).
inline Rational frac(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------
// Finite abelian groups by enumeration
// ---------------------------------------------------------------------------

/// Z^k / P diag(d) Z^k, plus the coordinates P^{-1} that identify it with
/// the product of Z/d_i. Optional redundant relations are appended.
struct CyclicModel {
  std::vector<long> d;  // all positive
  Unimodular p;
  degen::FPAbelianGroup presented;
  long order() const {
    long o = 1;
    for (long x : d) o *= x;
    return o;
  }
};

inline std::vector<long> random_orders(Rng& rng, long max_order) {
  std::vector<long> d;
  long prod = 1;
  const long k = uniform(rng, 1, 3);
  for (long i = 0; i < k; ++i) {
    const long cap = max_order / prod;
    if (cap < 1) break;
    const long x = uniform(rng, 1, std::min<long>(cap, 8));
    d.push_back(x);
    prod *= x;
  }
  return d;
}

inline CyclicModel random_group(Rng& rng, long max_order = 64) {
  CyclicModel g;
  g.d = random_orders(rng, max_order);
  const std::size_t k = g.d.size();
  g.p = random_unimodular(rng, k);
  IntMatrix diag(k, k);
  for (std::size_t i = 0; i < k; ++i) diag(i, i) = g.d[i];
  IntMatrix rel = g.p.m * diag;
  if (uniform(rng, 0, 1)) {
    // a redundant relation: a combination of the existing ones
    IntMatrix extra(k, 1);
    for (std::size_t c = 0; c < k; ++c) {
      const Integer w = uniform(rng, -2, 2);
      for (std::size_t r = 0; r < k; ++r) extra(r, 0) += w * rel(r, c);
    }
    rel = degen::hstack(rel, extra);
  }
  g.presented = degen::FPAbelianGroup(k, rel);
  return g;
}

/// Random homomorphism, built in cyclic coordinates where well-definedness
/// is a divisibility condition, then transported to the presentation.
struct HomModel {
  CyclicModel src, tgt;
  IntMatrix canonical;  // tgt.k x src.k in cyclic coordinates
  degen::AbMap map;
};

inline HomModel random_hom(Rng& rng, long max_order = 64) {
  HomModel h;
  h.src = random_group(rng, max_order);
  h.tgt = random_group(rng, max_order);
  const std::size_t ks = h.src.d.size(), kt = h.tgt.d.size();
  h.canonical = IntMatrix(kt, ks);
  for (std::size_t t = 0; t < kt; ++t)
    for (std::size_t s = 0; s < ks; ++s) {
      const long dt = h.tgt.d[t], ds = h.src.d[s];
      const long step = dt / std::gcd(dt, ds);
      h.canonical(t, s) = step * uniform(rng, -3, 3);
    }
  h.map.source = h.src.presented;
  h.map.target = h.tgt.presented;
  h.map.matrix = h.tgt.p.m * h.canonical * h.src.p.inv;
  return h;
}

/// (|kernel|, |cokernel|) by listing every element of the source.
inline std::pair<long, long> enumerate_orders(const HomModel& h) {
  const auto& ds = h.src.d;
  const auto& dt = h.tgt.d;
  long kernel = 0;
  std::set<std::vector<long>> image;
  std::vector<long> x(ds.size(), 0);
  for (;;) {
    std::vector<long> y(dt.size(), 0);
    for (std::size_t t = 0; t < dt.size(); ++t) {
      long acc = 0;
      for (std::size_t s = 0; s < ds.size(); ++s)
        acc += h.canonical(t, s).get_si() * x[s];
      y[t] = ((acc % dt[t]) + dt[t]) % dt[t];
    }
    if (std::all_of(y.begin(), y.end(), [](long v) { return v == 0; })) ++kernel;
    image.insert(y);
    std::size_t i = 0;
    while (i < ds.size() && ++x[i] == ds[i]) x[i++] = 0;
    if (i == ds.size()) break;
  }
  return {kernel, h.tgt.order() / static_cast<long>(image.size())};
}

// ---------------------------------------------------------------------------
// Laurent series in u = s - a with coefficients in Q[L, 1/L], L = log q
// ---------------------------------------------------------------------------

/// Laurent polynomial in L.
using LPoly = std::map<int, Rational>;

inline void lp_clean(LPoly& p) {
  for (auto it = p.begin(); it != p.end();) it = it->second == 0 ? p.erase(it) : std::next(it);
}
inline LPoly lp_mul(const LPoly& a, const LPoly& b) {
  LPoly r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) r[ea + eb] += ca * cb;
  lp_clean(r);
  return r;
}
inline LPoly lp_add(LPoly a, const LPoly& b, const Rational& s = 1) {
  for (const auto& [e, c] : b) a[e] += s * c;
  lp_clean(a);
  return a;
}

/// sum_{i >= 0} c[i] u^{val + i}, truncated to `terms` coefficients.
struct Series {
  int val = 0;
  std::vector<LPoly> c;
};

constexpr std::size_t kTerms = 20;

inline Series s_mul(const Series& a, const Series& b) {
  Series r;
  r.val = a.val + b.val;
  r.c.assign(kTerms, LPoly{});
  for (std::size_t i = 0; i < a.c.size() && i < kTerms; ++i)
    for (std::size_t j = 0; j < b.c.size() && i + j < kTerms; ++j)
      r.c[i + j] = lp_add(r.c[i + j], lp_mul(a.c[i], b.c[j]));
  return r;
}

/// Strips leading zero coefficients (raising the valuation).
inline Series s_normalize(Series s) {
  std::size_t z = 0;
  while (z < s.c.size() && s.c[z].empty()) ++z;
  s.c.erase(s.c.begin(), s.c.begin() + static_cast<std::ptrdiff_t>(z));
  s.val += static_cast<int>(z);
  return s;
}

/// Inverse of a series whose leading coefficient is a monomial in L.
inline Series s_inverse(Series s) {
  s = s_normalize(s);
  if (s.c.empty() || s.c[0].size() != 1) throw std::runtime_error("non-invertible series");
  const auto [e0, c0] = *s.c[0].begin();
  const LPoly inv0{{-e0, 1 / c0}};
  Series r;
  r.val = -s.val;
  r.c.assign(kTerms, LPoly{});
  r.c[0] = inv0;
  for (std::size_t n = 1; n < kTerms; ++n) {
    LPoly acc;
    for (std::size_t k = 1; k <= n && k < s.c.size(); ++k)
      acc = lp_add(acc, lp_mul(s.c[k], r.c[n - k]));
    r.c[n] = lp_mul(acc, LPoly{{-e0, -1 / c0}});
  }
  return r;
}

/// t = t0 * exp(-L u) as a series.
inline Series t_series(const Rational& t0) {
  Series s;
  s.c.assign(kTerms, LPoly{});
  Rational fact = 1;
  for (std::size_t k = 0; k < kTerms; ++k) {
    if (k) fact *= static_cast<long>(k);
    Rational coef = t0 / fact;
    if (k % 2 == 1) coef = -coef;
    s.c[k] = LPoly{{static_cast<int>(k), coef}};
    lp_clean(s.c[k]);
  }
  return s;
}

/// p(t(u)) by Horner.
inline Series poly_series(const degen::lfun::Poly& p, const Series& t) {
  Series acc;
  acc.c.assign(kTerms, LPoly{});
  const auto& co = p.coeffs();
  for (auto it = co.rbegin(); it != co.rend(); ++it) {
    acc = s_mul(acc, t);
    // acc has valuation 0 since t does
    acc.c[0] = lp_add(acc.c[0], LPoly{{0, *it}});
  }
  return acc;
}

/// (order, coeff, logpow) of num/den at s = a.
inline degen::lfun::LeadingValue series_leading(const degen::lfun::Poly& num,
                                                const degen::lfun::Poly& den, std::int64_t q,
                                                long a) {
  const Rational t0 = degen::lfun::evaluation_point(q, a);
  const Series t = t_series(t0);
  Series f = s_mul(s_normalize(poly_series(num, t)), s_inverse(poly_series(den, t)));
  f = s_normalize(f);
  if (f.c.empty() || f.c[0].size() != 1) throw std::runtime_error("leading term not a monomial");
  const auto [e, c] = *f.c[0].begin();
  degen::lfun::LeadingValue lv;
  lv.order = f.val;
  lv.coeff = c;
  lv.logpow = e;
  return lv;
}

/// Rational function with zeros and poles placed at 1, 1/q and q, plus
/// a few generic factors, and an evaluation point a with q^{-a} in that set.
struct RandomRational {
  degen::lfun::Poly num, den;
  std::int64_t q = 2;
  long a = 0;
};

inline RandomRational random_rational(Rng& rng) {
  using degen::lfun::Poly;
  static const std::int64_t qs[] = {2, 3, 4, 5, 7, 8, 9};
  RandomRational r;
  r.q = qs[uniform(rng, 0, 6)];
  r.a = uniform(rng, -1, 1);
  r.num = Poly::constant(frac(uniform(rng, 1, 9), uniform(rng, 1, 9)) *
                         (uniform(rng, 0, 1) ? 1 : -1));
  r.den = Poly::constant(1);
  const Rational roots[] = {1, Rational(1, r.q), Rational(r.q)};
  for (const auto& root : roots) {
    const long e = uniform(rng, -2, 2);
    // either (t - root) or (1 - t/root); same zero, different scaling
    const Poly lin = uniform(rng, 0, 1) ? Poly{-root, Rational(1)} : Poly{Rational(1), -1 / root};
    degen::lfun::Poly& side = e > 0 ? r.num : r.den;
    for (long i = 0; i < std::abs(e); ++i) side = side * lin;
  }
  const long extra = uniform(rng, 0, 2);
  for (long i = 0; i < extra; ++i) {
    const Poly f{Rational(uniform(rng, -3, 3)), Rational(uniform(rng, -3, 3)),
                 Rational(uniform(rng, 1, 3))};
    // keep only factors without a zero at the evaluation point
    if (f(degen::lfun::evaluation_point(r.q, r.a)) == 0) continue;
    degen::lfun::Poly& side = uniform(rng, 0, 1) ? r.num : r.den;
    side = side * f;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Random cochain complexes with known cohomology
// ---------------------------------------------------------------------------

struct KnownComplex {
  degen::monodromy::CochainComplex complex;
  std::vector<std::size_t> h;  // cohomology dims
  std::vector<Unimodular> basis;
};

/// C^m = H^m + X^m + Y^m with d : X^m -> Y^{m+1} the identity, then every
/// degree is conjugated by a random unimodular matrix.
inline KnownComplex random_complex(Rng& rng, int lo, std::size_t len) {
  std::vector<std::size_t> h(len), x(len), y(len, 0);
  for (std::size_t t = 0; t < len; ++t) {
    h[t] = static_cast<std::size_t>(uniform(rng, 0, 2));
    x[t] = t + 1 < len ? static_cast<std::size_t>(uniform(rng, 0, 2)) : 0;
    if (t + 1 < len) y[t + 1] = x[t];
  }
  KnownComplex kc;
  kc.h = h;
  std::vector<std::size_t> dims(len);
  for (std::size_t t = 0; t < len; ++t) {
    dims[t] = h[t] + x[t] + y[t];
    kc.basis.push_back(random_unimodular(rng, dims[t]));
  }
  std::vector<RatMatrix> diffs;
  for (std::size_t t = 0; t + 1 < len; ++t) {
    RatMatrix d(dims[t + 1], dims[t]);
    // X^t sits after H^t; Y^{t+1} after H^{t+1} and X^{t+1}
    for (std::size_t i = 0; i < x[t]; ++i) d(h[t + 1] + x[t + 1] + i, h[t] + i) = 1;
    diffs.push_back(rat(kc.basis[t + 1].m) * d * rat(kc.basis[t].inv));
  }
  kc.complex = degen::monodromy::CochainComplex(lo, dims, diffs);
  return kc;
}

/// alpha * id + d h + h d for a random h of degree -1; a chain map from the
/// complex to itself, homotopic to alpha * id.
inline std::vector<RatMatrix> homotopic_map(Rng& rng, const degen::monodromy::CochainComplex& c,
                                            const Rational& alpha) {
  std::vector<RatMatrix> hs;  // hs[t] : C^{lo+t} -> C^{lo+t-1}
  for (int m = c.lo(); m <= c.hi(); ++m) {
    RatMatrix h(c.dim(m - 1), c.dim(m));
    for (std::size_t i = 0; i < h.rows(); ++i)
      for (std::size_t j = 0; j < h.cols(); ++j) h(i, j) = uniform(rng, -2, 2);
    hs.push_back(h);
  }
  auto hat = [&](int m) {
    if (m < c.lo() || m > c.hi()) return RatMatrix(c.dim(m - 1), c.dim(m));
    return hs[static_cast<std::size_t>(m - c.lo())];
  };
  std::vector<RatMatrix> n;
  for (int m = c.lo(); m <= c.hi(); ++m) {
    RatMatrix v = alpha * RatMatrix::identity(c.dim(m));
    v = v + c.diff(m - 1) * hat(m) + hat(m + 1) * c.diff(m);
    n.push_back(v);
  }
  return n;
}

// ---------------------------------------------------------------------------
// Random fibre data
// ---------------------------------------------------------------------------

inline RatMatrix kron_identity(const RatMatrix& m, std::size_t k) {
  RatMatrix r(m.rows() * k, m.cols() * k);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      for (std::size_t a = 0; a < k; ++a) r(i * k + a, j * k + a) = m(i, j);
  return r;
}

/// Same fibre after replacing every Chow space V by V^k and changing its
/// basis at random. Every identity among gamma and rho is preserved.
inline degen::strata::FibreDescriptor randomize_fibre(const degen::strata::FibreDescriptor& f,
                                                      Rng& rng, bool explicit_ii = false) {
  using namespace degen::strata;
  const std::size_t k = static_cast<std::size_t>(uniform(rng, 1, 2));
  FibreDescriptor g = f;
  g.chow_integral.clear();
  std::map<ChowKey, Unimodular> basis;
  for (auto& [key, d] : g.chow) {
    d *= k;
    basis[key] = random_unimodular(rng, d);
  }
  auto conj = [&](const ChowKey& src, const ChowKey& tgt, const RatMatrix& m) {
    return rat(basis.at(tgt).m) * kron_identity(m, k) * rat(basis.at(src).inv);
  };
  for (auto& [key, m] : g.pushforward) {
    const ChowKey src{key.stratum, key.codim, key.higher};
    const ChowKey tgt{key.stratum.drop(static_cast<std::size_t>(key.position)), key.codim + 1,
                      key.higher};
    if (!basis.count(src) || !basis.count(tgt)) continue;
    m = conj(src, tgt, m);
  }
  for (auto& [key, m] : g.pullback) {
    const ChowKey src{key.stratum.drop(static_cast<std::size_t>(key.position)), key.codim,
                      key.higher};
    const ChowKey tgt{key.stratum, key.codim, key.higher};
    if (!basis.count(src) || !basis.count(tgt)) continue;
    m = conj(src, tgt, m);
  }
  if (explicit_ii)
    for (int c = 0; c <= g.dim; ++c) {
      const auto s = build_level(g, 1, c, 0).total, t = build_level(g, 1, c + 1, 0).total;
      if (s && t) g.ii[c] = compose_gamma_rho(g, 1, c, 0);
    }
  return g;
}

/// Random simplicial complex on m vertices with faces of size <= dimY + 1.
inline std::vector<degen::strata::StratumIndex> random_facets(Rng& rng, int m, int dimY,
                                                              bool want_top = false) {
  std::vector<degen::strata::StratumIndex> facets;
  const long nf = uniform(rng, 1, 4);
  for (long i = 0; i < nf; ++i) {
    const long size = uniform(rng, 2, std::min(dimY + 1, m));
    std::vector<int> all(static_cast<std::size_t>(m));
    std::iota(all.begin(), all.end(), 1);
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<int> pick(all.begin(), all.begin() + size);
    std::sort(pick.begin(), pick.end());
    facets.emplace_back(pick);
  }
  if (want_top) {
    std::vector<int> top(static_cast<std::size_t>(std::min(dimY + 1, m)));
    std::iota(top.begin(), top.end(), 1);
    facets.emplace_back(top);
  }
  return facets;
}

/// Flips the sign of one block that validation is guaranteed to notice:
/// a pullback into a stratum of size >= 2 that has a coface, or a
/// pushforward out of a stratum of size >= 3. Returns false if none exists.
inline bool corrupt_sign(degen::strata::FibreDescriptor& f, Rng& rng) {
  using namespace degen::strata;
  std::vector<MapKey> pulls, pushes;
  for (const auto& [key, m] : f.pullback) {
    if (key.stratum.size() < 2 || m.is_zero()) continue;
    bool coface = false;
    for (const auto& s : f.strata)
      if (s.size() == key.stratum.size() + 1 &&
          std::includes(s.members.begin(), s.members.end(), key.stratum.members.begin(),
                        key.stratum.members.end()))
        coface = true;
    if (coface) pulls.push_back(key);
  }
  for (const auto& [key, m] : f.pushforward)
    if (key.stratum.size() >= 3 && !m.is_zero()) pushes.push_back(key);
  if (pulls.empty() && pushes.empty()) return false;
  const bool use_pull = !pulls.empty() && (pushes.empty() || uniform(rng, 0, 1) == 0);
  if (use_pull) {
    auto& m = f.pullback[pulls[static_cast<std::size_t>(uniform(rng, 0, long(pulls.size()) - 1))]];
    m = -m;
  } else {
    auto& m = f.pushforward[pushes[static_cast<std::size_t>(uniform(rng, 0, long(pushes.size()) - 1))]];
    m = -m;
  }
  return true;
}

/// One of: n-gon, smooth fibre with random Chow table, random dual complex.
inline degen::strata::FibreDescriptor random_generator_fibre(Rng& rng) {
  using namespace degen::strata;
  const long kind = uniform(rng, 0, 2);
  if (kind == 0) return generator_ngon(static_cast<int>(uniform(rng, 2, 6)), 7);
  if (kind == 1) {
    const int dimY = static_cast<int>(uniform(rng, 0, 3));
    std::map<std::pair<int, int>, std::size_t> dims;
    for (int c = 0; c <= dimY; ++c) dims[{c, 0}] = static_cast<std::size_t>(uniform(rng, 0, 2));
    return generator_smooth(dims, dimY, 4);
  }
  const int dimY = static_cast<int>(uniform(rng, 1, 3));
  const int m = static_cast<int>(uniform(rng, 3, 5));
  const long mode = uniform(rng, 0, 2);
  auto facets = random_facets(rng, m, dimY);
  DualComplexMode dm = mode == 0   ? DualComplexMode::Fundamental
                       : mode == 1 ? DualComplexMode::Points
                                   : DualComplexMode::Both;
  if (dm == DualComplexMode::Both && dimY >= 2) {
    // keep faces below the top size so the mode is consistent
    for (auto& fc : facets)
      while (static_cast<int>(fc.size()) > dimY) fc.members.pop_back();
  }
  return generator_dual_complex(facets, m, dimY, dm, 9);
}

}  // namespace oracle

#pragma once

// The tri-graded monodromy complex K^{i,j,k} of a semistable fibre, its row
// complexes, the mapping cone of N between adjacent rows, and the smaller
// complex built from kernel and cokernel of N that computes the same
// cohomology.
//
//   K^{i,j,k} = CH^c(Y^(l)),  c = (i+j-2k+n)/2,  l = 2k-i+1,  k >= max(0,i)
//   d'  = rho     : (i,j,k) -> (i+1,j+1,k+1)
//   d'' = -gamma  : (i,j,k) -> (i+1,j+1,k)
//   N   = id      : (i,j,k) -> (i+2,j,k+1)
//
// Level 0 (the model itself) carries no data here, so every piece lives on a
// level between 1 and n+1.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "degen/error.hpp"
#include "degen/qlinalg.hpp"
#include "degen/strata.hpp"

namespace degen::monodromy {

struct TriDegree {
  int i = 0, j = 0, k = 0;
  auto operator<=>(const TriDegree&) const = default;
  std::string str() const {
    return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
  }
};

struct KBounds {
  int i_lo, i_hi, j_lo, j_hi, k_lo, k_hi;

  static KBounds around(int n) {
    const int b = n + 2;
    return {-b, b, -b, b, -b, b};
  }
  bool contains(const TriDegree& d) const {
    return d.i >= i_lo && d.i <= i_hi && d.j >= j_lo && d.j <= j_hi && d.k >= k_lo &&
           d.k <= k_hi;
  }
};

/// Codimension and level of a piece, when the defining formula makes sense.
struct PieceIndex {
  int codim;
  int level;
};

/// Applies the side conditions; nullopt means the piece is zero by fiat.
inline std::optional<PieceIndex> piece_index(int n, const TriDegree& d) {
  if (d.k < std::max(0, d.i)) return std::nullopt;
  const int twice = d.i + d.j - 2 * d.k + n;
  if (twice % 2 != 0) return std::nullopt;
  const int c = twice / 2;
  const int l = 2 * d.k - d.i + 1;
  if (l < 1 || l > n + 1) return std::nullopt;
  if (c < 0 || c > n - l + 1) return std::nullopt;
  return PieceIndex{c, l};
}

class KComplex {
 public:
  KComplex(strata::FibreDescriptor f, KBounds b) : fibre_(std::move(f)), bounds_(b) {}

  const strata::FibreDescriptor& fibre() const { return fibre_; }
  const KBounds& bounds() const { return bounds_; }
  int n() const { return fibre_.dim; }

  /// The piece K^{i,j,k}. A nonzero piece outside the bounds is an error;
  /// a zero one is just returned empty.
  strata::GradedSpace piece(const TriDegree& d) const {
    auto idx = piece_index(n(), d);
    if (!idx) return {};
    strata::GradedSpace g = strata::build_level(fibre_, idx->level, idx->codim, 0);
    if (g.total > 0 && !bounds_.contains(d))
      throw BoundsError("K" + d.str() + " is nonzero but outside the support bounds");
    return g;
  }
  std::size_t dim(const TriDegree& d) const { return piece(d).total; }

 private:
  strata::FibreDescriptor fibre_;
  KBounds bounds_;
};

/// Requires a fibre that passes validation.
inline KComplex build_K(const strata::FibreDescriptor& f, std::optional<KBounds> bounds = {}) {
  auto rep = strata::validate(f);
  if (!rep.ok())
    throw DataError("fibre fails validation: " + rep.failures.front().check + ": " +
                    rep.failures.front().witness);
  return KComplex(f, bounds.value_or(KBounds::around(f.dim)));
}

inline RatMatrix d_prime(const KComplex& kc, const TriDegree& at) {
  const TriDegree to{at.i + 1, at.j + 1, at.k + 1};
  const std::size_t s = kc.dim(at), t = kc.dim(to);
  if (s == 0 || t == 0) return RatMatrix(t, s);
  auto idx = *piece_index(kc.n(), at);
  return strata::rho(kc.fibre(), idx.level, idx.codim, 0);
}

inline RatMatrix d_doubleprime(const KComplex& kc, const TriDegree& at) {
  const TriDegree to{at.i + 1, at.j + 1, at.k};
  const std::size_t s = kc.dim(at), t = kc.dim(to);
  if (s == 0 || t == 0) return RatMatrix(t, s);
  auto idx = *piece_index(kc.n(), at);
  return -strata::gamma(kc.fibre(), idx.level, idx.codim, 0);
}

inline RatMatrix N_op(const KComplex& kc, const TriDegree& at) {
  const TriDegree to{at.i + 2, at.j, at.k + 1};
  const std::size_t s = kc.dim(at), t = kc.dim(to);
  if (s == 0 || t == 0) return RatMatrix(t, s);
  return RatMatrix::identity(s);
}

/// Every failure of d'^2 = 0, d''^2 = 0, d'd'' + d''d' = 0, [d', N] = 0 and
/// [d'', N] = 0 over the support bounds, as "name at degree" strings.
inline std::vector<std::string> double_complex_failures(const KComplex& kc) {
  std::vector<std::string> out;
  const KBounds& b = kc.bounds();
  auto sh = [](const TriDegree& d, int di, int dj, int dk) {
    return TriDegree{d.i + di, d.j + dj, d.k + dk};
  };
  for (int i = b.i_lo; i <= b.i_hi; ++i)
    for (int j = b.j_lo; j <= b.j_hi; ++j)
      for (int k = b.k_lo; k <= b.k_hi; ++k) {
        const TriDegree d{i, j, k};
        if (kc.dim(d) == 0) continue;
        auto safe = [&](const char* name, auto&& f) {
          try {
            if (!f().is_zero()) out.push_back(std::string(name) + " at " + d.str());
          } catch (const BoundsError&) {
            // composite leaves the declared support
          }
        };
        safe("d'd'", [&] { return d_prime(kc, sh(d, 1, 1, 1)) * d_prime(kc, d); });
        safe("d''d''", [&] { return d_doubleprime(kc, sh(d, 1, 1, 0)) * d_doubleprime(kc, d); });
        safe("d'd''+d''d'", [&] {
          return d_prime(kc, sh(d, 1, 1, 0)) * d_doubleprime(kc, d) +
                 d_doubleprime(kc, sh(d, 1, 1, 1)) * d_prime(kc, d);
        });
        safe("[d',N]", [&] {
          return N_op(kc, sh(d, 1, 1, 1)) * d_prime(kc, d) -
                 d_prime(kc, sh(d, 2, 0, 1)) * N_op(kc, d);
        });
        safe("[d'',N]", [&] {
          return N_op(kc, sh(d, 1, 1, 0)) * d_doubleprime(kc, d) -
                 d_doubleprime(kc, sh(d, 2, 0, 1)) * N_op(kc, d);
        });
      }
  return out;
}

// ---------------------------------------------------------------------------
// Cochain complexes
// ---------------------------------------------------------------------------

/// Finite cochain complex of Q-spaces on the degree window [lo, lo+size).
class CochainComplex {
 public:
  CochainComplex() = default;

  /// `diffs[t]` maps degree lo+t to lo+t+1; there are dims.size()-1 of them
  /// (or none for an empty complex). Checks shapes and d^2 = 0.
  CochainComplex(int lo, std::vector<std::size_t> dims, std::vector<RatMatrix> diffs)
      : lo_(lo), dims_(std::move(dims)), diffs_(std::move(diffs)) {
    const std::size_t want = dims_.empty() ? 0 : dims_.size() - 1;
    if (diffs_.size() != want)
      throw DimensionError("complex on " + std::to_string(dims_.size()) + " degrees needs " +
                           std::to_string(want) + " differentials, got " +
                           std::to_string(diffs_.size()));
    for (std::size_t t = 0; t < diffs_.size(); ++t)
      if (diffs_[t].rows() != dims_[t + 1] || diffs_[t].cols() != dims_[t])
        throw DimensionError("differential out of degree " + std::to_string(lo_ + int(t)) +
                             " is " + diffs_[t].shape() + ", expected " +
                             std::to_string(dims_[t + 1]) + "x" + std::to_string(dims_[t]));
    for (std::size_t t = 0; t + 1 < diffs_.size(); ++t)
      if (!(diffs_[t + 1] * diffs_[t]).is_zero())
        throw DataError("d^2 != 0 out of degree " + std::to_string(lo_ + int(t)));
  }

  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(dims_.size()) - 1; }
  bool empty() const { return dims_.empty(); }
  std::size_t size() const { return dims_.size(); }

  std::size_t dim(int m) const {
    if (m < lo_ || m > hi()) return 0;
    return dims_[static_cast<std::size_t>(m - lo_)];
  }
  const std::vector<std::size_t>& dims() const { return dims_; }

  /// d^m : C^m -> C^{m+1}; a zero matrix of the right shape outside the window.
  RatMatrix diff(int m) const {
    if (m < lo_ || m >= hi()) return RatMatrix(dim(m + 1), dim(m));
    return diffs_[static_cast<std::size_t>(m - lo_)];
  }

  friend bool operator==(const CochainComplex&, const CochainComplex&) = default;

 private:
  int lo_ = 0;
  std::vector<std::size_t> dims_;
  std::vector<RatMatrix> diffs_;
};

/// dim H^m for every m in the window, in order.
inline std::vector<std::size_t> cohomology_dims(const CochainComplex& c) {
  std::vector<std::size_t> h;
  for (int m = c.lo(); m <= c.hi(); ++m)
    h.push_back(c.dim(m) - rank(c.diff(m)) - rank(c.diff(m - 1)));
  return h;
}

inline long euler_characteristic(const std::vector<std::size_t>& dims, int lo) {
  long chi = 0;
  for (std::size_t t = 0; t < dims.size(); ++t) {
    const long d = static_cast<long>(dims[t]);
    chi += ((lo + static_cast<int>(t)) % 2 == 0) ? d : -d;
  }
  return chi;
}

inline long euler_characteristic(const CochainComplex& c) {
  return euler_characteristic(c.dims(), c.lo());
}

/// Cone of a chain map N : A -> B with A and B on the same window [lo, hi]:
/// degree m is A^m + B^{m-1}, D(a,b) = (da, Na - db), window [lo, hi+1].
struct ConeComplex {
  CochainComplex complex;
  CochainComplex source;
  CochainComplex target;
};

inline ConeComplex cone_of_N(const CochainComplex& a, const CochainComplex& b,
                             const std::vector<RatMatrix>& n) {
  if (a.lo() != b.lo() || a.size() != b.size())
    throw ContractError("cone_of_N: source and target windows differ");
  if (n.size() != a.size())
    throw ContractError("cone_of_N: need one N block per degree");
  for (std::size_t t = 0; t < n.size(); ++t)
    if (n[t].rows() != b.dims()[t] || n[t].cols() != a.dims()[t])
      throw DimensionError("N block in degree " + std::to_string(a.lo() + int(t)) + " is " +
                           n[t].shape());
  if (a.empty()) return {CochainComplex(), a, b};

  const int lo = a.lo(), hi = a.hi() + 1;
  auto nblock = [&](int m) {
    if (m < a.lo() || m > a.hi()) return RatMatrix(b.dim(m), a.dim(m));
    return n[static_cast<std::size_t>(m - a.lo())];
  };
  std::vector<std::size_t> dims;
  for (int m = lo; m <= hi; ++m) dims.push_back(a.dim(m) + b.dim(m - 1));
  std::vector<RatMatrix> diffs;
  for (int m = lo; m < hi; ++m) {
    RatMatrix d(a.dim(m + 1) + b.dim(m), a.dim(m) + b.dim(m - 1));
    d.add_block(0, 0, a.diff(m));
    d.add_block(a.dim(m + 1), 0, nblock(m));
    d.add_block(a.dim(m + 1), a.dim(m), b.diff(m - 1), Rational(-1));
    diffs.push_back(std::move(d));
  }
  return {CochainComplex(lo, std::move(dims), std::move(diffs)), a, b};
}

// ---------------------------------------------------------------------------
// Rows of K and the cone of N between them
// ---------------------------------------------------------------------------

/// Degree window of the rows: m with j = m - n inside the j-bounds.
inline std::pair<int, int> row_window(const KComplex& kc) {
  return {kc.n() + kc.bounds().j_lo, kc.n() + kc.bounds().j_hi};
}

namespace detail {
/// Nonzero pieces (i, j, k) of the row K^{m-2s, m-n}, ascending in k.
inline std::vector<TriDegree> row_pieces(const KComplex& kc, int star, int m) {
  std::vector<TriDegree> out;
  const int i = m - 2 * star, j = m - kc.n();
  for (int k = std::max(0, i); 2 * k - i + 1 <= kc.n() + 1; ++k) {
    const TriDegree d{i, j, k};
    if (kc.dim(d) > 0) out.push_back(d);
  }
  return out;
}

inline std::size_t offset_of(const KComplex& kc, const std::vector<TriDegree>& pieces,
                             const TriDegree& d, bool& found) {
  std::size_t off = 0;
  for (const auto& p : pieces) {
    if (p == d) {
      found = true;
      return off;
    }
    off += kc.dim(p);
  }
  found = false;
  return off;
}

inline void require_row_fits(const KComplex& kc, int star) {
  const int n = kc.n();
  const auto [lo, hi] = row_window(kc);
  for (int m = 0; m <= 2 * n; ++m) {
    if (m >= lo && m <= hi) continue;
    if (!row_pieces(kc, star, m).empty())
      throw BoundsError("row " + std::to_string(star) + " is nonzero in degree " +
                        std::to_string(m) + ", outside the j-bounds");
  }
}
}  // namespace detail

/// The row K^{m-2s, m-n} (m varying) with d = d' + d''. Construction checks
/// d^2 = 0 and raises DataError naming the offending degree.
inline CochainComplex total_row(const KComplex& kc, int star) {
  detail::require_row_fits(kc, star);
  const auto [lo, hi] = row_window(kc);
  std::vector<std::size_t> dims;
  std::vector<std::vector<TriDegree>> pieces;
  for (int m = lo; m <= hi; ++m) {
    pieces.push_back(detail::row_pieces(kc, star, m));
    std::size_t d = 0;
    for (const auto& p : pieces.back()) d += kc.dim(p);
    dims.push_back(d);
  }
  std::vector<RatMatrix> diffs;
  for (int m = lo; m < hi; ++m) {
    const auto& src = pieces[static_cast<std::size_t>(m - lo)];
    const auto& tgt = pieces[static_cast<std::size_t>(m - lo + 1)];
    RatMatrix d(dims[static_cast<std::size_t>(m - lo + 1)], dims[static_cast<std::size_t>(m - lo)]);
    std::size_t col = 0;
    for (const auto& p : src) {
      bool found = false;
      const TriDegree up{p.i + 1, p.j + 1, p.k + 1};
      std::size_t row = detail::offset_of(kc, tgt, up, found);
      if (found) d.add_block(row, col, d_prime(kc, p));
      const TriDegree flat{p.i + 1, p.j + 1, p.k};
      row = detail::offset_of(kc, tgt, flat, found);
      if (found) d.add_block(row, col, d_doubleprime(kc, p));
      col += kc.dim(p);
    }
    diffs.push_back(std::move(d));
  }
  try {
    return CochainComplex(lo, std::move(dims), std::move(diffs));
  } catch (const DataError& e) {
    throw DataError("row " + std::to_string(star) + ": " + e.what());
  }
}

/// N from row s to row s-1, one block per degree of the row window.
inline std::vector<RatMatrix> row_monodromy(const KComplex& kc, int star) {
  const auto [lo, hi] = row_window(kc);
  std::vector<RatMatrix> out;
  for (int m = lo; m <= hi; ++m) {
    const auto src = detail::row_pieces(kc, star, m);
    const auto tgt = detail::row_pieces(kc, star - 1, m);
    std::size_t rows = 0, cols = 0;
    for (const auto& p : tgt) rows += kc.dim(p);
    for (const auto& p : src) cols += kc.dim(p);
    RatMatrix blk(rows, cols);
    std::size_t col = 0;
    for (const auto& p : src) {
      bool found = false;
      const std::size_t row = detail::offset_of(kc, tgt, {p.i + 2, p.j, p.k + 1}, found);
      if (found) blk.add_block(row, col, N_op(kc, p));
      col += kc.dim(p);
    }
    out.push_back(std::move(blk));
  }
  return out;
}

/// Cone of N : row s -> row s-1.
inline ConeComplex row_cone(const KComplex& kc, int star) {
  return cone_of_N(total_row(kc, star), total_row(kc, star - 1), row_monodromy(kc, star));
}

// ---------------------------------------------------------------------------
// The kernel/cokernel complex
// ---------------------------------------------------------------------------

/// Piece of the small complex in degree m for a given s:
///   m <= 2s-1 : CH^{m-s}(Y^(2s-m))   (cokernel of N)
///   m >= 2s   : CH^s(Y^(m-2s+1))     (kernel of N)
inline PieceIndex c_piece(int star, int m) {
  if (m <= 2 * star - 1) return {m - star, 2 * star - m};
  return {star, m - 2 * star + 1};
}

inline std::size_t c_dim(const strata::FibreDescriptor& f, int star, int m) {
  const PieceIndex p = c_piece(star, m);
  if (p.level < 1 || p.level > f.max_level() || p.codim < 0) return 0;
  return strata::build_level(f, p.level, p.codim, 0).total;
}

/// The complex with differentials -gamma below the middle, -i^*i_* across
/// it (degree 2s-1 -> 2s) and rho above, on the window [lo, hi].
inline CochainComplex build_C(const strata::FibreDescriptor& f, int star, int lo, int hi) {
  if (hi < lo) return CochainComplex();
  std::vector<std::size_t> dims;
  for (int m = lo; m <= hi; ++m) dims.push_back(c_dim(f, star, m));
  std::vector<RatMatrix> diffs;
  for (int m = lo; m < hi; ++m) {
    const std::size_t s = c_dim(f, star, m), t = c_dim(f, star, m + 1);
    if (s == 0 || t == 0) {
      diffs.emplace_back(t, s);
      continue;
    }
    const PieceIndex p = c_piece(star, m);
    if (m <= 2 * star - 2)
      diffs.push_back(-strata::gamma(f, p.level, p.codim, 0));
    else if (m == 2 * star - 1)
      diffs.push_back(-strata::ii_matrix(f, star - 1));
    else
      diffs.push_back(strata::rho(f, p.level, p.codim, 0));
  }
  try {
    return CochainComplex(lo, std::move(dims), std::move(diffs));
  } catch (const DataError& e) {
    throw DataError("kernel/cokernel complex for s = " + std::to_string(star) + ": " + e.what());
  }
}

struct QuasiIsoRow {
  int degree;
  std::size_t cone_dim;
  std::size_t c_dim;
  bool equal() const { return cone_dim == c_dim; }
};

struct QuasiIsoReport {
  int star = 0;
  int focus = 0;
  int window_lo = 0, window_hi = 0;
  /// Lowest/highest degree with a nonzero space, per side; nullopt if none.
  std::optional<std::pair<int, int>> cone_span, c_span;
  int shift = 0;
  std::vector<QuasiIsoRow> rows;
  std::vector<std::size_t> cone_space_dims, c_space_dims;
  bool ok() const {
    return std::all_of(rows.begin(), rows.end(), [](const QuasiIsoRow& r) { return r.equal(); });
  }
};

namespace detail {
inline std::optional<std::pair<int, int>> span(const CochainComplex& c) {
  std::optional<std::pair<int, int>> s;
  for (int m = c.lo(); m <= c.hi(); ++m)
    if (c.dim(m) > 0) {
      if (!s) s = {m, m};
      s->second = m;
    }
  return s;
}
}  // namespace detail

/// Compares cohomology of Cone(N : row s -> row s-1) with the small complex,
/// degree by degree over the cone window. `q` must lie in that window; it is
/// recorded as the degree of interest.
inline QuasiIsoReport check_quasi_iso(const KComplex& kc, int q, int star) {
  const ConeComplex cone = row_cone(kc, star);
  const int lo = cone.complex.lo(), hi = cone.complex.hi();
  if (q < lo || q > hi)
    throw BoundsError("degree " + std::to_string(q) + " is outside the cone window [" +
                      std::to_string(lo) + ", " + std::to_string(hi) + "]");
  const CochainComplex small = build_C(kc.fibre(), star, lo, hi);
  // every nonzero piece of the small complex must sit inside the window
  for (int m = std::min(lo, star) - 1; m <= std::max(hi, star + kc.n()) + 1; ++m)
    if ((m < lo || m > hi) && c_dim(kc.fibre(), star, m) > 0)
      throw BoundsError("kernel/cokernel complex is nonzero in degree " + std::to_string(m) +
                        ", outside the cone window");

  QuasiIsoReport rep;
  rep.star = star;
  rep.focus = q;
  rep.window_lo = lo;
  rep.window_hi = hi;
  rep.cone_span = detail::span(cone.complex);
  rep.c_span = detail::span(small);
  rep.cone_space_dims = cone.complex.dims();
  rep.c_space_dims = small.dims();
  const auto hc = cohomology_dims(cone.complex);
  const auto hs = cohomology_dims(small);
  for (int m = lo; m <= hi; ++m) {
    const auto t = static_cast<std::size_t>(m - lo);
    rep.rows.push_back({m, hc[t], hs[t]});
  }
  return rep;
}

inline QuasiIsoReport check_quasi_iso(const strata::FibreDescriptor& f, int q, int star) {
  return check_quasi_iso(build_K(f), q, star);
}

}  // namespace degen::monodromy

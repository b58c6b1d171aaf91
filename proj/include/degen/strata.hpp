#pragma once

// Combinatorial and Chow data of a strictly semistable special fibre.
//
// A fibre Y = Y_1 u ... u Y_m of dimension n is described by its nonempty
// strata Y_I (I a strictly increasing list of component indices), the
// dimensions of CH^p(Y_I, j) (x) Q, and the raw pushforward / pullback
// matrices along the codimension-one inclusions Y_I -> Y_{I - i_u}. Signs
// (-1)^{u-1} are applied only at assembly time.
//
// Key conventions:
//  * pushforward (I, u, p, j):  CH^p(Y_I, j) -> CH^{p+1}(Y_J, j)
//  * pullback    (I, u, p, j):  CH^p(Y_J, j) -> CH^p(Y_I, j)
//  with J = I minus its u-th element (u is 1-based).

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "degen/error.hpp"
#include "degen/qlinalg.hpp"

namespace degen::strata {

struct StratumIndex {
  std::vector<int> members;  // strictly increasing, 1-based

  StratumIndex() = default;
  StratumIndex(std::initializer_list<int> m) : members(m) {}
  explicit StratumIndex(std::vector<int> m) : members(std::move(m)) {}

  std::size_t size() const { return members.size(); }
  /// I with its u-th member (1-based) removed.
  StratumIndex drop(std::size_t u) const {
    StratumIndex j = *this;
    j.members.erase(j.members.begin() + static_cast<std::ptrdiff_t>(u - 1));
    return j;
  }
  std::string str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(members[i]);
    }
    return s + "}";
  }

  auto operator<=>(const StratumIndex&) const = default;
};

struct ChowKey {
  StratumIndex stratum;
  int codim = 0;
  int higher = 0;
  auto operator<=>(const ChowKey&) const = default;
};

struct MapKey {
  StratumIndex stratum;  // the smaller stratum Y_I, |I| >= 2
  int position = 1;      // u, 1-based
  int codim = 0;
  int higher = 0;
  auto operator<=>(const MapKey&) const = default;
};

struct FibreDescriptor {
  int components = 0;
  int dim = 0;  // n = dim Y
  std::int64_t q_v = 0;
  std::set<StratumIndex> strata;
  std::map<ChowKey, std::size_t> chow;
  std::map<ChowKey, FPAbelianGroup> chow_integral;
  std::map<MapKey, RatMatrix> pushforward;
  std::map<MapKey, RatMatrix> pullback;
  /// Explicit i^*i_* blocks keyed by source codim c: CH^c(Y^(1)) -> CH^{c+1}(Y^(1)).
  std::map<int, RatMatrix> ii;
  /// When no explicit block is given, use gamma o rho on level 1.
  bool compose_ii = true;

  std::size_t chow_dim(const StratumIndex& s, int codim, int higher) const {
    auto it = chow.find(ChowKey{s, codim, higher});
    return it == chow.end() ? 0 : it->second;
  }
  /// Highest stratum size that may be nonempty.
  int max_level() const { return dim + 1; }

  friend bool operator==(const FibreDescriptor&, const FibreDescriptor&) = default;
};

/// Direct sum of CH^p(Y_I, j) over |I| = r, summands in lexicographic order.
struct GradedSpace {
  struct Summand {
    StratumIndex stratum;
    std::size_t dim = 0;
    std::size_t offset = 0;
  };
  std::vector<Summand> summands;  // nonzero summands only
  std::size_t total = 0;

  const Summand* find(const StratumIndex& s) const {
    for (const auto& x : summands)
      if (x.stratum == s) return &x;
    return nullptr;
  }
};

inline GradedSpace build_level(const FibreDescriptor& f, int r, int p, int j) {
  if (r < 1) throw ContractError("build_level: level must be at least 1");
  GradedSpace g;
  if (r > f.max_level()) return g;
  for (const auto& s : f.strata) {
    if (static_cast<int>(s.size()) != r) continue;
    const std::size_t d = f.chow_dim(s, p, j);
    if (d == 0) continue;
    g.summands.push_back({s, d, g.total});
    g.total += d;
  }
  return g;
}

namespace detail {
inline std::string key_str(const MapKey& k) {
  return "stratum " + k.stratum.str() + " position " + std::to_string(k.position) +
         " codim " + std::to_string(k.codim) + " higher " + std::to_string(k.higher);
}
}  // namespace detail

/// gamma = sum_u (-1)^{u-1} delta(u)_*: level r, codim p -> level r-1, codim p+1.
inline RatMatrix gamma(const FibreDescriptor& f, int r, int p, int j) {
  if (r < 2) throw ContractError("gamma: level must be at least 2");
  const GradedSpace src = build_level(f, r, p, j);
  const GradedSpace tgt = build_level(f, r - 1, p + 1, j);
  RatMatrix m(tgt.total, src.total);
  for (const auto& s : src.summands) {
    for (int u = 1; u <= r; ++u) {
      const auto* t = tgt.find(s.stratum.drop(static_cast<std::size_t>(u)));
      if (!t) continue;
      const MapKey key{s.stratum, u, p, j};
      auto it = f.pushforward.find(key);
      if (it == f.pushforward.end())
        throw DescriptorError("missing pushforward for " + detail::key_str(key));
      if (it->second.rows() != t->dim || it->second.cols() != s.dim)
        throw DescriptorError("pushforward for " + detail::key_str(key) + " is " +
                              it->second.shape() + ", expected " +
                              std::to_string(t->dim) + "x" + std::to_string(s.dim));
      m.add_block(t->offset, s.offset, it->second, Rational(u % 2 == 1 ? 1 : -1));
    }
  }
  return m;
}

/// rho = sum_u (-1)^{u-1} delta(u)^*: level r, codim p -> level r+1, codim p.
inline RatMatrix rho(const FibreDescriptor& f, int r, int p, int j) {
  if (r < 1) throw ContractError("rho: level must be at least 1");
  const GradedSpace src = build_level(f, r, p, j);
  const GradedSpace tgt = build_level(f, r + 1, p, j);
  RatMatrix m(tgt.total, src.total);
  for (const auto& t : tgt.summands) {
    for (int u = 1; u <= r + 1; ++u) {
      const auto* s = src.find(t.stratum.drop(static_cast<std::size_t>(u)));
      if (!s) continue;
      const MapKey key{t.stratum, u, p, j};
      auto it = f.pullback.find(key);
      if (it == f.pullback.end())
        throw DescriptorError("missing pullback for " + detail::key_str(key));
      if (it->second.rows() != t.dim || it->second.cols() != s->dim)
        throw DescriptorError("pullback for " + detail::key_str(key) + " is " +
                              it->second.shape() + ", expected " +
                              std::to_string(t.dim) + "x" + std::to_string(s->dim));
      m.add_block(t.offset, s->offset, it->second, Rational(u % 2 == 1 ? 1 : -1));
    }
  }
  return m;
}

/// gamma o rho on level r: codim p -> codim p+1 (through level r+1).
inline RatMatrix compose_gamma_rho(const FibreDescriptor& f, int r, int p, int j) {
  return gamma(f, r + 1, p, j) * rho(f, r, p, j);
}

/// rho o gamma on level r >= 2: codim p -> codim p+1 (through level r-1).
inline RatMatrix compose_rho_gamma(const FibreDescriptor& f, int r, int p, int j) {
  return rho(f, r - 1, p + 1, j) * gamma(f, r, p, j);
}

/// i^*i_* : CH^c(Y^(1)) -> CH^{c+1}(Y^(1)). Explicit data wins; otherwise the
/// composite gamma o rho, which is the zero map whenever rho lands in a zero
/// space.
inline RatMatrix ii_matrix(const FibreDescriptor& f, int c) {
  const std::size_t src = build_level(f, 1, c, 0).total;
  const std::size_t tgt = build_level(f, 1, c + 1, 0).total;
  if (auto it = f.ii.find(c); it != f.ii.end()) {
    if (it->second.rows() != tgt || it->second.cols() != src)
      throw DescriptorError("i^*i_* block for codim " + std::to_string(c) + " is " +
                            it->second.shape() + ", expected " +
                            std::to_string(tgt) + "x" + std::to_string(src));
    return it->second;
  }
  if (src == 0 || tgt == 0) return RatMatrix(tgt, src);
  if (!f.compose_ii)
    throw DataError("no i^*i_* data for codim " + std::to_string(c) +
                    " and composition is disabled");
  return compose_gamma_rho(f, 1, c, 0);
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

struct ValidationFailure {
  std::string check;  // "structure", "gamma^2", "rho^2", "gamma rho + rho gamma"
  int level = 0;
  int codim = 0;
  int higher = 0;
  std::string witness;
};

struct ValidationReport {
  std::vector<ValidationFailure> failures;
  std::size_t identities_checked = 0;
  bool ok() const { return failures.empty(); }
};

inline bool is_prime_power(std::int64_t q) {
  if (q < 2) return false;
  std::int64_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) return true;  // q itself is prime
  while (q % p == 0) q /= p;
  return q == 1;
}

namespace detail {
inline std::string first_nonzero(const RatMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0)
        return "entry [" + std::to_string(i) + "," + std::to_string(j) +
               "] = " + m(i, j).get_str();
  return "zero";
}

inline void structure(const FibreDescriptor& f, ValidationReport& rep) {
  auto fail = [&](std::string w) {
    rep.failures.push_back({"structure", 0, 0, 0, std::move(w)});
  };
  if (f.components < 0) fail("negative component count");
  if (f.dim < 0) fail("negative fibre dimension");
  if (!is_prime_power(f.q_v)) fail("q_v = " + std::to_string(f.q_v) + " is not a prime power");
  for (const auto& s : f.strata) {
    if (s.members.empty()) {
      fail("empty stratum index");
      continue;
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s.members[i] < 1 || s.members[i] > f.components)
        fail("stratum " + s.str() + " names a component outside 1.." +
             std::to_string(f.components));
      if (i && s.members[i] <= s.members[i - 1])
        fail("stratum " + s.str() + " is not strictly increasing");
    }
    if (static_cast<int>(s.size()) > f.max_level())
      fail("stratum " + s.str() + " exceeds dim+1 components");
    if (s.size() >= 2)
      for (std::size_t u = 1; u <= s.size(); ++u)
        if (!f.strata.count(s.drop(u)))
          fail("strata not downward closed: " + s.str() + " present but " +
               s.drop(u).str() + " missing");
  }
  for (const auto& [k, d] : f.chow) {
    if (!f.strata.count(k.stratum))
      fail("Chow data for unknown stratum " + k.stratum.str());
    const int sdim = f.dim - static_cast<int>(k.stratum.size()) + 1;
    if (d > 0 && (k.codim < 0 || k.codim > sdim))
      fail("Chow data for " + k.stratum.str() + " in codim " + std::to_string(k.codim) +
           " outside 0.." + std::to_string(sdim));
    if (k.higher < 0) fail("negative higher Chow index for " + k.stratum.str());
  }
  for (const auto& [k, g] : f.chow_integral) {
    if (g.generators != f.chow_dim(k.stratum, k.codim, k.higher))
      fail("integral structure for " + k.stratum.str() + " codim " +
           std::to_string(k.codim) + " has " + std::to_string(g.generators) +
           " generators, rational dimension is " +
           std::to_string(f.chow_dim(k.stratum, k.codim, k.higher)));
  }
  auto check_maps = [&](const std::map<MapKey, RatMatrix>& maps, bool push) {
    const char* what = push ? "pushforward" : "pullback";
    for (const auto& [k, m] : maps) {
      if (!f.strata.count(k.stratum) || k.stratum.size() < 2) {
        fail(std::string(what) + " for stratum " + k.stratum.str() +
             " which is not a stratum of size >= 2");
        continue;
      }
      if (k.position < 1 || k.position > static_cast<int>(k.stratum.size())) {
        fail(std::string(what) + " position " + std::to_string(k.position) +
             " out of range for " + k.stratum.str());
        continue;
      }
      const StratumIndex j = k.stratum.drop(static_cast<std::size_t>(k.position));
      const std::size_t rows = push ? f.chow_dim(j, k.codim + 1, k.higher)
                                    : f.chow_dim(k.stratum, k.codim, k.higher);
      const std::size_t cols = push ? f.chow_dim(k.stratum, k.codim, k.higher)
                                    : f.chow_dim(j, k.codim, k.higher);
      if (m.rows() != rows || m.cols() != cols)
        fail(std::string(what) + " for " + key_str(k) + " is " + m.shape() +
             ", Chow dimensions require " + std::to_string(rows) + "x" +
             std::to_string(cols));
    }
  };
  check_maps(f.pushforward, true);
  check_maps(f.pullback, false);
  for (const auto& [c, m] : f.ii) {
    const std::size_t rows = build_level(f, 1, c + 1, 0).total;
    const std::size_t cols = build_level(f, 1, c, 0).total;
    if (m.rows() != rows || m.cols() != cols)
      fail("i^*i_* block for codim " + std::to_string(c) + " is " + m.shape() +
           ", expected " + std::to_string(rows) + "x" + std::to_string(cols));
  }
}
}  // namespace detail

/// Checks structure and the identities gamma^2 = 0, rho^2 = 0 and
/// gamma rho + rho gamma = 0 on every level where the composites are defined
/// (level 0 is the model itself and is not part of the data, so the mixed
/// identity is checked from level 2 up).
inline ValidationReport validate(const FibreDescriptor& f) {
  ValidationReport rep;
  detail::structure(f, rep);
  if (!rep.ok()) return rep;

  std::set<int> highers;
  for (const auto& [k, d] : f.chow) highers.insert(k.higher);
  const int top = f.max_level();

  auto guarded = [&](const char* name, int r, int p, int j, auto&& compute) {
    try {
      RatMatrix m = compute();
      ++rep.identities_checked;
      if (!m.is_zero())
        rep.failures.push_back({name, r, p, j, detail::first_nonzero(m)});
    } catch (const DescriptorError& e) {
      rep.failures.push_back({name, r, p, j, e.what()});
    }
  };

  for (int j : highers) {
    for (int r = 1; r <= top; ++r) {
      for (int p = -1; p <= f.dim + 1; ++p) {
        if (r >= 3)
          guarded("gamma^2", r, p, j,
                  [&] { return gamma(f, r - 1, p + 1, j) * gamma(f, r, p, j); });
        if (r + 2 <= top)
          guarded("rho^2", r, p, j,
                  [&] { return rho(f, r + 1, p, j) * rho(f, r, p, j); });
        if (r >= 2)
          guarded("gamma rho + rho gamma", r, p, j, [&] {
            return compose_gamma_rho(f, r, p, j) + compose_rho_gamma(f, r, p, j);
          });
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

/// Cycle of n rational curves (the special fibre of a Tate curve with split
/// multiplicative reduction). For n = 2 the single double stratum Y_{12}
/// consists of two points.
inline FibreDescriptor generator_ngon(int n, std::int64_t q_v) {
  if (n < 2) throw ContractError("n-gon needs at least 2 components");
  FibreDescriptor f;
  f.components = n;
  f.dim = 1;
  f.q_v = q_v;
  for (int i = 1; i <= n; ++i) {
    f.strata.insert(StratumIndex{i});
    f.chow[{StratumIndex{i}, 0, 0}] = 1;
    f.chow[{StratumIndex{i}, 1, 0}] = 1;
  }
  std::map<StratumIndex, std::size_t> nodes;
  if (n == 2) {
    nodes[StratumIndex{1, 2}] = 2;
  } else {
    for (int i = 1; i < n; ++i) nodes[StratumIndex{i, i + 1}] = 1;
    nodes[StratumIndex{1, n}] = 1;
  }
  for (const auto& [s, mult] : nodes) {
    f.strata.insert(s);
    f.chow[{s, 0, 0}] = mult;
    for (int u = 1; u <= 2; ++u) {
      RatMatrix push(1, mult), pull(mult, 1);
      for (std::size_t k = 0; k < mult; ++k) {
        push(0, k) = 1;
        pull(k, 0) = 1;
      }
      f.pushforward[{s, u, 0, 0}] = push;
      f.pullback[{s, u, 0, 0}] = pull;
    }
  }
  return f;
}

/// Smooth (good reduction) fibre: a single component with the given Chow
/// dimensions, keyed by (codim, higher index).
inline FibreDescriptor generator_smooth(const std::map<std::pair<int, int>, std::size_t>& dims,
                                        int dimY, std::int64_t q_v) {
  FibreDescriptor f;
  f.components = 1;
  f.dim = dimY;
  f.q_v = q_v;
  f.strata.insert(StratumIndex{1});
  for (const auto& [k, d] : dims)
    if (d > 0) f.chow[{StratumIndex{1}, k.first, k.second}] = d;
  return f;
}

/// Which Chow groups a dual-complex fibre carries on every stratum.
enum class DualComplexMode {
  Fundamental,  // CH^0 only; rho is the simplicial coboundary, gamma vanishes
  Points,       // zero-cycles only; gamma is the simplicial boundary
  Both,         // both of the above
};

/// Fibre whose strata are the simplices of a simplicial complex on the
/// components, every stratum connected. `facets` are closed downward.
/// Mode Both is only consistent when n = 1 or when no n+1 components meet;
/// otherwise gamma rho + rho gamma picks up the triple-point term, which
/// needs divisor classes this generator does not model. That case throws.
inline FibreDescriptor generator_dual_complex(const std::vector<StratumIndex>& facets,
                                              int components, int dimY,
                                              DualComplexMode mode, std::int64_t q_v) {
  FibreDescriptor f;
  f.components = components;
  f.dim = dimY;
  f.q_v = q_v;
  for (int i = 1; i <= components; ++i) f.strata.insert(StratumIndex{i});
  for (const auto& facet : facets) {
    std::vector<int> m = facet.members;
    std::sort(m.begin(), m.end());
    const std::size_t k = m.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
      StratumIndex s;
      for (std::size_t b = 0; b < k; ++b)
        if (mask & (std::size_t{1} << b)) s.members.push_back(m[b]);
      f.strata.insert(s);
    }
  }
  const bool has_top = std::any_of(f.strata.begin(), f.strata.end(), [&](const StratumIndex& s) {
    return static_cast<int>(s.size()) == dimY + 1;
  });
  if (mode == DualComplexMode::Both && dimY >= 2 && has_top)
    throw ContractError("dual-complex mode Both needs dimY = 1 or no (dimY+1)-fold points");

  const bool fund = mode != DualComplexMode::Points;
  const bool pts = mode != DualComplexMode::Fundamental;
  for (const auto& s : f.strata) {
    const int sdim = dimY - static_cast<int>(s.size()) + 1;
    if (sdim < 0) continue;
    if (fund) f.chow[{s, 0, 0}] = 1;
    if (pts) f.chow[{s, sdim, 0}] = 1;
  }
  for (const auto& s : f.strata) {
    if (s.size() < 2) continue;
    const int sdim = dimY - static_cast<int>(s.size()) + 1;
    if (sdim < 0) continue;
    for (int u = 1; u <= static_cast<int>(s.size()); ++u) {
      if (fund) f.pullback[{s, u, 0, 0}] = RatMatrix{{1}};
      if (pts) f.pushforward[{s, u, sdim, 0}] = RatMatrix{{1}};
    }
  }
  return f;
}

}  // namespace degen::strata

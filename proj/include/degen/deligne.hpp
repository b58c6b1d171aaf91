#pragma once

// v-adic Deligne cohomology of a semistable fibre, the regulator and
// cycle-class data attached to it, the full-lattice checks, and the integral
// kernel/cokernel orders.
//
// Two cases, for H^q with twist q-a:
//   q - 2a = 1 : Ker(i^*i_* on CH^a(Y^(1))) / Im(gamma from CH^{a-1}(Y^(2)))
//   q - 2a > 1 : CH^{q-a-1}(Y, q-2a-1), whose dimension is input data.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "degen/error.hpp"
#include "degen/qlinalg.hpp"
#include "degen/strata.hpp"

namespace degen::deligne {

enum class DeligneCase { Boundary, Higher };

inline const char* case_name(DeligneCase c) {
  return c == DeligneCase::Boundary ? "boundary" : "higher";
}

/// A presented Q-space: (vectors of `ambient` killed by `ii`) modulo the
/// column span of `image`. In the higher case ii is 0 x ambient and image is
/// empty, so the group is the ambient space itself.
struct DeligneGroup {
  DeligneCase kind = DeligneCase::Higher;
  int q = 0, a = 0;
  std::size_t ambient = 0;
  RatMatrix ii;      // ambient -> next codimension
  RatMatrix kernel;  // basis of Ker(ii), ambient x dimKer
  RatMatrix image;   // Im(gamma) generators, ambient x *
  std::size_t image_rank = 0;
  std::size_t dim = 0;
};

inline DeligneGroup deligne_group(const strata::FibreDescriptor& f, int q, int a,
                                  std::optional<std::size_t> higher_chow_dim = {}) {
  const int e = q - 2 * a;
  if (e < 1)
    throw ContractError("Deligne group needs q - 2a >= 1, got q = " + std::to_string(q) +
                        ", a = " + std::to_string(a));
  DeligneGroup g;
  g.q = q;
  g.a = a;
  if (e > 1) {
    if (!higher_chow_dim)
      throw ContractError("q - 2a = " + std::to_string(e) +
                          " needs the dimension of CH^" + std::to_string(q - a - 1) + "(Y, " +
                          std::to_string(e - 1) + ")");
    g.kind = DeligneCase::Higher;
    g.ambient = *higher_chow_dim;
    g.ii = RatMatrix(0, g.ambient);
    g.kernel = RatMatrix::identity(g.ambient);
    g.image = RatMatrix(g.ambient, 0);
    g.dim = g.ambient;
    return g;
  }

  g.kind = DeligneCase::Boundary;
  g.ambient = strata::build_level(f, 1, a, 0).total;
  g.ii = strata::ii_matrix(f, a);
  g.kernel = kernel_basis(g.ii);
  g.image = a >= 1 && f.max_level() >= 2 ? strata::gamma(f, 2, a - 1, 0)
                                         : RatMatrix(g.ambient, 0);
  const RatMatrix killed = g.ii * g.image;
  if (!killed.is_zero())
    throw DataError("Im(gamma) is not inside Ker(i^*i_*) in codim " + std::to_string(a) +
                    ": i^*i_* o gamma = " + to_string(killed));
  g.image_rank = rank(g.image);
  g.dim = g.kernel.cols() - g.image_rank;
  return g;
}

/// Boundary images of the declared motivic generators, in ambient
/// coordinates of the Deligne presentation (one column per generator).
struct RegulatorDatum {
  std::size_t motivic_rank = 0;
  RatMatrix matrix;
};

/// xi: B^a -> CH^a(Y^(1)) on representatives (one column per generator of
/// B^a), tau: CH^a(Y^(1)) -> Deligne ambient, applied to reduced
/// representatives.
struct CycleClassDatum {
  std::size_t b_rank = 0;
  RatMatrix xi;
  RatMatrix tau;
};

struct KernelReport {
  std::vector<std::size_t> bad_columns;
  std::vector<std::string> witnesses;
  bool ok() const { return bad_columns.empty(); }
};

inline void require_regulator_shape(const DeligneGroup& g, const RegulatorDatum& reg) {
  if (reg.matrix.rows() != g.ambient || reg.matrix.cols() != reg.motivic_rank)
    throw DimensionError("regulator is " + reg.matrix.shape() + ", expected " +
                         std::to_string(g.ambient) + "x" + std::to_string(reg.motivic_rank));
}

/// Every regulator column must be killed by i^*i_*.
inline KernelReport boundary_in_kernel(const DeligneGroup& g, const RegulatorDatum& reg) {
  require_regulator_shape(g, reg);
  KernelReport rep;
  if (g.kind != DeligneCase::Boundary) return rep;
  const RatMatrix img = g.ii * reg.matrix;
  for (std::size_t c = 0; c < img.cols(); ++c) {
    auto col = img.column(c);
    bool zero = std::all_of(col.begin(), col.end(), [](const Rational& x) { return x == 0; });
    if (zero) continue;
    rep.bad_columns.push_back(c);
    rep.witnesses.push_back("i^*i_* of column " + std::to_string(c) + " = " + to_string(col));
  }
  return rep;
}

/// tau o (xi reduced modulo Im(i^*i_* : CH^{a-1} -> CH^a)). Checks that
/// every xi column is killed by rho.
inline RatMatrix z_map(const strata::FibreDescriptor& f, int a, const CycleClassDatum& cyc) {
  const std::size_t amb = strata::build_level(f, 1, a, 0).total;
  if (cyc.xi.rows() != amb || cyc.xi.cols() != cyc.b_rank)
    throw DimensionError("xi is " + cyc.xi.shape() + ", expected " + std::to_string(amb) + "x" +
                         std::to_string(cyc.b_rank));
  if (cyc.tau.cols() != amb)
    throw DimensionError("tau is " + cyc.tau.shape() + ", needs " + std::to_string(amb) +
                         " columns");
  const RatMatrix r = strata::rho(f, 1, a, 0) * cyc.xi;
  for (std::size_t c = 0; c < r.cols(); ++c) {
    auto col = r.column(c);
    if (!std::all_of(col.begin(), col.end(), [](const Rational& x) { return x == 0; }))
      throw DataError("xi column " + std::to_string(c) + " is not in Ker(rho): rho(xi) = " +
                      to_string(col));
  }
  const RatMatrix ii_prev = a >= 1 ? strata::ii_matrix(f, a - 1)
                                   : RatMatrix(amb, 0);
  const Subspace sub(ii_prev);
  return cyc.tau * sub.reduce_columns(cyc.xi);
}

struct LatticeReport {
  std::size_t rank = 0;
  std::size_t dim = 0;
  RatMatrix image_basis;  // reduced modulo the presentation's image
  std::vector<std::string> witnesses;
  bool pass = false;
};

/// Rank of the image of `columns` in the Deligne quotient; PASS iff it
/// equals the quotient dimension and every column lies in Ker(i^*i_*).
inline LatticeReport lattice_check(const DeligneGroup& g, const RatMatrix& columns) {
  if (columns.rows() != g.ambient)
    throw DimensionError("image columns have " + std::to_string(columns.rows()) +
                         " rows, Deligne ambient is " + std::to_string(g.ambient));
  LatticeReport rep;
  rep.dim = g.dim;
  const RatMatrix killed = g.ii * columns;
  for (std::size_t c = 0; c < killed.cols(); ++c) {
    auto col = killed.column(c);
    if (!std::all_of(col.begin(), col.end(), [](const Rational& x) { return x == 0; }))
      rep.witnesses.push_back("column " + std::to_string(c) + " is outside Ker(i^*i_*): " +
                              to_string(col));
  }
  const Subspace sub(g.image);
  const RatMatrix reduced = sub.reduce_columns(columns);
  rep.image_basis = image_basis(reduced);
  rep.rank = rep.image_basis.cols();
  if (rep.witnesses.empty() && rep.rank < rep.dim) {
    // a kernel direction missed by image + Im(gamma)
    const Subspace reached(hstack(g.image, columns));
    for (std::size_t c = 0; c < g.kernel.cols(); ++c) {
      auto v = g.kernel.column(c);
      if (!reached.contains(v)) {
        rep.witnesses.push_back("rank " + std::to_string(rep.rank) + " < dim " +
                                std::to_string(rep.dim) + "; not reached: " + to_string(v));
        break;
      }
    }
  }
  rep.pass = rep.witnesses.empty() && rep.rank == rep.dim;
  return rep;
}

/// Regulator columns, followed by z-map columns when a cycle-class datum is
/// supplied.
inline LatticeReport conjecture_A_check(const DeligneGroup& g, const RegulatorDatum& reg,
                                        const std::optional<RatMatrix>& z = {}) {
  require_regulator_shape(g, reg);
  RatMatrix cols = reg.matrix;
  if (z) {
    if (z->rows() != g.ambient)
      throw DimensionError("z-map is " + z->shape() + ", expected " +
                           std::to_string(g.ambient) + " rows");
    cols = hstack(cols, *z);
  }
  return lattice_check(g, cols);
}

struct IntegralOrders {
  GroupOrder b;  // kernel
  GroupOrder c;  // cokernel
};

inline IntegralOrders integral_orders(const AbMap& f) {
  return {kernel_order(f), cokernel_order(f)};
}

}  // namespace degen::deligne

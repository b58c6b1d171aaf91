#pragma once

// Checks run by the command-line driver, and their reports.
//
// Every command produces a CheckReport: an ordered list of lines, each with
// a verdict, a printable exact value and, for failures, witnesses that can
// be verified by hand. Places are visited in name order, so the output is a
// function of the bundle alone.

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "degen/bundle.hpp"
#include "degen/deligne.hpp"
#include "degen/lfun.hpp"
#include "degen/monodromy.hpp"
#include "degen/qlinalg.hpp"
#include "degen/strata.hpp"

namespace degen::workbench {

enum class Verdict { Pass, Fail, Inconclusive };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    default: return "INCONCLUSIVE";
  }
}

struct ReportLine {
  std::string check;
  std::string place;  // "-" when the line is not tied to a place
  Verdict verdict = Verdict::Inconclusive;
  std::string value;
  std::vector<std::string> witnesses;
};

struct CheckReport {
  std::string title;
  std::vector<std::string> info;  // free-form detail shown in text mode
  std::vector<ReportLine> lines;
  std::vector<std::string> notes;

  void add(std::string check, std::string place, Verdict v, std::string value,
           std::vector<std::string> witnesses = {}) {
    lines.push_back({std::move(check), std::move(place), v, std::move(value), std::move(witnesses)});
  }

  /// FAIL if anything failed, PASS if there is at least one line and all
  /// passed, INCONCLUSIVE otherwise.
  Verdict overall() const {
    bool any_fail = false, all_pass = !lines.empty();
    for (const auto& l : lines) {
      any_fail = any_fail || l.verdict == Verdict::Fail;
      all_pass = all_pass && l.verdict == Verdict::Pass;
    }
    if (any_fail) return Verdict::Fail;
    return all_pass ? Verdict::Pass : Verdict::Inconclusive;
  }

  int exit_code() const {
    switch (overall()) {
      case Verdict::Pass: return 0;
      case Verdict::Fail: return 1;
      default: return 2;
    }
  }

  std::string text() const {
    std::ostringstream os;
    os << title << "\n";
    for (const auto& s : info) os << "  " << s << "\n";
    for (const auto& l : lines) {
      os << "  [" << verdict_name(l.verdict) << "] " << l.check;
      if (l.place != "-") os << " @ " << l.place;
      if (!l.value.empty()) os << ": " << l.value;
      os << "\n";
      for (const auto& w : l.witnesses) os << "      witness: " << w << "\n";
    }
    for (const auto& n : notes) os << "  note: " << n << "\n";
    os << "verdict: " << verdict_name(overall()) << "\n";
    return os.str();
  }

  std::string tsv() const {
    std::ostringstream os;
    for (const auto& l : lines)
      os << l.check << "\t" << l.place << "\t" << verdict_name(l.verdict) << "\t" << l.value
         << "\n";
    os << "overall\t-\t" << verdict_name(overall()) << "\t\n";
    return os.str();
  }
};

namespace detail {

inline std::string dims_str(const std::vector<std::size_t>& v, int lo) {
  std::string s = "[" + std::to_string(lo) + ":";
  for (auto d : v) s += " " + std::to_string(d);
  return s + "]";
}

inline const bundle::Params& need_params(const bundle::InstanceBundle& b) {
  if (!b.params) throw ContractError("bundle has no params section");
  return *b.params;
}

inline const bundle::MotivicFibre* motivic_fibre(const bundle::InstanceBundle& b,
                                                 const std::string& name) {
  if (!b.motivic) return nullptr;
  auto it = b.motivic->fibres.find(name);
  return it == b.motivic->fibres.end() ? nullptr : &it->second;
}

/// Deligne group of a place, or a reason it cannot be formed.
struct PlaceGroup {
  std::optional<deligne::DeligneGroup> group;
  std::string reason;
};

inline PlaceGroup place_group(const bundle::InstanceBundle& b, const std::string& name, int q,
                              int a) {
  const auto& f = b.fibres.at(name);
  if (q - 2 * a > 1) {
    const auto* mf = motivic_fibre(b, name);
    if (!mf || !mf->higher_chow_dim)
      return {std::nullopt, "q - 2a > 1 needs motivic.fibres." + name + ".higher_chow_dim"};
    return {deligne::deligne_group(f, q, a, *mf->higher_chow_dim), ""};
  }
  return {deligne::deligne_group(f, q, a), ""};
}

inline RatMatrix regulator_of(const bundle::InstanceBundle& b, const std::string& name,
                              std::size_t ambient) {
  const auto* mf = motivic_fibre(b, name);
  const std::size_t rank = b.motivic ? b.motivic->rank : 0;
  if (mf && mf->regulator) return *mf->regulator;
  if (rank == 0) return RatMatrix(ambient, 0);
  throw ContractError("motivic rank is " + std::to_string(rank) +
                      " but no regulator is given for place " + name);
}

inline std::optional<RatMatrix> z_of(const bundle::InstanceBundle& b, const std::string& name,
                                     int a) {
  const auto* mf = motivic_fibre(b, name);
  if (!mf || !mf->xi) return std::nullopt;
  deligne::CycleClassDatum cyc{b.motivic->b_rank.value_or(0), *mf->xi, *mf->tau};
  return deligne::z_map(b.fibres.at(name), a, cyc);
}

inline std::vector<lfun::PlaceDatum> all_places(const bundle::InstanceBundle& b) {
  std::vector<lfun::PlaceDatum> v;
  for (const auto& [name, p] : b.places) v.push_back(p);
  return v;
}

}  // namespace detail

// ---------------------------------------------------------------------------

inline CheckReport cmd_validate(const bundle::InstanceBundle& b) {
  CheckReport r;
  r.title = "validate: gamma^2 = 0, rho^2 = 0, gamma rho + rho gamma = 0";
  for (const auto& [name, f] : b.fibres) {
    const auto rep = strata::validate(f);
    if (rep.ok()) {
      r.add("validate", name, Verdict::Pass,
            std::to_string(rep.identities_checked) + " identities checked");
      continue;
    }
    std::vector<std::string> w;
    for (const auto& fl : rep.failures) {
      std::string s = fl.check;
      if (fl.check != "structure")
        s += " at level " + std::to_string(fl.level) + " codim " + std::to_string(fl.codim) +
             " higher " + std::to_string(fl.higher);
      w.push_back(s + ": " + fl.witness);
    }
    r.add("validate", name, Verdict::Fail, std::to_string(rep.failures.size()) + " failures",
          std::move(w));
  }
  if (b.fibres.empty()) r.notes.push_back("bundle has no fibres; nothing to check");
  return r;
}

inline CheckReport cmd_dim_theorem(const bundle::InstanceBundle& b, int q, int a) {
  CheckReport r;
  r.title = "dim-theorem: dim H^" + std::to_string(q) + "_D(X/v, Q(" + std::to_string(q - a) +
            ")) = -ord_{s=" + std::to_string(a) + "} L_v";
  const std::int64_t fq = detail::need_params(b).field_q;
  if (q - 2 * a < 1) throw ContractError("dim-theorem needs q - 2a >= 1");
  for (const auto& [name, f] : b.fibres) {
    auto pit = b.places.find(name);
    if (pit == b.places.end()) {
      r.add("dim-theorem", name, Verdict::Inconclusive, "no place data for this fibre");
      continue;
    }
    const lfun::RatFunc lv = lfun::local_factor(pit->second);
    const long dv = -lfun::ord_at(lv, fq, a);
    const auto pg = detail::place_group(b, name, q, a);
    if (!pg.group) {
      r.add("dim-theorem", name, Verdict::Inconclusive, "d_v = " + std::to_string(dv),
            {pg.reason});
      continue;
    }
    const auto& g = *pg.group;
    std::string value = "dim = " + std::to_string(g.dim) + " (" + deligne::case_name(g.kind) +
                        "), d_v = " + std::to_string(dv) + ", L_v = " + lv.str();
    if (static_cast<long>(g.dim) == dv) {
      r.add("dim-theorem", name, Verdict::Pass, value);
    } else {
      std::vector<std::string> w;
      if (g.kind == deligne::DeligneCase::Boundary)
        w.push_back("dim Ker(i^*i_*) = " + std::to_string(g.kernel.cols()) +
                    ", rank Im(gamma) = " + std::to_string(g.image_rank));
      w.push_back("ord at t = " + lfun::evaluation_point(fq, a).get_str() + " of " + lv.str() +
                  " is " + std::to_string(-dv));
      r.add("dim-theorem", name, Verdict::Fail, value, std::move(w));
    }
  }
  if (b.fibres.empty()) r.notes.push_back("bundle has no fibres; nothing to check");
  return r;
}

namespace detail {

inline void lattice_lines(CheckReport& r, const char* check, const bundle::InstanceBundle& b,
                          bool with_z) {
  const auto& p = need_params(b);
  for (const auto& [name, f] : b.fibres) {
    const auto pg = place_group(b, name, p.q_cohomological, p.a);
    if (!pg.group) {
      r.add(check, name, Verdict::Inconclusive, "", {pg.reason});
      continue;
    }
    const auto& g = *pg.group;
    deligne::RegulatorDatum reg{b.motivic ? b.motivic->rank : 0,
                                regulator_of(b, name, g.ambient)};
    std::optional<RatMatrix> z;
    if (with_z) z = z_of(b, name, p.a);
    const auto rep = deligne::conjecture_A_check(g, reg, z);
    std::string value = "rank " + std::to_string(rep.rank) + ", dim " + std::to_string(rep.dim) +
                        ", image basis " + to_string(rep.image_basis);
    if (with_z && !z) value += " (no cycle-class data)";
    r.add(check, name, rep.pass ? Verdict::Pass : Verdict::Fail, value, rep.witnesses);
  }
  if (b.fibres.empty()) r.notes.push_back("bundle has no fibres; nothing to check");
}

struct GlobalSide {
  std::vector<std::string> places;
  std::vector<deligne::DeligneGroup> groups;
  long sum_dv = 0;
  std::vector<std::string> missing;
};

inline GlobalSide global_side(const bundle::InstanceBundle& b) {
  const auto& p = need_params(b);
  GlobalSide gs;
  for (const auto& [name, pd] : b.places) {
    gs.sum_dv -= lfun::ord_at(lfun::local_factor(pd), p.field_q, p.a);
    auto pg = place_group(b, name, p.q_cohomological, p.a);
    if (!pg.group) {
      gs.missing.push_back(pg.reason);
      continue;
    }
    gs.places.push_back(name);
    gs.groups.push_back(std::move(*pg.group));
  }
  return gs;
}

/// Columns (regulator, then z if requested) stacked over the places, each
/// block reduced modulo that place's Im(gamma).
inline RatMatrix stacked_columns(const bundle::InstanceBundle& b, const GlobalSide& gs,
                                 bool with_z, std::vector<std::string>& witnesses) {
  const auto& p = need_params(b);
  const std::size_t rank = b.motivic ? b.motivic->rank : 0;
  const std::size_t brank = with_z && b.motivic ? b.motivic->b_rank.value_or(0) : 0;
  RatMatrix out(0, rank + brank);
  for (std::size_t v = 0; v < gs.places.size(); ++v) {
    const auto& g = gs.groups[v];
    RatMatrix cols = regulator_of(b, gs.places[v], g.ambient);
    if (with_z) {
      auto z = z_of(b, gs.places[v], p.a);
      if (!z) {
        witnesses.push_back("no cycle-class data at " + gs.places[v] + "; z taken as zero");
        z = RatMatrix(g.ambient, brank);
      }
      cols = hstack(cols, *z);
    }
    const RatMatrix killed = g.ii * cols;
    if (!killed.is_zero())
      witnesses.push_back("columns at " + gs.places[v] + " leave Ker(i^*i_*): " +
                          to_string(killed));
    out = vstack(out, Subspace(g.image).reduce_columns(cols));
  }
  return out;
}

inline void b_lines(CheckReport& r, const bundle::InstanceBundle& b, bool two) {
  const char* name = two ? "B2FF" : "B1FF";
  const auto& p = need_params(b);
  const int e = p.q_cohomological - 2 * p.a;
  if (two ? e != 1 : e <= 1) {
    r.add(name, "-", Verdict::Inconclusive,
          two ? "applies only when q - 2a = 1" : "applies only when q - 2a > 1");
    return;
  }
  if (!b.global) {
    r.add(name, "-", Verdict::Inconclusive, "no global L-function in the bundle");
    return;
  }
  if (!b.motivic) {
    r.add(name, "-", Verdict::Inconclusive, "no motivic data in the bundle");
    return;
  }
  if (b.places.empty()) r.notes.push_back("S is empty; L_S is the global function itself");
  const lfun::RatFunc ls = lfun::strip_S(b.completed(), detail::all_places(b));
  const std::int64_t fq = p.field_q;
  const long rank = static_cast<long>(b.motivic->rank);
  r.info.push_back("L_S = " + ls.str());

  const long ord = lfun::ord_at(ls, fq, p.a);
  r.add("ord L_S at s=a", "-", ord == rank ? Verdict::Pass : Verdict::Fail,
        "ord = " + std::to_string(ord) + ", motivic rank = " + std::to_string(rank));

  if (two) {
    if (!b.motivic->b_rank) {
      r.add("ord L_S at s=a+1", "-", Verdict::Inconclusive, "motivic.b_rank not declared");
    } else {
      const long o1 = lfun::ord_at(ls, fq, p.a + 1);
      const long want = -static_cast<long>(*b.motivic->b_rank);
      r.add("ord L_S at s=a+1", "-", o1 == want ? Verdict::Pass : Verdict::Fail,
            "ord = " + std::to_string(o1) + ", -dim B^a = " + std::to_string(want));
    }
  }

  const GlobalSide gs = global_side(b);
  if (!gs.missing.empty()) {
    r.add("regulator isomorphism", "-", Verdict::Inconclusive, "", gs.missing);
  } else {
    std::vector<std::string> w;
    const RatMatrix cols = stacked_columns(b, gs, two, w);
    std::size_t total = 0;
    for (const auto& g : gs.groups) total += g.dim;
    const std::size_t rk = degen::rank(cols);
    const bool square = cols.cols() == total;
    if (!square)
      w.push_back("source has " + std::to_string(cols.cols()) + " generators, target dim " +
                  std::to_string(total));
    if (rk < cols.cols()) w.push_back("kernel basis " + to_string(kernel_basis(cols)));
    const bool ok = w.empty() && rk == total;
    r.add("regulator isomorphism", "-", ok ? Verdict::Pass : Verdict::Fail,
          "rank " + std::to_string(rk) + " of " + std::to_string(cols.rows()) + "x" +
              std::to_string(cols.cols()) + " onto sum of Deligne groups of dim " +
              std::to_string(total),
          std::move(w));
  }

  const lfun::LeadingValue lv = lfun::leading_laurent(ls, fq, p.a);
  const long want = two ? rank : gs.sum_dv;
  r.add("leading value", "-", lv.logpow == want ? Verdict::Pass : Verdict::Fail,
        "L_S^*(" + std::to_string(p.a) + ") = " + lv.str(fq) + ", expected log power " +
            std::to_string(want) + (two ? " (motivic rank)" : " (sum of d_v)"));
  r.notes.push_back("verdicts are conditional on the declared motivic ranks and regulator data");
}

}  // namespace detail

inline CheckReport cmd_conjecture(const bundle::InstanceBundle& b, const std::string& which) {
  CheckReport r;
  const auto& p = detail::need_params(b);
  const int e = p.q_cohomological - 2 * p.a;
  r.title = "check " + which + " at q = " + std::to_string(p.q_cohomological) + ", a = " +
            std::to_string(p.a) + ", field q = " + std::to_string(p.field_q);
  if (which == "A1") {
    if (e <= 1)
      r.add("A1", "-", Verdict::Inconclusive, "A1 applies only when q - 2a > 1");
    else
      detail::lattice_lines(r, "A1", b, false);
  } else if (which == "A2") {
    if (e != 1)
      r.add("A2", "-", Verdict::Inconclusive, "A2 applies only when q - 2a = 1");
    else
      detail::lattice_lines(r, "A2", b, true);
  } else if (which == "B1FF") {
    detail::b_lines(r, b, false);
  } else if (which == "B2FF") {
    detail::b_lines(r, b, true);
  } else if (which == "CFF") {
    if (e < 1) throw ContractError("CFF needs q - 2a >= 1");
    if (!b.global) {
      r.add("CFF", "-", Verdict::Inconclusive, "no global L-function in the bundle");
      return r;
    }
    const lfun::CompletedL lam = b.completed();
    const lfun::LeadingValue lv = lfun::leading_laurent(lam.as_function(), p.field_q, p.a);
    r.info.push_back("Lambda = " + lam.as_function().str());

    // order of vanishing
    std::optional<long> want_ord;
    std::string src;
    if (e == 1 && b.motivic && b.motivic->b_rank) {
      want_ord = -static_cast<long>(*b.motivic->b_rank);
      src = "-dim B^a";
    } else if (e > 1 && b.motivic && b.motivic->generic_rank) {
      want_ord = *b.motivic->generic_rank;
      src = "dim CH^{q-a}(X, q-2a)";
    }
    const char* oname = e == 1 ? "C2 order" : "C1 order";
    if (!want_ord)
      r.add(oname, "-", Verdict::Inconclusive,
            "ord = " + std::to_string(lv.order) + "; no declared rank to compare");
    else
      r.add(oname, "-", lv.order == *want_ord ? Verdict::Pass : Verdict::Fail,
            "ord_{s=" + std::to_string(p.a) + "} Lambda = " + std::to_string(lv.order) + ", " +
                src + " = " + std::to_string(*want_ord));

    if (!b.integral) {
      r.add("special value", "-", Verdict::Inconclusive,
            "Lambda^* = " + lv.str(p.field_q) + "; no integral structures given");
      return r;
    }
    const auto orders = deligne::integral_orders(*b.integral);
    const std::string bc = "b = " + orders.b.str() + ", c = " + orders.c.str();
    if (orders.b.is_infinite() || orders.c.is_infinite()) {
      r.add("special value", "-", Verdict::Fail, bc,
            {"kernel or cokernel of the integral regulator is infinite"});
      return r;
    }
    const Rational ratio(orders.c.value(), orders.b.value());
    const Rational mag = abs(lv.coeff);
    std::vector<std::string> w;
    if (mag != ratio)
      w.push_back("|Lambda^* coefficient| = " + mag.get_str() + " but c/b = " + ratio.get_str());
    if (lv.logpow != lv.order)
      w.push_back("log power " + std::to_string(lv.logpow) + " differs from the order " +
                  std::to_string(lv.order));
    const std::string sign = lv.coeff < 0 ? "-" : "+";
    const Verdict v = w.empty() ? Verdict::Pass : Verdict::Fail;
    r.add("special value", "-", v,
          "Lambda^*(" + std::to_string(p.a) + ") = " + lv.str(p.field_q) + " = " + sign +
              "(c/b) log(" + std::to_string(p.field_q) + ")^" + std::to_string(lv.order) + ", " +
              bc,
          std::move(w));
  } else {
    throw ContractError("unknown check \"" + which + "\"; expected A1, A2, B1FF, B2FF or CFF");
  }
  return r;
}

inline CheckReport cmd_complex(const bundle::InstanceBundle& b, int q, int star) {
  CheckReport r;
  r.title = "complex: Cone(N : row " + std::to_string(star) + " -> row " +
            std::to_string(star - 1) + ") and the kernel/cokernel complex";
  for (const auto& [name, f] : b.fibres) {
    try {
      const auto kc = monodromy::build_K(f);
      const auto a = monodromy::total_row(kc, star);
      const auto bb = monodromy::total_row(kc, star - 1);
      const auto cone = monodromy::cone_of_N(a, bb, monodromy::row_monodromy(kc, star));
      const int lo = cone.complex.lo(), hi = cone.complex.hi();
      if (q < lo || q > hi)
        throw BoundsError("degree " + std::to_string(q) + " is outside the cone window [" +
                          std::to_string(lo) + ", " + std::to_string(hi) + "]");
      const auto small = monodromy::build_C(f, star, lo, hi);
      r.info.push_back("fibre " + name + " (n = " + std::to_string(f.dim) + ")");
      r.info.push_back("  row s     spaces     " + detail::dims_str(a.dims(), a.lo()));
      r.info.push_back("  row s     cohomology " +
                       detail::dims_str(monodromy::cohomology_dims(a), a.lo()));
      r.info.push_back("  row s-1   spaces     " + detail::dims_str(bb.dims(), bb.lo()));
      r.info.push_back("  row s-1   cohomology " +
                       detail::dims_str(monodromy::cohomology_dims(bb), bb.lo()));
      r.info.push_back("  cone      spaces     " + detail::dims_str(cone.complex.dims(), lo));
      const auto hc = monodromy::cohomology_dims(cone.complex);
      r.info.push_back("  cone      cohomology " + detail::dims_str(hc, lo));
      r.info.push_back("  small     spaces     " + detail::dims_str(small.dims(), lo));
      const auto hs = monodromy::cohomology_dims(small);
      r.info.push_back("  small     cohomology " + detail::dims_str(hs, lo));
      const auto t = static_cast<std::size_t>(q - lo);
      r.add("complex", name, Verdict::Pass,
            "H^" + std::to_string(q) + " cone = " + std::to_string(hc[t]) + ", small = " +
                std::to_string(hs[t]) + ", chi(cone) = " +
                std::to_string(monodromy::euler_characteristic(cone.complex)));
    } catch (const DataError& e) {
      r.add("complex", name, Verdict::Fail, "construction failed", {e.what()});
    }
  }
  if (b.fibres.empty()) r.notes.push_back("bundle has no fibres; nothing to build");
  return r;
}

inline CheckReport cmd_quasi_iso(const bundle::InstanceBundle& b, int q, int star) {
  CheckReport r;
  r.title = "quasi-iso: H(Cone(N)) vs H(kernel/cokernel complex), s = " + std::to_string(star) +
            ", degree " + std::to_string(q);
  for (const auto& [name, f] : b.fibres) {
    try {
      const auto rep = monodromy::check_quasi_iso(monodromy::build_K(f), q, star);
      auto span = [](const auto& s) {
        return s ? "[" + std::to_string(s->first) + ", " + std::to_string(s->second) + "]"
                 : std::string("empty");
      };
      r.info.push_back("fibre " + name + ": window [" + std::to_string(rep.window_lo) + ", " +
                       std::to_string(rep.window_hi) + "], cone support " + span(rep.cone_span) +
                       ", small support " + span(rep.c_span) + ", shift " +
                       std::to_string(rep.shift));
      std::vector<std::size_t> hc, hs;
      std::vector<std::string> w;
      for (const auto& row : rep.rows) {
        hc.push_back(row.cone_dim);
        hs.push_back(row.c_dim);
        if (!row.equal())
          w.push_back("degree " + std::to_string(row.degree) + ": cone " +
                      std::to_string(row.cone_dim) + ", small " + std::to_string(row.c_dim));
      }
      const auto t = static_cast<std::size_t>(q - rep.window_lo);
      r.add("quasi-iso", name, rep.ok() ? Verdict::Pass : Verdict::Fail,
            "H^" + std::to_string(q) + " = " + std::to_string(hc[t]) + " / " +
                std::to_string(hs[t]) + "; cone " + detail::dims_str(hc, rep.window_lo) +
                ", small " + detail::dims_str(hs, rep.window_lo),
            std::move(w));
    } catch (const DataError& e) {
      r.add("quasi-iso", name, Verdict::Fail, "construction failed", {e.what()});
    }
  }
  if (b.fibres.empty()) r.notes.push_back("bundle has no fibres; nothing to compare");
  return r;
}

/// `params` are key=value strings: ngon n=, q=; smooth-ec a_v=, q=; zeta-fqt q=.
inline bundle::InstanceBundle cmd_example(const std::string& name,
                                          const std::vector<std::string>& params) {
  std::map<std::string, long> kv;
  for (const auto& s : params) {
    const auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0)
      throw ContractError("example parameter \"" + s + "\" is not key=value");
    const std::string key = s.substr(0, eq), val = s.substr(eq + 1);
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(val, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != val.size() || val.empty())
      throw ContractError("example parameter " + key + " needs an integer value");
    kv[key] = v;
  }
  auto take = [&](const char* key, long def) {
    auto it = kv.find(key);
    if (it == kv.end()) return def;
    long v = it->second;
    kv.erase(it);
    return v;
  };
  bundle::InstanceBundle b;
  if (name == "ngon") {
    const long n = take("n", 3), q = take("q", 5);
    b = bundle::example_ngon(static_cast<int>(n), q);
  } else if (name == "smooth-ec") {
    const long a = take("a_v", 1), q = take("q", 5);
    b = bundle::example_smooth_ec(a, q);
  } else if (name == "zeta-fqt") {
    const long q = take("q", 2);
    b = bundle::example_zeta_fqt(q);
  } else {
    throw ContractError("unknown example \"" + name + "\"; expected ngon, smooth-ec or zeta-fqt");
  }
  if (!kv.empty())
    throw ContractError("unknown parameter \"" + kv.begin()->first + "\" for example " + name);
  return b;
}

}  // namespace degen::workbench

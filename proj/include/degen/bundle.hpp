#pragma once

// Instance bundles: the JSON file format read and written by the CLI, and the
// builtin worked examples.
//
// Top-level keys: params, fibres, places, motivic, global, integral. Every
// matrix is a row-major array of rows, each row an array of strings "p/q".
// Unknown keys are rejected in strict mode.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "degen/deligne.hpp"
#include "degen/error.hpp"
#include "degen/lfun.hpp"
#include "degen/qlinalg.hpp"
#include "degen/strata.hpp"
#include "json.hpp"

namespace degen::bundle {

using json = nlohmann::ordered_json;

struct Params {
  int q_cohomological = 0;
  int a = 0;
  std::int64_t field_q = 0;
  friend bool operator==(const Params&, const Params&) = default;
};

struct MotivicFibre {
  std::optional<std::size_t> higher_chow_dim;
  std::optional<RatMatrix> regulator;
  std::optional<RatMatrix> xi;
  std::optional<RatMatrix> tau;
  friend bool operator==(const MotivicFibre&, const MotivicFibre&) = default;
};

struct Motivic {
  std::size_t rank = 0;                 // generators of the motivic group
  std::optional<std::size_t> b_rank;    // dim B^a
  std::optional<long> generic_rank;     // dim CH^{q-a}(X, q-2a), when finite
  std::map<std::string, MotivicFibre> fibres;
  friend bool operator==(const Motivic&, const Motivic&) = default;
};

struct GlobalL {
  lfun::RatFunc z;
  long weight = 0;
  long conductor_exponent = 0;
  friend bool operator==(const GlobalL&, const GlobalL&) = default;
};

struct InstanceBundle {
  std::optional<Params> params;
  std::map<std::string, strata::FibreDescriptor> fibres;
  std::map<std::string, lfun::PlaceDatum> places;
  std::optional<Motivic> motivic;
  std::optional<GlobalL> global;
  std::optional<AbMap> integral;

  friend bool operator==(const InstanceBundle&, const InstanceBundle&) = default;

  lfun::CompletedL completed() const {
    if (!global) throw ContractError("bundle has no global L-function");
    if (!params) throw ContractError("bundle has no params");
    return {global->z, params->field_q, global->weight, global->conductor_exponent};
  }
};

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace detail {

class Reader {
 public:
  explicit Reader(bool strict) : strict_(strict) {}

  [[noreturn]] void fail(const std::string& path, const std::string& msg) const {
    throw ParseError((path.empty() ? std::string("<root>") : path) + ": " + msg);
  }

  void keys(const json& j, const std::string& path, std::initializer_list<const char*> allowed,
            std::initializer_list<const char*> required = {}) {
    if (!j.is_object()) fail(path, "expected an object");
    for (auto it = j.begin(); it != j.end(); ++it) {
      bool ok = false;
      for (const char* k : allowed) ok = ok || it.key() == k;
      if (!ok) {
        if (strict_) fail(path, "unknown key \"" + it.key() + "\"");
        warnings.push_back(path + ": ignoring unknown key \"" + it.key() + "\"");
      }
    }
    for (const char* k : required)
      if (!j.contains(k)) fail(path, std::string("missing key \"") + k + "\"");
  }

  long integer(const json& j, const std::string& path) const {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<long>();
  }
  std::size_t count(const json& j, const std::string& path) const {
    const long v = integer(j, path);
    if (v < 0) fail(path, "expected a nonnegative integer");
    return static_cast<std::size_t>(v);
  }
  bool boolean(const json& j, const std::string& path) const {
    if (!j.is_boolean()) fail(path, "expected true or false");
    return j.get<bool>();
  }

  Rational rational(const json& j, const std::string& path) const {
    if (!j.is_string()) fail(path, "expected a rational as a string \"p/q\"");
    const std::string s = j.get<std::string>();
    Rational r;
    bool good = !s.empty() && s.find_first_not_of("0123456789-+/") == std::string::npos;
    if (good) {
      try {
        r = Rational(s, 10);
        if (r.get_den() == 0) good = false;
      } catch (const std::invalid_argument&) {
        good = false;
      }
    }
    if (!good) fail(path, "\"" + s + "\" is not a rational number");
    r.canonicalize();
    return r;
  }

  Integer integer_string(const json& j, const std::string& path) const {
    const Rational r = rational(j, path);
    if (r.get_den() != 1) fail(path, "expected an integer string");
    return r.get_num();
  }

  /// Row-major matrix; `cols_if_empty` fixes the shape of a matrix with no rows.
  RatMatrix matrix(const json& j, const std::string& path, std::size_t cols_if_empty = 0) const {
    if (!j.is_array()) fail(path, "expected an array of rows");
    std::vector<std::vector<Rational>> rows;
    for (std::size_t i = 0; i < j.size(); ++i) {
      const std::string rp = path + "[" + std::to_string(i) + "]";
      if (!j[i].is_array()) fail(rp, "expected a row array");
      std::vector<Rational> row;
      for (std::size_t c = 0; c < j[i].size(); ++c)
        row.push_back(rational(j[i][c], rp + "[" + std::to_string(c) + "]"));
      if (!rows.empty() && row.size() != rows.front().size())
        fail(rp, "ragged matrix: row has " + std::to_string(row.size()) + " entries, expected " +
                     std::to_string(rows.front().size()));
      rows.push_back(std::move(row));
    }
    return RatMatrix::from_rows(rows, cols_if_empty);
  }

  IntMatrix int_matrix(const json& j, const std::string& path, std::size_t cols_if_empty = 0) const {
    RatMatrix m = matrix(j, path, cols_if_empty);
    auto z = to_integer(m);
    if (!z) fail(path, "expected integer entries");
    return *z;
  }

  std::vector<Rational> rational_list(const json& j, const std::string& path) const {
    if (!j.is_array()) fail(path, "expected an array of coefficient strings");
    std::vector<Rational> v;
    for (std::size_t i = 0; i < j.size(); ++i)
      v.push_back(rational(j[i], path + "[" + std::to_string(i) + "]"));
    return v;
  }

  strata::StratumIndex stratum(const json& j, const std::string& path) const {
    if (!j.is_array() || j.empty()) fail(path, "expected a nonempty array of component indices");
    strata::StratumIndex s;
    for (std::size_t i = 0; i < j.size(); ++i) {
      const long v = integer(j[i], path + "[" + std::to_string(i) + "]");
      if (!s.members.empty() && v <= s.members.back())
        fail(path, "component indices must be strictly increasing");
      s.members.push_back(static_cast<int>(v));
    }
    return s;
  }

  std::vector<std::string> warnings;

 private:
  bool strict_;
};

inline FPAbelianGroup parse_group(Reader& rd, const json& j, const std::string& path) {
  rd.keys(j, path, {"generators", "relations"}, {"generators", "relations"});
  const std::size_t g = rd.count(j["generators"], path + ".generators");
  IntMatrix rel = rd.int_matrix(j["relations"], path + ".relations");
  if (g == 0 && rel.rows() == 0) rel = IntMatrix(0, 0);
  if (rel.rows() != g)
    rd.fail(path + ".relations", "has " + std::to_string(rel.rows()) + " rows for " +
                                     std::to_string(g) + " generators");
  return {g, std::move(rel)};
}

inline strata::FibreDescriptor parse_fibre(Reader& rd, const json& j, const std::string& path) {
  rd.keys(j, path,
          {"components", "dim", "q_v", "strata", "chow", "pushforward", "pullback", "ii",
           "compose_ii"},
          {"components", "dim", "q_v", "strata"});
  strata::FibreDescriptor f;
  f.components = static_cast<int>(rd.count(j["components"], path + ".components"));
  f.dim = static_cast<int>(rd.count(j["dim"], path + ".dim"));
  f.q_v = rd.integer(j["q_v"], path + ".q_v");
  if (!strata::is_prime_power(f.q_v)) rd.fail(path + ".q_v", "not a prime power");
  const json& st = j["strata"];
  if (!st.is_array()) rd.fail(path + ".strata", "expected an array");
  for (std::size_t i = 0; i < st.size(); ++i) {
    const std::string sp = path + ".strata[" + std::to_string(i) + "]";
    if (!f.strata.insert(rd.stratum(st[i], sp)).second) rd.fail(sp, "duplicate stratum");
  }
  auto stratum_of = [&](const json& e, const std::string& ep) {
    strata::StratumIndex s = rd.stratum(e["stratum"], ep + ".stratum");
    if (!f.strata.count(s)) rd.fail(ep + ".stratum", s.str() + " is not a listed stratum");
    return s;
  };

  if (j.contains("chow")) {
    const json& ch = j["chow"];
    if (!ch.is_array()) rd.fail(path + ".chow", "expected an array");
    for (std::size_t i = 0; i < ch.size(); ++i) {
      const std::string ep = path + ".chow[" + std::to_string(i) + "]";
      rd.keys(ch[i], ep, {"stratum", "codim", "higher", "dim", "integral"},
              {"stratum", "codim", "dim"});
      strata::ChowKey key{stratum_of(ch[i], ep), static_cast<int>(rd.integer(ch[i]["codim"], ep + ".codim")),
                          ch[i].contains("higher")
                              ? static_cast<int>(rd.count(ch[i]["higher"], ep + ".higher"))
                              : 0};
      if (f.chow.count(key)) rd.fail(ep, "duplicate Chow entry");
      const std::size_t d = rd.count(ch[i]["dim"], ep + ".dim");
      if (d > 0) f.chow[key] = d;
      if (ch[i].contains("integral")) {
        FPAbelianGroup g = parse_group(rd, ch[i]["integral"], ep + ".integral");
        if (g.generators != d) rd.fail(ep + ".integral", "generator count differs from dim");
        f.chow_integral[key] = std::move(g);
      }
    }
  }

  auto parse_maps = [&](const char* name, std::map<strata::MapKey, RatMatrix>& out, bool push) {
    if (!j.contains(name)) return;
    const json& arr = j[name];
    const std::string ap = path + "." + name;
    if (!arr.is_array()) rd.fail(ap, "expected an array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string ep = ap + "[" + std::to_string(i) + "]";
      rd.keys(arr[i], ep, {"stratum", "position", "codim", "higher", "matrix"},
              {"stratum", "position", "codim", "matrix"});
      strata::MapKey key;
      key.stratum = stratum_of(arr[i], ep);
      key.position = static_cast<int>(rd.integer(arr[i]["position"], ep + ".position"));
      key.codim = static_cast<int>(rd.integer(arr[i]["codim"], ep + ".codim"));
      key.higher = arr[i].contains("higher")
                       ? static_cast<int>(rd.count(arr[i]["higher"], ep + ".higher"))
                       : 0;
      if (key.stratum.size() < 2) rd.fail(ep + ".stratum", "needs at least two components");
      if (key.position < 1 || key.position > static_cast<int>(key.stratum.size()))
        rd.fail(ep + ".position", "out of range for " + key.stratum.str());
      const auto small = key.stratum.drop(static_cast<std::size_t>(key.position));
      const std::size_t cols = push ? f.chow_dim(key.stratum, key.codim, key.higher)
                                    : f.chow_dim(small, key.codim, key.higher);
      if (out.count(key)) rd.fail(ep, "duplicate block");
      out[key] = rd.matrix(arr[i]["matrix"], ep + ".matrix", cols);
    }
  };
  parse_maps("pushforward", f.pushforward, true);
  parse_maps("pullback", f.pullback, false);

  if (j.contains("ii")) {
    const json& arr = j["ii"];
    if (!arr.is_array()) rd.fail(path + ".ii", "expected an array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string ep = path + ".ii[" + std::to_string(i) + "]";
      rd.keys(arr[i], ep, {"codim", "matrix"}, {"codim", "matrix"});
      const int c = static_cast<int>(rd.integer(arr[i]["codim"], ep + ".codim"));
      if (f.ii.count(c)) rd.fail(ep, "duplicate codim");
      f.ii[c] = rd.matrix(arr[i]["matrix"], ep + ".matrix",
                          strata::build_level(f, 1, c, 0).total);
    }
  }
  if (j.contains("compose_ii")) f.compose_ii = rd.boolean(j["compose_ii"], path + ".compose_ii");
  return f;
}

inline bool is_power_of(std::int64_t x, std::int64_t base, std::size_t exponent) {
  Integer p = 1;
  for (std::size_t i = 0; i < exponent; ++i) p *= base;
  return p == x;
}

}  // namespace detail

struct ParseResult {
  InstanceBundle bundle;
  std::vector<std::string> warnings;
};

inline ParseResult parse_bundle(const std::string& text, bool strict = true) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  detail::Reader rd(strict);
  rd.keys(j, "", {"params", "fibres", "places", "motivic", "global", "integral"});
  InstanceBundle b;

  if (j.contains("params")) {
    const json& p = j["params"];
    rd.keys(p, "params", {"q_cohomological", "a", "field_q"}, {"q_cohomological", "a", "field_q"});
    Params ps;
    ps.q_cohomological = static_cast<int>(rd.integer(p["q_cohomological"], "params.q_cohomological"));
    ps.a = static_cast<int>(rd.integer(p["a"], "params.a"));
    ps.field_q = rd.integer(p["field_q"], "params.field_q");
    if (!strata::is_prime_power(ps.field_q)) rd.fail("params.field_q", "not a prime power");
    b.params = ps;
  }

  if (j.contains("fibres")) {
    const json& fs = j["fibres"];
    if (!fs.is_object()) rd.fail("fibres", "expected an object keyed by place name");
    for (auto it = fs.begin(); it != fs.end(); ++it)
      b.fibres[it.key()] = detail::parse_fibre(rd, it.value(), "fibres." + it.key());
  }

  if (j.contains("places")) {
    const json& ps = j["places"];
    if (!ps.is_object()) rd.fail("places", "expected an object keyed by fibre name");
    for (auto it = ps.begin(); it != ps.end(); ++it) {
      const std::string path = "places." + it.key();
      if (!b.fibres.count(it.key())) rd.fail(path, "no fibre named \"" + it.key() + "\"");
      rd.keys(it.value(), path, {"deg", "frob"}, {"deg", "frob"});
      lfun::PlaceDatum pd;
      pd.label = it.key();
      pd.deg = rd.count(it.value()["deg"], path + ".deg");
      if (pd.deg == 0) rd.fail(path + ".deg", "degree must be positive");
      pd.frob = rd.matrix(it.value()["frob"], path + ".frob");
      if (pd.frob.rows() != pd.frob.cols()) rd.fail(path + ".frob", "must be square");
      if (b.params && !detail::is_power_of(b.fibres[it.key()].q_v, b.params->field_q, pd.deg))
        rd.fail(path + ".deg", "q_v = " + std::to_string(b.fibres[it.key()].q_v) + " is not " +
                                   std::to_string(b.params->field_q) + "^" +
                                   std::to_string(pd.deg));
      b.places[it.key()] = std::move(pd);
    }
  }

  if (j.contains("motivic")) {
    const json& m = j["motivic"];
    rd.keys(m, "motivic", {"rank", "b_rank", "generic_rank", "fibres"}, {"rank"});
    Motivic mo;
    mo.rank = rd.count(m["rank"], "motivic.rank");
    if (m.contains("b_rank")) mo.b_rank = rd.count(m["b_rank"], "motivic.b_rank");
    if (m.contains("generic_rank"))
      mo.generic_rank = static_cast<long>(rd.count(m["generic_rank"], "motivic.generic_rank"));
    if (m.contains("fibres")) {
      const json& mf = m["fibres"];
      if (!mf.is_object()) rd.fail("motivic.fibres", "expected an object");
      for (auto it = mf.begin(); it != mf.end(); ++it) {
        const std::string path = "motivic.fibres." + it.key();
        if (!b.fibres.count(it.key())) rd.fail(path, "no fibre named \"" + it.key() + "\"");
        rd.keys(it.value(), path, {"higher_chow_dim", "regulator", "xi", "tau"});
        MotivicFibre f;
        const json& v = it.value();
        if (v.contains("higher_chow_dim"))
          f.higher_chow_dim = rd.count(v["higher_chow_dim"], path + ".higher_chow_dim");
        if (v.contains("regulator"))
          f.regulator = rd.matrix(v["regulator"], path + ".regulator", mo.rank);
        if (v.contains("xi")) f.xi = rd.matrix(v["xi"], path + ".xi", mo.b_rank.value_or(0));
        if (v.contains("tau")) {
          // tau's columns are CH^a(Y^(1)) coordinates
          std::size_t cols = 0;
          if (b.params)
            cols = strata::build_level(b.fibres[it.key()], 1, b.params->a, 0).total;
          f.tau = rd.matrix(v["tau"], path + ".tau", cols);
        }
        if (f.xi.has_value() != f.tau.has_value())
          rd.fail(path, "xi and tau must be given together");
        if (f.xi && !mo.b_rank) rd.fail(path + ".xi", "needs motivic.b_rank");
        mo.fibres[it.key()] = std::move(f);
      }
    }
    b.motivic = std::move(mo);
  }

  if (j.contains("global")) {
    const json& g = j["global"];
    rd.keys(g, "global", {"z", "weight", "conductor_exponent"}, {"z", "weight"});
    rd.keys(g["z"], "global.z", {"num", "den"}, {"num", "den"});
    lfun::Poly num(rd.rational_list(g["z"]["num"], "global.z.num"));
    lfun::Poly den(rd.rational_list(g["z"]["den"], "global.z.den"));
    if (den.is_zero()) rd.fail("global.z.den", "zero denominator");
    GlobalL gl;
    gl.z = lfun::RatFunc(num, den);
    gl.weight = rd.integer(g["weight"], "global.weight");
    if (g.contains("conductor_exponent"))
      gl.conductor_exponent = rd.integer(g["conductor_exponent"], "global.conductor_exponent");
    if (!b.params) rd.fail("global", "needs params.field_q");
    b.global = std::move(gl);
  }

  if (j.contains("integral")) {
    const json& in = j["integral"];
    rd.keys(in, "integral", {"source", "target", "matrix"}, {"source", "target", "matrix"});
    AbMap f;
    f.source = detail::parse_group(rd, in["source"], "integral.source");
    f.target = detail::parse_group(rd, in["target"], "integral.target");
    f.matrix = rd.int_matrix(in["matrix"], "integral.matrix", f.source.generators);
    if (f.matrix.rows() != f.target.generators || f.matrix.cols() != f.source.generators)
      rd.fail("integral.matrix", "is " + f.matrix.shape() + ", expected " +
                                     std::to_string(f.target.generators) + "x" +
                                     std::to_string(f.source.generators));
    if (!well_formed(f))
      rd.fail("integral.matrix", "does not carry source relations into target relations");
    b.integral = std::move(f);
  }
  return {std::move(b), std::move(rd.warnings)};
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

namespace detail {
template <class T>
json matrix_json(const Matrix<T>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json group_json(const FPAbelianGroup& g) {
  return json{{"generators", g.generators}, {"relations", matrix_json(g.relations)}};
}

inline json poly_json(const lfun::Poly& p) {
  json a = json::array();
  if (p.is_zero()) a.push_back("0");
  for (const auto& c : p.coeffs()) a.push_back(c.get_str());
  return a;
}

inline json fibre_json(const strata::FibreDescriptor& f) {
  json j;
  j["components"] = f.components;
  j["dim"] = f.dim;
  j["q_v"] = f.q_v;
  json st = json::array();
  for (const auto& s : f.strata) st.push_back(s.members);
  j["strata"] = st;
  json ch = json::array();
  for (const auto& [k, d] : f.chow) {
    json e{{"stratum", k.stratum.members}, {"codim", k.codim}, {"higher", k.higher}, {"dim", d}};
    if (auto it = f.chow_integral.find(k); it != f.chow_integral.end())
      e["integral"] = group_json(it->second);
    ch.push_back(std::move(e));
  }
  j["chow"] = ch;
  auto maps = [](const std::map<strata::MapKey, RatMatrix>& m) {
    json a = json::array();
    for (const auto& [k, mat] : m)
      a.push_back(json{{"stratum", k.stratum.members},
                       {"position", k.position},
                       {"codim", k.codim},
                       {"higher", k.higher},
                       {"matrix", matrix_json(mat)}});
    return a;
  };
  j["pushforward"] = maps(f.pushforward);
  j["pullback"] = maps(f.pullback);
  if (!f.ii.empty()) {
    json a = json::array();
    for (const auto& [c, m] : f.ii) a.push_back(json{{"codim", c}, {"matrix", matrix_json(m)}});
    j["ii"] = a;
  }
  j["compose_ii"] = f.compose_ii;
  return j;
}
}  // namespace detail

inline std::string serialize_bundle(const InstanceBundle& b) {
  json j = json::object();
  if (b.params)
    j["params"] = json{{"q_cohomological", b.params->q_cohomological},
                       {"a", b.params->a},
                       {"field_q", b.params->field_q}};
  json fs = json::object();
  for (const auto& [name, f] : b.fibres) fs[name] = detail::fibre_json(f);
  j["fibres"] = fs;
  json ps = json::object();
  for (const auto& [name, p] : b.places)
    ps[name] = json{{"deg", p.deg}, {"frob", detail::matrix_json(p.frob)}};
  j["places"] = ps;
  if (b.motivic) {
    json m;
    m["rank"] = b.motivic->rank;
    if (b.motivic->b_rank) m["b_rank"] = *b.motivic->b_rank;
    if (b.motivic->generic_rank) m["generic_rank"] = *b.motivic->generic_rank;
    json mf = json::object();
    for (const auto& [name, f] : b.motivic->fibres) {
      json e = json::object();
      if (f.higher_chow_dim) e["higher_chow_dim"] = *f.higher_chow_dim;
      if (f.regulator) e["regulator"] = detail::matrix_json(*f.regulator);
      if (f.xi) e["xi"] = detail::matrix_json(*f.xi);
      if (f.tau) e["tau"] = detail::matrix_json(*f.tau);
      mf[name] = std::move(e);
    }
    m["fibres"] = mf;
    j["motivic"] = m;
  }
  if (b.global)
    j["global"] = json{{"z", json{{"num", detail::poly_json(b.global->z.num())},
                                  {"den", detail::poly_json(b.global->z.den())}}},
                       {"weight", b.global->weight},
                       {"conductor_exponent", b.global->conductor_exponent}};
  if (b.integral)
    j["integral"] = json{{"source", detail::group_json(b.integral->source)},
                         {"target", detail::group_json(b.integral->target)},
                         {"matrix", detail::matrix_json(b.integral->matrix)}};
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Builtin examples
// ---------------------------------------------------------------------------

/// Tate curve with split multiplicative reduction at one place, fibre a
/// cycle of n rational curves; H^3 with twist 2 (q = 3, a = 1).
inline InstanceBundle example_ngon(int n, std::int64_t q) {
  if (!strata::is_prime_power(q)) throw ContractError("q must be a prime power");
  InstanceBundle b;
  b.params = Params{3, 1, q};
  b.fibres["v"] = strata::generator_ngon(n, q);
  b.places["v"] = lfun::PlaceDatum{1, RatMatrix{{Rational(q)}}, "v"};
  Motivic m;
  m.rank = 0;
  m.b_rank = 1;
  MotivicFibre mf;
  const auto un = static_cast<std::size_t>(n);
  mf.regulator = RatMatrix(un, 0);
  RatMatrix xi(un, 1);
  xi(0, 0) = 1;  // class of a point on the first component
  mf.xi = xi;
  mf.tau = RatMatrix::identity(un);
  m.fibres["v"] = mf;
  b.motivic = m;
  // e2-e1, ..., en-e(n-1) from the nodes, then the degree generator e1
  AbMap f;
  f.source = FPAbelianGroup::free(un);
  f.target = FPAbelianGroup::free(un);
  f.matrix = IntMatrix(un, un);
  for (std::size_t c = 0; c + 1 < un; ++c) {
    f.matrix(c, c) = -1;
    f.matrix(c + 1, c) = 1;
  }
  f.matrix(0, un - 1) = 1;
  b.integral = f;
  return b;
}

/// Elliptic curve with good reduction at one place, trace of Frobenius a_v;
/// H^2 with twist 2 (q = 2, a = 0), higher Chow group of the fibre zero.
inline InstanceBundle example_smooth_ec(long a_v, std::int64_t q) {
  if (!strata::is_prime_power(q)) throw ContractError("q must be a prime power");
  if (Integer(a_v) * a_v > Integer(4) * q)
    throw ContractError("a_v = " + std::to_string(a_v) + " violates a_v^2 <= 4q");
  InstanceBundle b;
  b.params = Params{2, 0, q};
  b.fibres["v"] = strata::generator_smooth({{{0, 0}, 1}, {{1, 0}, 1}}, 1, q);
  // companion matrix of x^2 - a_v x + q
  b.places["v"] = lfun::PlaceDatum{1, RatMatrix{{0, Rational(-q)}, {1, Rational(a_v)}}, "v"};
  Motivic m;
  m.rank = 0;
  MotivicFibre mf;
  mf.higher_chow_dim = 0;
  mf.regulator = RatMatrix(0, 0);
  m.fibres["v"] = mf;
  b.motivic = m;
  return b;
}

/// K_1 of the rational function field F_q(T), S = {infinity}: q = 1, a = 0.
inline InstanceBundle example_zeta_fqt(std::int64_t q) {
  if (!strata::is_prime_power(q)) throw ContractError("q must be a prime power");
  InstanceBundle b;
  b.params = Params{1, 0, q};
  b.fibres["inf"] = strata::generator_smooth({{{0, 0}, 1}}, 0, q);
  b.places["inf"] = lfun::PlaceDatum{1, RatMatrix{{1}}, "inf"};
  Motivic m;
  m.rank = 0;
  m.b_rank = 1;
  MotivicFibre mf;
  mf.regulator = RatMatrix(1, 0);
  mf.xi = RatMatrix{{1}};
  mf.tau = RatMatrix{{1}};
  m.fibres["inf"] = mf;
  b.motivic = m;
  const lfun::CompletedL z = lfun::zeta_rational_function_field(q);
  b.global = GlobalL{z.z, z.weight, z.conductor_exponent};
  // units F_q^* (order q-1) plus the degree class, onto CH^0 of the fibre
  AbMap f;
  f.source = FPAbelianGroup(2, IntMatrix{{Integer(q - 1)}, {0}});
  f.target = FPAbelianGroup::free(1);
  f.matrix = IntMatrix{{0, 1}};
  b.integral = f;
  return b;
}

}  // namespace degen::bundle

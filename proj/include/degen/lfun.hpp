#pragma once

// L-function arithmetic over a finite field F_q.
//
// All functions of s are written in the single variable t = q^{-s}; a place of
// degree d contributes t^d. Local factors, completed and S-incomplete
// products are then exact rational functions in t, and leading Laurent
// coefficients at integer points s = a live in Q * (log q)^Z.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "degen/error.hpp"
#include "degen/qlinalg.hpp"

namespace degen::lfun {

/// Dense univariate polynomial over Q, coefficients from degree 0 upwards.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Rational> c) : c_(c) { trim(); }
  explicit Poly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }
  static Poly constant(const Rational& x) { return Poly(std::vector<Rational>{x}); }
  static Poly monomial(const Rational& x, std::size_t deg) {
    std::vector<Rational> c(deg + 1);
    c[deg] = x;
    return Poly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& lead() const { return c_.back(); }

  Rational operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend bool operator==(const Poly&, const Poly&) = default;

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return Poly(std::move(c));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(c));
  }
  friend Poly operator*(const Rational& s, const Poly& a) {
    return Poly::constant(s) * a;
  }

  /// Quotient and remainder; divisor must be nonzero.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw ContractError("polynomial division by zero");
    std::vector<Rational> r = a.c_;
    if (a.degree() < b.degree()) return {Poly{}, a};
    std::vector<Rational> q(a.c_.size() - b.c_.size() + 1);
    for (long k = static_cast<long>(q.size()) - 1; k >= 0; --k) {
      const Rational f = r[k + b.c_.size() - 1] / b.lead();
      q[k] = f;
      if (f == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[k + j] -= f * b.c_[j];
    }
    return {Poly(std::move(q)), Poly(std::move(r))};
  }

  /// p(t^d)
  Poly substitute_power(std::size_t d) const {
    if (d == 0) return Poly::constant((*this)(Rational(1)));
    std::vector<Rational> c(c_.empty() ? 0 : (c_.size() - 1) * d + 1);
    for (std::size_t i = 0; i < c_.size(); ++i) c[i * d] = c_[i];
    return Poly(std::move(c));
  }

  /// t^deg * p(s/t), i.e. coefficient i becomes s^i at position deg-i.
  Poly reciprocal_scaled(const Rational& s) const {
    std::vector<Rational> c(c_.size());
    Rational pw = 1;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      c[c_.size() - 1 - i] = c_[i] * pw;
      pw *= s;
    }
    return Poly(std::move(c));
  }

  Poly monic() const { return is_zero() ? *this : (1 / lead()) * *this; }

  std::string str(const std::string& var = "t") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

inline Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

inline std::string Poly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string s;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Rational mag = abs(c_[i]);
    if (first) {
      if (c_[i] < 0) s += "-";
    } else {
      s += c_[i] < 0 ? " - " : " + ";
    }
    first = false;
    if (i == 0) {
      s += mag.get_str();
    } else {
      if (mag != 1) s += mag.get_str() + "*";
      s += var;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

/// Multiplicity of `root` as a zero of p (p nonzero).
inline std::size_t root_multiplicity(Poly p, const Rational& root) {
  if (p.is_zero()) throw ContractError("multiplicity of a root of the zero polynomial");
  const Poly lin{-root, Rational(1)};
  std::size_t m = 0;
  for (;;) {
    auto [q, r] = divmod(p, lin);
    if (!r.is_zero()) return m;
    p = std::move(q);
    ++m;
  }
}

/// Exact rational function in t, stored reduced with a monic denominator.
class RatFunc {
 public:
  RatFunc() : num_(Poly::constant(0)), den_(Poly::constant(1)) {}
  RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(1)) {}  // NOLINT
  RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }
  static RatFunc constant(const Rational& x) { return RatFunc(Poly::constant(x)); }
  /// t^e for any integer e.
  static RatFunc t_power(long e) {
    if (e >= 0) return RatFunc(Poly::monomial(1, static_cast<std::size_t>(e)));
    return RatFunc(Poly::constant(1), Poly::monomial(1, static_cast<std::size_t>(-e)));
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

  friend bool operator==(const RatFunc&, const RatFunc&) = default;

  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw ContractError("division by the zero rational function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }

  /// Value at a point that is not a pole.
  Rational operator()(const Rational& x) const {
    const Rational d = den_(x);
    if (d == 0) throw ContractError("evaluation at a pole");
    return num_(x) / d;
  }

  /// f(c / t) as a rational function in t.
  RatFunc substitute_reciprocal(const Rational& c) const {
    // p(c/t) = t^{-deg p} * P~(t) with P~ = reciprocal_scaled(c)
    const long dn = num_.degree(), dd = den_.degree();
    if (num_.is_zero()) return *this;
    return RatFunc(num_.reciprocal_scaled(c), den_.reciprocal_scaled(c)) *
           t_power(dd - dn);
  }

  /// Printed with the denominator's constant term scaled to 1 when possible,
  /// which is how Euler factors are usually written.
  std::string str() const {
    if (den_.degree() == 0) return num_.str();
    const Rational c0 = den_.coeff(0);
    const Rational s = c0 == 0 ? Rational(1) : Rational(1 / c0);
    return "(" + (s * num_).str() + ")/(" + (s * den_).str() + ")";
  }

 private:
  void normalize() {
    if (den_.is_zero()) throw ContractError("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = Poly::constant(1);
      return;
    }
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
    const Rational l = den_.lead();
    num_ = (1 / l) * num_;
    den_ = (1 / l) * den_;
  }

  Poly num_;
  Poly den_;
};

// ---------------------------------------------------------------------------

/// Frobenius data at one place. `frob` is the matrix of F^* on the inertia
/// invariants of the relevant cohomology group; N(v) = q^deg.
struct PlaceDatum {
  std::size_t deg = 1;
  RatMatrix frob;
  std::string label;

  friend bool operator==(const PlaceDatum&, const PlaceDatum&) = default;
};

/// Exact leading term coeff * (log q)^logpow * (s - a)^order.
struct LeadingValue {
  long order = 0;
  Rational coeff;
  long logpow = 0;

  friend bool operator==(const LeadingValue&, const LeadingValue&) = default;

  std::string str(std::int64_t field_q) const {
    std::string s = coeff.get_str();
    if (logpow != 0)
      s += " * log(" + std::to_string(field_q) + ")^" + std::to_string(logpow);
    return s;
  }
};

/// Completed L-function. The conductor is a monomial q^{c s} = t^{-c}.
struct CompletedL {
  RatFunc z;
  std::int64_t field_q = 0;
  long weight = 0;
  long conductor_exponent = 0;

  RatFunc as_function() const { return t_power_factor() * z; }
  RatFunc t_power_factor() const { return RatFunc::t_power(-conductor_exponent); }

  friend bool operator==(const CompletedL&, const CompletedL&) = default;
};

struct FunctionalEquation {
  int sign = 1;
  long alpha = 0;  // power of q
  long beta = 0;   // power of t

  friend bool operator==(const FunctionalEquation&, const FunctionalEquation&) = default;
};

/// det(I - x M) via the Faddeev-LeVerrier recurrence on the characteristic
/// polynomial, returned as a polynomial in x.
inline Poly det_one_minus(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("Frobenius matrix must be square");
  const std::size_t n = m.rows();
  // charpoly det(lambda I - M) = sum c_k lambda^k, c_n = 1
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  RatMatrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    RatMatrix next = m * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = std::move(next);
    RatMatrix am = m * mk;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / static_cast<long>(k);
  }
  // det(I - xM) = x^n charpoly(1/x): reverse the coefficients
  std::vector<Rational> r(n + 1);
  for (std::size_t k = 0; k <= n; ++k) r[n - k] = c[k];
  return Poly(std::move(r));
}

/// 1 / det(I - F t^deg).
inline RatFunc local_factor(const PlaceDatum& p) {
  return RatFunc(Poly::constant(1), det_one_minus(p.frob).substitute_power(p.deg));
}

inline RatFunc product_over_places(const std::vector<PlaceDatum>& places) {
  RatFunc acc = RatFunc::constant(1);
  for (const auto& p : places) acc = acc * local_factor(p);
  return acc;
}

/// Lambda.z divided by the local factors at the places in S.
inline RatFunc strip_S(const CompletedL& lam, const std::vector<PlaceDatum>& places) {
  return lam.z / product_over_places(places);
}

/// q^{-a} for an integer a.
inline Rational evaluation_point(std::int64_t q, long a) {
  if (q < 2) throw ContractError("field size must be at least 2");
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(q),
                static_cast<unsigned long>(a >= 0 ? a : -a));
  return a >= 0 ? Rational(Integer(1), p) : Rational(p);
}

/// Order of f(q^{-s}) at s = a: multiplicity of t0 = q^{-a} in the numerator
/// minus that in the denominator.
inline long ord_at(const RatFunc& f, std::int64_t q, long a) {
  if (f.is_zero()) throw ContractError("order of vanishing of the zero function");
  const Rational t0 = evaluation_point(q, a);
  return static_cast<long>(root_multiplicity(f.num(), t0)) -
         static_cast<long>(root_multiplicity(f.den(), t0));
}

/// Leading Laurent coefficient at s = a. With d = ord and g = f / (t - t0)^d,
/// t - t0 = -t0 log(q) (s - a) + O((s-a)^2), so the leading term is
/// g(t0) (-t0)^d (log q)^d (s - a)^d.
inline LeadingValue leading_laurent(const RatFunc& f, std::int64_t q, long a) {
  const long d = ord_at(f, q, a);
  const Rational t0 = evaluation_point(q, a);
  const Poly lin{-t0, Rational(1)};
  Poly num = f.num(), den = f.den();
  for (long i = 0; i < d; ++i) num = divmod(num, lin).first;
  for (long i = 0; i < -d; ++i) den = divmod(den, lin).first;
  Rational g = num(t0) / den(t0);
  Rational factor = 1;
  const Rational base = -t0;
  for (long i = 0; i < (d >= 0 ? d : -d); ++i) factor *= base;
  LeadingValue lv;
  lv.order = d;
  lv.logpow = d;
  lv.coeff = d >= 0 ? Rational(g * factor) : Rational(g / factor);
  return lv;
}

namespace detail {
// Returns (sign, exponent) with x = sign * q^exponent, if such exist.
inline std::optional<std::pair<int, long>> signed_q_power(Rational x, std::int64_t q) {
  if (x == 0) return std::nullopt;
  int sign = x < 0 ? -1 : 1;
  x = abs(x);
  Integer num = x.get_num(), den = x.get_den();
  const Integer qq(static_cast<long>(q));
  long e = 0;
  while (num % qq == 0) {
    num /= qq;
    ++e;
  }
  while (den % qq == 0) {
    den /= qq;
    --e;
  }
  if (num != 1 || den != 1) return std::nullopt;
  return std::make_pair(sign, e);
}
}  // namespace detail

/// Finds eps, alpha, beta with Lambda(1/(q^w t)) = eps q^alpha t^beta Lambda(t),
/// where Lambda includes the conductor monomial. nullopt if no such monomial
/// relation holds.
inline std::optional<FunctionalEquation> functional_equation(const CompletedL& lam) {
  const RatFunc f = lam.as_function();
  if (f.is_zero()) return std::nullopt;
  // 1/(q^w t) = q^{-w} / t
  const RatFunc ratio =
      f.substitute_reciprocal(evaluation_point(lam.field_q, lam.weight)) / f;
  // ratio must be k * t^beta
  const auto& n = ratio.num();
  const auto& d = ratio.den();
  auto monomial = [](const Poly& p) -> std::optional<long> {
    long nz = -1;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
      if (p.coeffs()[i] != 0) {
        if (nz >= 0) return std::nullopt;
        nz = static_cast<long>(i);
      }
    return nz;
  };
  auto en = monomial(n), ed = monomial(d);
  if (!en || !ed) return std::nullopt;
  const Rational k = n.lead() / d.lead();
  auto sp = detail::signed_q_power(k, lam.field_q);
  if (!sp) return std::nullopt;
  return FunctionalEquation{sp->first, sp->second, *en - *ed};
}

/// Z(t) = 1 / ((1 - t)(1 - q t)) for the rational function field F_q(T).
inline CompletedL zeta_rational_function_field(std::int64_t q) {
  CompletedL lam;
  lam.field_q = q;
  lam.weight = 1;
  const Poly den = Poly{1, -1} * Poly{Rational(1), Rational(-q)};
  lam.z = RatFunc(Poly::constant(1), den);
  return lam;
}

}  // namespace degen::lfun

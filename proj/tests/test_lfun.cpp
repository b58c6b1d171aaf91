#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace degen;
using namespace degen::lfun;

namespace {

bool same(const RatFunc& a, const RatFunc& b) {
  return a.num() * b.den() == b.num() * a.den();
}

RatFunc inv(const Poly& p) { return RatFunc(Poly::constant(1), p); }

// Gaussian elimination over Q.
Rational det(RatMatrix m) {
  const std::size_t n = m.rows();
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      m.swap_rows(p, c);
      d = -d;
    }
    d *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) m.add_row(r, c, Rational(-m(r, c) / m(c, c)));
  }
  return d;
}

PlaceDatum place(RatMatrix frob, std::size_t deg = 1) { return {deg, std::move(frob), "v"}; }

}  // namespace

TEST(Poly, Arithmetic) {
  const Poly a{1, -1};
  const Poly b{Rational(1), Rational(-3)};
  EXPECT_EQ((a * b).coeffs(), (std::vector<Rational>{1, -4, 3}));
  const auto [q, r] = divmod(a * b, a);
  EXPECT_EQ(q, b);
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(root_multiplicity(a * a * b, 1), 2u);
  EXPECT_EQ((Poly{1, 1}.substitute_power(2)), (Poly{1, 0, 1}));
  EXPECT_EQ((a - a).degree(), -1);
}

TEST(RatFunc, PrintsWithUnitConstantTerm) {
  EXPECT_EQ(inv(Poly{Rational(1), Rational(-5)}).str(), "(1)/(1 - 5*t)");
}

TEST(DetOneMinus, Examples) {
  EXPECT_EQ(det_one_minus(RatMatrix(0, 0)), Poly::constant(1));
  EXPECT_EQ(det_one_minus(RatMatrix{{7}}), (Poly{Rational(1), Rational(-7)}));
  EXPECT_EQ(det_one_minus(RatMatrix{{0, -5}, {1, 2}}), (Poly{1, -2, 5}));
  EXPECT_THROW(det_one_minus(RatMatrix(1, 2)), DimensionError);
}

TEST(DetOneMinus, MatchesDeterminantAtPoints) {
  oracle::Rng rng(51);
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = static_cast<std::size_t>(oracle::uniform(rng, 1, 4));
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = oracle::frac(oracle::uniform(rng, -4, 4), oracle::uniform(rng, 1, 3));
    const Poly p = det_one_minus(m);
    for (long x = -2; x <= 3; ++x) {
      const Rational xr = oracle::frac(x, 2);
      EXPECT_EQ(p(xr), det(RatMatrix::identity(n) - xr * m));
    }
  }
}

TEST(LocalFactor, Examples) {
  EXPECT_TRUE(same(local_factor(place(RatMatrix{{1}})), inv(Poly{1, -1})));
  EXPECT_TRUE(same(local_factor(place(RatMatrix(0, 0))), RatFunc::constant(1)));
  EXPECT_TRUE(same(local_factor(place(RatMatrix{{5}})), inv(Poly{Rational(1), Rational(-5)})));
}

TEST(OrdAt, Examples) {
  EXPECT_EQ(ord_at(inv(Poly{1, -1}), 3, 0), -1);
  EXPECT_EQ(ord_at(RatFunc(Poly{1, -1} * Poly{1, -1}), 3, 0), 2);
  EXPECT_EQ(ord_at(zeta_rational_function_field(4).z, 4, 1), -1);
  EXPECT_EQ(ord_at(RatFunc::constant(3), 4, 1), 0);
  EXPECT_THROW(ord_at(RatFunc(), 3, 0), ContractError);
}

TEST(LeadingLaurent, Examples) {
  for (std::int64_t q : {2, 3, 5}) {
    const auto lv = leading_laurent(zeta_rational_function_field(q).z, q, 0);
    EXPECT_EQ(lv.order, -1);
    EXPECT_EQ(lv.coeff, Rational(-1, q - 1));
    EXPECT_EQ(lv.logpow, -1);
  }
  EXPECT_EQ(leading_laurent(RatFunc::constant(5), 3, 2), (LeadingValue{0, 5, 0}));
  EXPECT_EQ(leading_laurent(inv(Poly{1, -1}), 3, 0), (LeadingValue{-1, 1, -1}));
  EXPECT_EQ(leading_laurent(zeta_rational_function_field(3).z, 3, 0).str(3), "-1/2 * log(3)^-1");
}

TEST(LeadingLaurent, MatchesSeriesOracle) {
  oracle::Rng rng(52);
  for (int trial = 0; trial < 50; ++trial) {
    const auto r = oracle::random_rational(rng);
    const auto want = oracle::series_leading(r.num, r.den, r.q, r.a);
    EXPECT_EQ(leading_laurent(RatFunc(r.num, r.den), r.q, r.a), want)
        << RatFunc(r.num, r.den).str() << " q=" << r.q << " a=" << r.a;
  }
}

TEST(ProductOverPlaces, Examples) {
  EXPECT_TRUE(same(product_over_places({}), RatFunc::constant(1)));
  const Poly one_minus_t{1, -1};
  EXPECT_TRUE(same(product_over_places({place(RatMatrix{{1}}), place(RatMatrix{{1}})}),
                   inv(one_minus_t * one_minus_t)));
  EXPECT_TRUE(same(product_over_places({place(RatMatrix{{1}}), place(RatMatrix{{1}}, 2)}),
                   inv(one_minus_t * Poly{1, 0, -1})));
}

TEST(StripS, RoundTrip) {
  const CompletedL lam = zeta_rational_function_field(3);
  EXPECT_TRUE(same(strip_S(lam, {}), lam.z));
  const std::vector<PlaceDatum> s{place(RatMatrix{{1}})};
  EXPECT_TRUE(same(strip_S(lam, s) * product_over_places(s), lam.z));
  EXPECT_TRUE(same(strip_S(lam, s), inv(Poly{Rational(1), Rational(-3)})));
}

TEST(FunctionalEquation, Examples) {
  for (std::int64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49}) {
    const auto fe = functional_equation(zeta_rational_function_field(q));
    ASSERT_TRUE(fe) << q;
    EXPECT_EQ(*fe, (FunctionalEquation{1, 1, 2})) << q;
  }
  CompletedL one{RatFunc::constant(1), 3, 1, 0};
  EXPECT_EQ(*functional_equation(one), (FunctionalEquation{1, 0, 0}));
  CompletedL half{inv(Poly{1, -1}), 3, 1, 0};
  EXPECT_FALSE(functional_equation(half));
}

TEST(FunctionalEquation, ConductorShiftsBeta) {
  // Lambda = t^{-c} Z; substituting t -> q^{-w}/t multiplies by q^{wc} t^{2c}
  CompletedL lam = zeta_rational_function_field(5);
  lam.conductor_exponent = 1;
  const auto fe = functional_equation(lam);
  ASSERT_TRUE(fe);
  EXPECT_EQ(*fe, (FunctionalEquation{1, 2, 4}));
}

TEST(Zeta, StandardForm) {
  EXPECT_TRUE(same(zeta_rational_function_field(2).z,
                   inv(Poly{1, -1} * Poly{Rational(1), Rational(-2)})));
}

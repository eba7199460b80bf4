#include <gtest/gtest.h>

#include "maxclass/counting.hpp"
#include "maxclass/zeta.hpp"

namespace mc = maxclass;
using mc::BigInt;
using mc::BivariatePolynomial;
using mc::BivariateRationalFunction;
using mc::Monomial;
using mc::Rational;

namespace {

Rational rpow(const Rational& x, int e) {
  Rational r = 1;
  for (int i = 0; i < std::abs(e); ++i) r *= x;
  return e >= 0 ? r : Rational(1) / r;
}

Rational evaluate(const BivariatePolynomial& f, const Rational& p, const Rational& t) {
  Rational acc = 0;
  for (const auto& [m, c] : f.terms()) acc += Rational(c) * rpow(p, m.p_exp) * rpow(t, m.t_exp);
  return acc;
}

Rational evaluate(const BivariateRationalFunction& f, const Rational& p, const Rational& t) {
  return evaluate(f.numerator(), p, t) / evaluate(f.denominator(), p, t);
}

// (1-t)^2 / ((1 - p^{n-2} t)(1 - p t)) evaluated directly.
Rational zeta_by_formula(int n, const Rational& p, const Rational& t) {
  const Rational one = 1;
  return (one - t) * (one - t) / ((one - rpow(p, n - 2) * t) * (one - p * t));
}

// Power series of (1-t)^2 / ((1 - a t)(1 - b t)) by convolution.
std::vector<BigInt> series_by_convolution(const BigInt& a, const BigInt& b, unsigned len) {
  std::vector<BigInt> geo(len + 1);
  for (unsigned k = 0; k <= len; ++k) {
    BigInt s = 0;
    for (unsigned i = 0; i <= k; ++i) s += pow(a, i) * pow(b, k - i);
    geo[k] = s;
  }
  std::vector<BigInt> out(len + 1);
  for (unsigned k = 0; k <= len; ++k) {
    out[k] = geo[k] - (k >= 1 ? 2 * geo[k - 1] : BigInt(0)) + (k >= 2 ? geo[k - 2] : BigInt(0));
  }
  return out;
}

const std::vector<std::pair<Rational, Rational>> kSamplePoints = {
    {Rational(3), Rational(1, 7)}, {Rational(5), Rational(2, 11)}, {Rational(7, 2), Rational(-3, 5)},
    {Rational(2), Rational(5, 13)}};

}  // namespace

TEST(Polynomial, ArithmeticAndDivision) {
  const auto a = BivariatePolynomial::one_minus(1, 1);
  const auto b = BivariatePolynomial::constant(1) + BivariatePolynomial::term(1, Monomial::pt(1, 1));
  EXPECT_EQ(a * b, BivariatePolynomial::one_minus(2, 2));
  EXPECT_EQ(*(a * b).divide_exact(a), b);
  EXPECT_FALSE(BivariatePolynomial::one_minus(2, 2).divide_exact(BivariatePolynomial::one_minus(1, 2)));
  const auto laurent = BivariatePolynomial::term(3, Monomial::pt(-2, 1)) - BivariatePolynomial::constant(5);
  EXPECT_EQ(*(laurent * a).divide_exact(laurent), a);
  EXPECT_EQ(laurent.substitute_inverse().substitute_inverse(), laurent);
  EXPECT_EQ(a.pow(3).specialize_p(2), (std::map<int, Rational>{{0, 1}, {1, -6}, {2, 12}, {3, -8}}));
}

TEST(RationalFunction, SumsAndCancellation) {
  using F = BivariateRationalFunction;
  // 1/(1-pt) - pt/(1-pt) = 1
  const F x = F::inverse_of_one_minus(1, 1) -
              F::from_polynomial(BivariatePolynomial::term(1, Monomial::pt(1, 1))) * F::inverse_of_one_minus(1, 1);
  EXPECT_TRUE(x.factors().empty());
  EXPECT_EQ(x.numerator(), BivariatePolynomial::constant(1));
  // 1/(1 - 1/p) is stored with the factor oriented as (1 - p)
  const F y = F::inverse_of_one_minus(-1, 0);
  EXPECT_EQ(y.factors().begin()->first, (mc::DenominatorFactor{1, 0}));
  for (const auto& [p, t] : kSamplePoints) {
    EXPECT_EQ(evaluate(y, p, t), Rational(1) / (Rational(1) - Rational(1) / p));
  }
}

TEST(ZetaClosedForm, Rendering) {
  EXPECT_EQ(mc::to_text(mc::zeta_closed_form(3)), "(1 - t)^2 / ((1 - p t)^2)");
  EXPECT_EQ(mc::to_text(mc::zeta_closed_form(2)), "(1 - t) / ((1 - p t))");
  EXPECT_EQ(mc::to_text(mc::zeta_closed_form(5)), "(1 - t)^2 / ((1 - p^3 t)(1 - p t))");
  EXPECT_EQ(mc::to_text(mc::zeta_closed_form(4)), "(1 - t)^2 / ((1 - p^2 t)(1 - p t))");
}

TEST(ZetaClosedForm, Json) {
  const auto j = mc::to_json(mc::zeta_closed_form(5));
  EXPECT_EQ(j["num"], nlohmann::json::parse(R"([["1",0,0],["-2",0,1],["1",0,2]])"));
  EXPECT_EQ(j["den_factors"], nlohmann::json::parse("[[1,1],[3,1]]"));
  EXPECT_EQ(j["den_monomial"], nlohmann::json::parse("[0,0]"));
  EXPECT_EQ(mc::to_json(mc::zeta_closed_form(3))["den_factors"], nlohmann::json::parse("[[1,1],[1,1]]"));
}

TEST(ZetaClosedForm, MatchesFormulaAtSamplePoints) {
  for (int n = 2; n <= 10; ++n) {
    for (const auto& [p, t] : kSamplePoints) {
      EXPECT_EQ(evaluate(mc::zeta_closed_form(n), p, t), zeta_by_formula(n, p, t)) << "n=" << n;
    }
  }
}

TEST(ZetaClosedForm, TwoGeneratorsCancelsOneFactor) {
  const auto f = mc::zeta_closed_form(2);
  EXPECT_EQ(f.factors().size(), 1u);
  EXPECT_EQ(f.numerator(), BivariatePolynomial::one_minus(0, 1));
}

TEST(GeometricSumForm, EquivalentToClosedForm) {
  for (int n = 2; n <= 10; ++n) {
    const auto g = mc::zeta_geometric_sum_form(n);
    EXPECT_TRUE(mc::equivalent(g, mc::zeta_closed_form(n))) << "n=" << n;
    for (const auto& [p, t] : kSamplePoints) EXPECT_EQ(evaluate(g, p, t), zeta_by_formula(n, p, t));
  }
}

TEST(Series, Examples) {
  EXPECT_EQ(mc::series_coefficients(mc::zeta_closed_form(3), 5, 2), (std::vector<BigInt>{1, 8, 56}));
  EXPECT_EQ(mc::series_coefficients(mc::zeta_closed_form(2), 3, 3), (std::vector<BigInt>{1, 2, 6, 18}));
  EXPECT_EQ(mc::series_coefficients(mc::zeta_closed_form(4), 5, 1), (std::vector<BigInt>{1, 28}));
  EXPECT_THROW((void)mc::series_coefficients(mc::zeta_closed_form(4), 6, 1), std::invalid_argument);
}

TEST(Series, MatchesConvolution) {
  for (int n = 3; n <= 9; ++n) {
    for (std::uint64_t p : {2, 3, 5, 11}) {
      const auto expected = series_by_convolution(mc::detail::big_pow(p, n - 2), BigInt(p), 10);
      EXPECT_EQ(mc::series_coefficients(mc::zeta_closed_form(n), p, 10), expected) << n << " " << p;
    }
  }
}

TEST(Series, RejectsNonPowerSeries) {
  using F = BivariateRationalFunction;
  // 1/(1 - 1/t) = -t/(1 - t) is a power series
  EXPECT_EQ(mc::series_coefficients(F::inverse_of_one_minus(0, -1), 3, 3), (std::vector<BigInt>{0, -1, -1, -1}));
  const F one_over_t = F::from_polynomial(BivariatePolynomial::term(1, Monomial::pt(0, -1)));
  EXPECT_THROW((void)mc::series_coefficients(one_over_t, 3, 4), mc::error);
}

TEST(FunctionalEquation, Examples) {
  const auto f4 = mc::functional_equation_factor(mc::zeta_closed_form(4));
  ASSERT_TRUE(f4);
  EXPECT_EQ(f4->coefficient, 1);
  EXPECT_EQ(f4->monomial, Monomial::pt(3, 0));
  const auto f2 = mc::functional_equation_factor(mc::zeta_closed_form(2));
  ASSERT_TRUE(f2);
  EXPECT_EQ(f2->monomial, Monomial::pt(1, 0));
  for (int n = 2; n <= 10; ++n) EXPECT_TRUE(mc::functional_equation_check(n)) << "n=" << n;
}

TEST(FunctionalEquation, HoldsNumerically) {
  for (int n = 2; n <= 10; ++n) {
    for (const auto& [p, t] : kSamplePoints) {
      EXPECT_EQ(zeta_by_formula(n, Rational(1) / p, Rational(1) / t), rpow(p, n - 1) * zeta_by_formula(n, p, t));
    }
  }
}

TEST(FunctionalEquation, AbsentForNonSymmetricFunction) {
  using F = BivariateRationalFunction;
  const F f = F::with_factors(BivariatePolynomial::constant(1), {{2, 1}});
  EXPECT_FALSE(mc::functional_equation_factor(f + F::from_polynomial(BivariatePolynomial::constant(1))));
}

TEST(Abscissa, Examples) {
  EXPECT_EQ(mc::abscissa(5), 3);
  EXPECT_EQ(mc::abscissa(2), 1);
  EXPECT_EQ(mc::abscissa(3), 1);
  for (int n = 3; n <= 10; ++n) EXPECT_EQ(mc::abscissa(n), n - 2);
  using F = BivariateRationalFunction;
  EXPECT_EQ(mc::abscissa(F::with_factors(BivariatePolynomial::constant(1), {{3, 2}, {1, 1}})), Rational(3, 2));
}

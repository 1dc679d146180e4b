#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

using namespace mb;
using mbtest::mono;
using mbtest::poly;

TEST(Rational, LowestTermsAndExactness) {
  Rational a = parse_rational("6/8");
  EXPECT_EQ(to_string(a), "3/4");
  Rational b = parse_rational("-2/-4");
  EXPECT_EQ(to_string(b), "1/2");
  Rational big = parse_rational("123456789012345678901234567890/3");
  EXPECT_EQ(to_string(big * 3), "123456789012345678901234567890");
  EXPECT_EQ((a + b) - b, a);
}

TEST(Rational, RejectsMalformedInput) {
  EXPECT_ANY_THROW(parse_rational("1/0"));
  EXPECT_ANY_THROW(parse_rational("abc"));
}

TEST(Monomial, DegreeAndExtremeVariables) {
  auto m = mono("x3^2*x1", 3);
  EXPECT_EQ(m.degree(), 3);
  EXPECT_EQ(m.min_var(), 1);
  EXPECT_EQ(m.max_var(), 3);
  EXPECT_EQ(Monomial(3).min_var(), -1);
  EXPECT_EQ(to_string(Monomial(3)), "1");
}

TEST(Monomial, MismatchedRingsThrow) {
  EXPECT_ANY_THROW(mono("x1", 2) * mono("x1", 3));
  EXPECT_ANY_THROW(TermOrder::lex().compare(mono("x1", 2), mono("x1", 3)));
}

TEST(TermOrder, Examples) {
  auto x = mono("x1", 3);
  EXPECT_EQ(TermOrder::lex().compare(x, x), std::strong_ordering::equal);
  EXPECT_TRUE(TermOrder::lex().compare(mono("x2*x3", 3), mono("x1*x2", 3)) > 0);
  auto w = TermOrder::weighted(WeightVector::ascending({8, 7, 5, 4, 3}));
  EXPECT_EQ(WeightVector::ascending({8, 7, 5, 4, 3}).degree(mono("x4*x5", 5)), 7);
  EXPECT_EQ(WeightVector::ascending({8, 7, 5, 4, 3}).degree(mono("x1*x2", 5)), 15);
  EXPECT_TRUE(w.compare(mono("x1*x2", 5), mono("x4*x5", 5)) > 0);
}

TEST(TermOrder, StrictTotalOrderOnRandomPairs) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> e(0, 3);
  auto random_mono = [&] {
    Monomial m(4);
    for (int i = 1; i <= 4; ++i) m.set(i, e(rng));
    return m;
  };
  std::vector<TermOrder> orders{TermOrder::lex(), TermOrder::deglex(), TermOrder::degrevlex(),
                                TermOrder::weighted(WeightVector::ascending({1, 2, 2, 3}))};
  for (auto& ord : orders)
    for (int k = 0; k < 1000; ++k) {
      auto a = random_mono(), b = random_mono(), c = random_mono();
      auto ab = ord.compare(a, b);
      EXPECT_EQ(ab == 0, a == b);
      EXPECT_EQ(ab < 0, ord.compare(b, a) > 0);
      if (ab < 0 && ord.compare(b, c) < 0) {
        EXPECT_TRUE(ord.compare(a, c) < 0);
      }
    }
}

TEST(Polynomial, ArithmeticExamples) {
  EXPECT_EQ(poly("x1 + 1", 2) + poly("-x1", 2), poly("1", 2));
  EXPECT_EQ(poly("x2 - x1^2", 2).times(mono("x1", 2)), poly("x1*x2 - x1^3", 2));
  EXPECT_EQ(poly("x2 - x1^2", 2) * poly("x1", 2), poly("x2*x1 - x1^3", 2));
  EXPECT_TRUE((poly("x1", 2) - poly("x1", 2)).is_zero());
  EXPECT_EQ(poly("x1 + x2", 2).support().size(), 2u);
}

TEST(Polynomial, RandomArithmeticIsExact) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> c(-9, 9), e(0, 3);
  auto random_poly = [&] {
    ScalarPoly f(3);
    for (int k = 0; k < 6; ++k) {
      Monomial m(3);
      for (int i = 1; i <= 3; ++i) m.set(i, e(rng));
      Rational r(c(rng), 7);
      r.canonicalize();
      f.add_term(m, r);
    }
    return f;
  };
  for (int k = 0; k < 50; ++k) {
    auto a = random_poly(), b = random_poly(), d = random_poly();
    EXPECT_EQ((a + b) - b, a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + d), a * b + a * d);
    EXPECT_EQ((a * b) * d, a * (b * d));
  }
}

TEST(Polynomial, SubstitutePoint) {
  ParamTable t;
  auto f = parse_param_poly("c[1,0;0,0]*x1", 2, t);
  EXPECT_EQ(substitute_point(f, {parse_rational("3/4")}), poly("3/4*x1", 2));
}

TEST(Polynomial, Homogenization) {
  auto f = poly("x2 - x1^3", 2);
  EXPECT_EQ(f.homogenized(), poly("x0^2*x2 - x1^3", 2));
  EXPECT_EQ(poly("x0^2*x2 - x1^3", 2).dehomogenized(), f);
  auto F = poly("x0^3*x2 - x0*x1^3", 2);
  int k = F.x0_content();
  EXPECT_EQ(k, 1);
  EXPECT_EQ(F.dehomogenized().homogenized().times(Monomial(2).times_var(0, k)), F);
}

TEST(Text, CanonicalPrintAndRoundtrip) {
  auto f = poly("-10 + 21*x1^2 - 9*x1^3 + x2^3 - 7*x1", 2);
  EXPECT_EQ(to_string(f), "x2^3 - 9*x1^3 + 21*x1^2 - 7*x1 - 10");
  for (auto s : {"x2^3 - 9*x1^3 + 21*x1^2 - 7*x1 - 10", "-1/2*x3*x1 + 7/3", "x7^2 + x3*x2 - x3*x1 - x2*x1 - x1^2",
                 "0"}) {
    auto g = parse_poly(s, 7);
    EXPECT_EQ(to_string(parse_poly(to_string(g), 7)), to_string(g));
    EXPECT_EQ(parse_poly(to_string(g), 7), g);
  }
}

TEST(Text, ParametricRoundtrip) {
  ParamTable t;
  auto f = parse_param_poly("x2^2 + (c[0,2;1,0] - 1/2*c[0,2;0,0]^2)*x1 - c[0,2;0,0]", 2, t);
  auto printed = to_string(f, &t);
  ParamTable t2;
  auto g = parse_param_poly(printed, 2, t2);
  EXPECT_EQ(to_string(g, &t2), printed);
  EXPECT_EQ(t.size(), 2u);
}

TEST(Text, ParseErrors) {
  EXPECT_ANY_THROW(parse_poly("x1 +", 2));
  EXPECT_ANY_THROW(parse_poly("x3", 2));
  EXPECT_ANY_THROW(parse_poly("x1^", 2));
}

TEST(Text, ParameterNames) {
  EXPECT_EQ(param_name(mono("x2", 2), mono("x1^2", 2)), "c[0,1;2,0]");
}

#include <gtest/gtest.h>

#include "property_suite.hpp"
#include "test_support.hpp"

using namespace mb;

namespace {

StronglyStableIdeal fixture_ideal(const std::string& name) { return load_ideal(mbtest::fixture(name)).ideal; }

// Counts J_t through the star decomposition: each generator x^α contributes the monomials of degree
// t − |α| in the variables up to min(x^α).
std::size_t closed_form_graded(const StronglyStableIdeal& J, int t) {
  int lo = J.lowest_var();
  Integer in_ideal = 0;
  for (auto& g : J.basis()) {
    int free = t - g.degree();
    if (free < 0) continue;
    int vars = g.min_var() - lo;
    in_ideal += props::binomial(free + vars, vars);
  }
  Integer all = props::binomial(t + J.num_vars() - lo, J.num_vars() - lo);
  return static_cast<std::size_t>(Integer(all - in_ideal).get_ui());
}

}  // namespace

TEST(HilbertFunction, MaximalIdealIsOnePoint) {
  auto J = make_ideal(Ring::R, 3, {"x3", "x2", "x1"});
  for (int t = 0; t < 6; ++t) EXPECT_EQ(hilbert_function(J, t, true), 1u);
  EXPECT_EQ(to_string(hilbert_polynomial(J, true)), "1");
}

TEST(HilbertFunction, ArtinianIdealIsConstantFromTheLevel) {
  auto J = fixture_ideal("j541.ideal");
  for (int t = 3; t < 8; ++t) EXPECT_EQ(hilbert_function(J, t, true), 16u) << t;
  EXPECT_LT(hilbert_function(J, 2, true), 16u);
}

TEST(HilbertFunction, NegativeArgumentThrows) {
  auto J = make_ideal(Ring::R, 2, {"x2"});
  EXPECT_THROW(hilbert_function(J, -1), std::invalid_argument);
  EXPECT_THROW(hilbert_function(J.homogenized(), 2, true), std::invalid_argument);
}

TEST(HilbertFunction, MatchesStarDecompositionCount) {
  props::Rng rng(61);
  for (int k = 0; k < 60; ++k) {
    int n = props::uniform(rng, 1, 4);
    auto J = props::random_ideal(rng, n, 4, k % 3 == 0);
    auto Jh = k % 2 ? J.homogenized() : J;
    for (int t = 0; t <= J.regularity() + 3; ++t) EXPECT_EQ(hilbert_function(Jh, t), closed_form_graded(Jh, t));
  }
}

TEST(HilbertFunction, AffineCountIsTheGradedCountOfTheHomogenization) {
  props::Rng rng(62);
  for (int k = 0; k < 40; ++k) {
    int n = props::uniform(rng, 1, 4);
    auto J = props::random_ideal(rng, n, 4, k % 2 == 0);
    for (int t = 0; t <= J.regularity() + 3; ++t)
      EXPECT_EQ(hilbert_function(J, t, true), hilbert_function(J.homogenized(), t));
    EXPECT_EQ(hilbert_polynomial(J, true), hilbert_polynomial(J.homogenized()));
  }
}

TEST(HilbertPolynomial, Examples) {
  EXPECT_EQ(to_string(hilbert_polynomial(make_ideal(Ring::R, 3, {"x3", "x2^2"}), true)), "2*t + 1");
  EXPECT_EQ(to_string(hilbert_polynomial(fixture_ideal("j541.ideal"), true)), "16");
  EXPECT_EQ(to_string(hilbert_polynomial(fixture_ideal("gor5.ideal"), true)), "12");
  EXPECT_EQ(to_string(hilbert_polynomial(fixture_ideal("jlex16.ideal"), true)), "16");
  EXPECT_EQ(to_string(hilbert_polynomial(fixture_ideal("p7.ideal"))), "7");
  EXPECT_EQ(to_string(hilbert_polynomial(make_ideal(Ring::S, 3, {"x3"}))), "1/2*t^2 + 3/2*t + 1");
}

TEST(HilbertPolynomial, ArtinianConstantIsTheSousEscalierSize) {
  props::Rng rng(63);
  for (int k = 0; k < 30; ++k) {
    int n = props::uniform(rng, 1, 4);
    auto J = props::random_ideal(rng, n, 4, true);
    ASSERT_TRUE(J.is_artinian());
    auto P = hilbert_polynomial(J, true);
    auto size = J.sous_escalier_all().size();
    EXPECT_EQ(P, NumericalPolynomial::constant(Rational(static_cast<unsigned long>(size))));
    for (int t = std::max(0, J.regularity() - 1); t <= J.regularity() + 2; ++t)
      EXPECT_EQ(hilbert_function(J, t, true), size);
  }
}

TEST(HilbertPolynomial, AgreesWithTheFunctionBeyondTheRegularity) {
  props::Rng rng(64);
  for (int k = 0; k < 30; ++k) {
    int n = props::uniform(rng, 1, 4);
    auto J = props::random_ideal(rng, n, 4, false);
    auto P = hilbert_polynomial(J, true);
    for (int t = J.regularity(); t <= J.regularity() + 8; ++t)
      EXPECT_EQ(P(Rational(t)), Rational(static_cast<unsigned long>(hilbert_function(J, t, true))));
  }
}

TEST(HilbertPolynomial, Printing) {
  EXPECT_EQ(to_string(NumericalPolynomial()), "0");
  EXPECT_EQ(to_string(NumericalPolynomial({Rational(0), Rational(-1), Rational(1, 2)})), "1/2*t^2 - t");
  EXPECT_EQ(to_string(NumericalPolynomial({Rational(-3)})), "-3");
}

TEST(Satiety, GenericInitialIdeal) {
  EXPECT_EQ(fixture_ideal("gin5.ideal").satiety(), 4);
  EXPECT_EQ(fixture_ideal("p7.ideal").satiety(), 0);
}

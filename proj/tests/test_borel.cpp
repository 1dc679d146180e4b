#include <gtest/gtest.h>

#include "test_support.hpp"
#include "property_suite.hpp"

using namespace mb;
using mbtest::mono;

namespace {

StronglyStableIdeal four_var_example() {
  return make_ideal(Ring::S, 3, {"x3^2", "x3*x2", "x3*x1", "x2^2", "x2*x1"});
}

}  // namespace

TEST(Validate, AcceptsStronglyStable) {
  auto J = make_ideal(Ring::R, 2, {"x2^2", "x1*x2"});
  EXPECT_EQ(J.basis().size(), 2u);
}

TEST(Validate, RejectsWithWitnessMove) {
  try {
    make_ideal(Ring::R, 2, {"x1*x2"});
    FAIL() << "expected NotStronglyStable";
  } catch (const NotStronglyStable& e) {
    EXPECT_EQ(e.generator, mono("x1*x2", 2));
    EXPECT_EQ(e.image, mono("x2^2", 2));
    EXPECT_EQ(e.from_var, 1);
    EXPECT_EQ(e.to_var, 2);
  }
}

TEST(Validate, EmptyBasis) { EXPECT_THROW(StronglyStableIdeal::validate(Ring::R, 2, {}), EmptyBasis); }

TEST(Validate, MinimalizesBasis) {
  auto J = make_ideal(Ring::R, 2, {"x2", "x2^2", "x2*x1", "x1^4"});
  EXPECT_EQ(J.basis().size(), 2u);
}

TEST(BorelCompare, Examples) {
  EXPECT_EQ(borel_compare(mono("x2^2", 2), mono("x1*x2", 2)), BorelRelation::Greater);
  EXPECT_EQ(borel_compare(mono("x1*x2", 2), mono("x2^2", 2)), BorelRelation::Less);
  EXPECT_EQ(borel_compare(mono("x1*x2", 2), mono("x1*x2", 2)), BorelRelation::Equal);
  EXPECT_EQ(borel_compare(mono("x1*x3", 3), mono("x2^2", 3)), BorelRelation::Incomparable);
  EXPECT_ANY_THROW(borel_compare(mono("x1", 2), mono("x1^2", 2)));
}

TEST(StarDecompose, Examples) {
  auto J = four_var_example();
  auto d = J.star_decompose(mono("x1^2*x2*x3", 3));
  EXPECT_EQ(d.generator, mono("x3*x2", 3));
  EXPECT_EQ(d.cofactor, mono("x1^2", 3));

  auto g = J.star_decompose(mono("x2*x1", 3));
  EXPECT_EQ(g.generator, mono("x2*x1", 3));
  EXPECT_TRUE(g.cofactor.is_one());

  auto K = make_ideal(Ring::R, 2, {"x2", "x1^4"});
  auto k = K.star_decompose(mono("x2*x1^3", 2));
  EXPECT_EQ(k.generator, mono("x2", 2));
  EXPECT_EQ(k.cofactor, mono("x1^3", 2));
  EXPECT_EQ(props::star_factorizations(K, mono("x2*x1^3", 2)), 1);
  EXPECT_THROW(K.star_decompose(mono("x1^3", 2)), NotInIdeal);
}

TEST(StarOrder, Examples) {
  auto J = four_var_example();
  auto a = mono("x0*x2*x3", 3), b = mono("x1^2*x2", 3);
  EXPECT_TRUE(J.star_compare(a, b) < 0);
  EXPECT_EQ(J.star_compare(a, a), std::strong_ordering::equal);
  EXPECT_TRUE(J.star_compare(mono("x1^2*x2*x3", 3), mono("x0*x2*x3^2", 3)) < 0);
  EXPECT_TRUE(props::star_order_counterexample());
}

// x1^2*x2 lies outside (x3, x2^2) as well, so the truncation has seven monomials.
TEST(SousEscalier, Examples) {
  auto J = make_ideal(Ring::R, 3, {"x3", "x2^2"});
  auto N = J.sous_escalier(3);
  std::vector<Monomial> want;
  for (auto s : {"x1^2*x2", "x1*x2", "x1^3", "x1^2", "x2", "x1", "1"}) want.push_back(mono(s, 3));
  std::sort(want.begin(), want.end(), DegLexGreater{});
  EXPECT_EQ(N, want);

  auto M = make_ideal(Ring::R, 3, {"x3", "x2", "x1"});
  for (int m = 0; m < 5; ++m) EXPECT_EQ(M.sous_escalier(m).size(), 1u);
}

TEST(VSpace, Examples) {
  auto J = make_ideal(Ring::R, 3, {"x3", "x2^2"});
  auto heads = completion_heads(J, 3);
  EXPECT_EQ(heads.size(), 11u);
  for (auto s : {"x3^2", "x2*x3", "x1*x3", "x3^3", "x2^3", "x1*x3^2", "x1*x2^2", "x1^2*x3", "x2*x3^2", "x2^2*x3",
                 "x1*x2*x3"})
    EXPECT_NE(std::find(heads.begin(), heads.end(), mono(s, 3)), heads.end()) << s;

  auto M = make_ideal(Ring::R, 3, {"x3", "x2", "x1"});
  EXPECT_EQ(M.vspace(1).size(), 3u);

  for (int m = 0; m <= 5; ++m)
    EXPECT_EQ(J.vspace(m).size() + J.sous_escalier(m).size(), props::binomial(3 + m, 3).get_ui());
}

TEST(RegularitySatiety, Examples) {
  auto gin = make_ideal(Ring::S, 3, {"x0*x1*x2", "x0^3*x2", "x1^5", "x3^2", "x2*x3", "x1*x3", "x0*x3", "x2^2",
                                     "x1^2*x2"});
  EXPECT_EQ(gin.satiety(), 4);
  auto lex = make_ideal(Ring::R, 7, {"x7", "x6", "x5", "x4", "x3", "x2", "x1^16"});
  EXPECT_EQ(lex.regularity(), 16);
  auto sat = make_ideal(Ring::S, 2, {"x2^2", "x1^3*x2", "x1^4"});
  EXPECT_EQ(sat.satiety(), 0);
  EXPECT_TRUE(sat.is_saturated());
}

// (J : x_low)_t = J_t for all t ≥ sat, and not for t = sat − 1.
TEST(RegularitySatiety, SatietyMatchesColonDefinition) {
  props::Rng rng(21);
  for (int k = 0; k < 40; ++k) {
    int n = props::uniform(rng, 1, 3);
    auto J0 = props::random_ideal(rng, n, 4, k % 2 == 0);
    auto J = k % 3 == 0 ? J0.homogenized() : J0;
    int low = J.lowest_var();
    auto colon_equal = [&](int t) {
      for (auto& m : monomials_of_degree(n, t, low))
        if (!J.contains(m) && J.contains(m.times_var(low))) return false;
      return true;
    };
    int sat = J.satiety();
    for (int t = sat; t <= J.regularity() + 3; ++t) EXPECT_TRUE(colon_equal(t)) << "t=" << t;
    if (sat > 0) EXPECT_FALSE(colon_equal(sat - 1));
    int reg = 0;
    for (auto& g : J.basis()) reg = std::max(reg, g.degree());
    EXPECT_EQ(J.regularity(), reg);
  }
}

TEST(OptimizedLevel, Examples) {
  auto K = make_ideal(Ring::R, 2, {"x2", "x1^4"});
  EXPECT_EQ(K.optimized_level(5), 3);
  auto L = make_ideal(Ring::R, 2, {"x2"});
  EXPECT_EQ(L.optimized_level(1), 1);
  EXPECT_EQ(L.optimized_level(6), 1);
}

TEST(Segment, PlainDegreeCannotSeparate) {
  auto K = make_ideal(Ring::R, 2, {"x2", "x1^4"});
  EXPECT_FALSE(K.is_affine_segment(3, WeightVector::descending({1, 1})));
  EXPECT_ANY_THROW(K.is_affine_segment(3, WeightVector::descending({1, 0})));
  EXPECT_ANY_THROW(K.is_affine_segment(3, WeightVector::descending({1, 1, 1})));
}

TEST(HomogenizeIdeal, SameBasisOtherRing) {
  auto K = make_ideal(Ring::R, 2, {"x2", "x1^4"});
  auto H = K.homogenized();
  EXPECT_EQ(H.ring(), Ring::S);
  EXPECT_EQ(H.basis(), K.basis());
  EXPECT_EQ(H.dehomogenized(), K);
  auto gin = make_ideal(Ring::S, 3, {"x0*x1*x2", "x0^3*x2", "x1^5", "x3^2", "x2*x3", "x1*x3", "x0*x3", "x2^2",
                                     "x1^2*x2"});
  EXPECT_THROW(gin.dehomogenized(), NotSaturated);
}

TEST(BorelProperties, StarUniqueness) {
  auto r = props::star_uniqueness();
  EXPECT_TRUE(r.pass) << r.detail;
}

TEST(BorelProperties, DescLex) {
  auto r = props::desc_lex();
  EXPECT_TRUE(r.pass) << r.detail;
}

TEST(BorelProperties, StarOrderAxioms) {
  auto r = props::star_order_axioms();
  EXPECT_TRUE(r.pass) << r.detail;
}

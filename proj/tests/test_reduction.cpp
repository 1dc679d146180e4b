#include <gtest/gtest.h>

#include "property_suite.hpp"
#include "test_support.hpp"

using namespace mb;
using mbtest::marked;
using mbtest::mono;
using mbtest::poly;

namespace {

MarkedSet<Rational> kx1x2() { return mbtest::load_scalar("kx1x2.mset"); }
MarkedSet<Rational> x3x2sq() { return mbtest::load_scalar("x3x2sq.mset"); }

bool has_failure(const std::vector<ConditionFailure<Rational>>& fs, const Monomial& head) {
  return std::any_of(fs.begin(), fs.end(), [&](auto& f) { return f.head == head; });
}

}  // namespace

TEST(Reduce, PowersOfTheShiftedVariable) {
  auto J = make_ideal(Ring::R, 3, {"x3", "x2^2"});
  auto G = marked(J, 4, {{"x3", "x3 - x1^4"}, {"x2^2", "x2^2"}});
  auto cert = reduce(poly("x3^2", 3), G);
  EXPECT_EQ(cert.result, poly("x1^8", 3));
  EXPECT_TRUE(cert.verify(G));
  EXPECT_EQ(reduce(poly("x3^3", 3), G).result, poly("x1^12", 3));
}

TEST(Reduce, ReducedInputIsUnchanged) {
  auto G = kx1x2();
  auto cert = reduce(poly("x1^3", 2), G);
  EXPECT_EQ(cert.result, poly("x1^3", 2));
  EXPECT_TRUE(cert.steps.empty());
}

TEST(Reduce, CubeOfHead) {
  auto G = kx1x2();
  auto cert = reduce(poly("x2^3", 2), G);
  EXPECT_EQ(cert.result, poly("9*x1^3 + 10 + 7*x1 - 21*x1^2", 2));
  EXPECT_TRUE(cert.verify(G));
}

TEST(Reduce, CertificatesVerify) {
  auto r = props::certificate_soundness(2, 300);
  EXPECT_TRUE(r.pass) << r.detail;
}

TEST(Reduce, StrategiesAgreeOnBases) {
  props::Rng rng(31);
  for (int k = 0; k < 40; ++k) {
    int n = props::uniform(rng, 2, 3);
    auto J = props::random_ideal(rng, n, 3, k % 2 == 0);
    int m = props::uniform(rng, 1, J.regularity() + 1);
    auto G = props::translation_basis(J, m, props::random_shift(rng, n));
    auto g = props::random_poly(rng, n, m + 2, 5);
    auto a = reduce(g, G, {Strategy::StarLargest});
    auto b = reduce(g, G, {Strategy::StarSmallest});
    EXPECT_TRUE(a.verify(G));
    EXPECT_TRUE(b.verify(G));
    EXPECT_EQ(a.result, b.result) << to_string(g);
  }
}

TEST(Reduce, FuelExhaustionIsReported) {
  auto G = kx1x2();
  EXPECT_THROW(reduce(poly("x2^6", 2), G, {Strategy::StarLargest, 2, true}), FuelExceeded);
}

TEST(Completion, FiveTailsOfTheTwoVariableExample) {
  auto G = kx1x2();
  auto comp = compute_completion(G);
  ASSERT_EQ(comp.polys.size(), 5u);
  auto truth = read_json_file(mbtest::fixture("kx1x2.completion.json"));
  ASSERT_EQ(truth["polys"].size(), 5u);
  for (auto& text : truth["polys"]) {
    auto f = poly(text.get<std::string>(), 2);
    auto support = f.support();
    auto head = *std::find_if(support.begin(), support.end(), [&](auto& m) { return G.ideal().contains(m); });
    auto p = comp.find(head);
    ASSERT_NE(p, nullptr) << to_string(head);
    EXPECT_EQ(p->poly(), f);
  }
}

TEST(Completion, ZeroTailsStayZero) {
  auto J = make_ideal(Ring::R, 3, {"x3", "x2^2"});
  auto G = marked(J, 3, {{"x3", "x3"}, {"x2^2", "x2^2"}});
  auto comp = compute_completion(G);
  EXPECT_EQ(comp.polys.size(), completion_heads(J, 3).size());
  for (auto& p : comp.polys) EXPECT_TRUE(p.tail.is_zero()) << to_string(p.head);
}

TEST(Completion, MissingCompletionNamesAHead) {
  auto G = x3x2sq();
  try {
    compute_completion(G);
    FAIL() << "expected NoCompletion";
  } catch (const NoCompletion<Rational>& e) {
    EXPECT_GT(e.reduced.degree(), 3);
    EXPECT_TRUE(G.ideal().contains(e.beta));
  }
  auto v = check_marked_basis(G, {.force_completion = true});
  EXPECT_TRUE(has_failure(v.completion_failures, mono("x1*x3^2", 3)));
}

TEST(Criterion, TwoVariableExampleIsABasis) {
  auto v = check_marked_basis(kx1x2());
  EXPECT_TRUE(v.is_basis);
  EXPECT_TRUE(v.syzygy_ok);
  EXPECT_EQ(v.syzygy_checked, syzygy_obligations(make_ideal(Ring::R, 2, {"x2", "x1^4"})).size());
}

TEST(Criterion, ZeroTailsAreABasis) {
  auto J = make_ideal(Ring::R, 3, {"x3", "x2^2"});
  auto G = marked(J, 3, {{"x3", "x3"}, {"x2^2", "x2^2"}});
  EXPECT_TRUE(check_marked_basis(G).is_basis);
}

TEST(Criterion, ThreeVariableSetIsNotABasis) {
  auto v = check_marked_basis(x3x2sq());
  EXPECT_FALSE(v.is_basis);
  EXPECT_TRUE(v.syzygy_ok);
  EXPECT_TRUE(v.completion_checked);
  EXPECT_FALSE(v.completion_ok);
  EXPECT_TRUE(has_failure(v.completion_failures, mono("x1*x3^2", 3)));
}

TEST(Criterion, WorkerCountDoesNotChangeTheVerdict) {
  props::Rng rng(32);
  for (int k = 0; k < 30; ++k) {
    auto G = props::random_instance(rng, k);
    auto a = check_marked_basis(G, {.workers = 1});
    auto b = check_marked_basis(G, {.workers = 3});
    EXPECT_EQ(a.is_basis, b.is_basis);
    EXPECT_EQ(a.syzygy_failures.size(), b.syzygy_failures.size());
    EXPECT_EQ(a.completion_failures.size(), b.completion_failures.size());
  }
}

TEST(NormalForm, Examples) {
  auto G = kx1x2();
  EXPECT_EQ(normal_form(poly("x2^3", 2), G), poly("9*x1^3 + 10 + 7*x1 - 21*x1^2", 2));
  EXPECT_EQ(normal_form(poly("x1^2", 2), G), poly("x1^2", 2));
  EXPECT_EQ(normal_form(poly("x2^3", 2), G, true), poly("9*x1^3 + 10 + 7*x1 - 21*x1^2", 2));
  EXPECT_THROW(normal_form(poly("x3", 3), x3x2sq(), true), NotABasis);
}

TEST(NormalForm, CommutesWithMultiplicationUpToDegreeFive) {
  auto G = kx1x2();
  for (int d = 0; d <= 5; ++d)
    for (auto& b : monomials_of_degree(2, d)) {
      auto nf_b = normal_form(ScalarPoly::monomial(b), G);
      for (int i = 1; i <= 2; ++i) {
        auto x = Monomial::variable(2, i);
        EXPECT_EQ(normal_form(nf_b.times(x), G), normal_form(ScalarPoly::monomial(b.times_var(i)), G))
            << to_string(b) << " x" << i;
      }
    }
  EXPECT_EQ(props::normal_form_commutation(G), "");
}

TEST(SyzygyLift, MonomialIdealHasOneSummand) {
  auto J = make_ideal(Ring::R, 3, {"x3", "x2^2", "x2*x1", "x1^3"});
  std::vector<MarkedPolynomial<Rational>> ps;
  for (auto& g : J.basis()) ps.push_back({g, ScalarPoly(3)});
  MarkedSet<Rational> G(J, 3, ps);
  for (auto& ob : syzygy_obligations(J)) {
    auto lift = syzygy_lift(G, ob.alpha, ob.var);
    EXPECT_TRUE(lift.identity_holds);
    EXPECT_TRUE(lift.partner_present);
    ASSERT_EQ(lift.summands.size(), 1u);
    EXPECT_EQ(lift.summands[0].generator * lift.summands[0].cofactor, ob.alpha.times_var(ob.var));
  }
}

TEST(SyzygyLift, TwoVariableExample) {
  auto G = kx1x2();
  auto obs = syzygy_obligations(G.ideal());
  ASSERT_EQ(obs.size(), 1u);
  EXPECT_EQ(obs[0].alpha, mono("x1^4", 2));
  EXPECT_EQ(obs[0].var, 2);
  EXPECT_THROW(syzygy_lift(G, mono("x2", 2), 2), std::invalid_argument);
  auto lift = syzygy_lift(G, mono("x1^4", 2), 2);
  EXPECT_TRUE(lift.identity_holds);
  EXPECT_TRUE(lift.partner_present);
  EXPECT_EQ(lift.partner.generator, mono("x2", 2));
  EXPECT_EQ(lift.partner.cofactor, mono("x1^4", 2));
}

TEST(SyzygyLift, IdentityOnRandomBases) {
  props::Rng rng(33);
  int lifts = 0;
  for (int k = 0; k < 20; ++k) {
    int n = props::uniform(rng, 2, 3);
    auto J = props::random_ideal(rng, n, 4, k % 2 == 0);
    int m = props::uniform(rng, 1, J.regularity() + 1);
    auto G = props::translation_basis(J, m, props::random_shift(rng, n));
    for (auto& ob : syzygy_obligations(J)) {
      auto lift = syzygy_lift(G, ob.alpha, ob.var);
      EXPECT_TRUE(lift.identity_holds) << to_string(ob.alpha) << " x" << ob.var;
      EXPECT_TRUE(lift.partner_present) << to_string(ob.alpha) << " x" << ob.var;
      ++lifts;
    }
  }
  EXPECT_GT(lifts, 20);
}

TEST(MarkedSetInput, RejectsBadTails) {
  auto J = make_ideal(Ring::R, 2, {"x2", "x1^4"});
  EXPECT_THROW(marked(J, 3, {{"x2", "x2 - x1^4"}, {"x1^4", "x1^4"}}), InvalidMarkedSet);
  EXPECT_THROW(marked(J, 3, {{"x2", "x2 - x1^3"}}), InvalidMarkedSet);
  EXPECT_THROW(marked(J, 0, {{"x2", "x2"}, {"x1^4", "x1^4"}}), InvalidMarkedSet);
  EXPECT_NO_THROW(marked(J, 3, {{"x2", "x2 - x1^3"}, {"x1^4", "x1^4 + x1^3"}}));
}

#include <gtest/gtest.h>

#include "property_suite.hpp"
#include "test_support.hpp"

using namespace mb;
using mbtest::mono;
using mbtest::poly;

namespace {

MarkedSet<Rational> kx1x2() { return mbtest::load_scalar("kx1x2.mset"); }

ScalarPoly x0_power(int n, int k) { return ScalarPoly::monomial(Monomial(n).times_var(0, k)); }

}  // namespace

TEST(Lift, HeadOfTheCubicGenerator) {
  auto G = kx1x2();
  auto H = lift_to_homogeneous(G, compute_completion(G));
  auto& F = H.at(mono("x0^2*x2", 2));
  EXPECT_TRUE(F.superminimal);
  EXPECT_EQ(F.poly(), poly("x0^2*x2 - x1^3 + x0*x1^2 + x0^2*x1 + 2*x0^3", 2));
  EXPECT_EQ(H.polys().size(), H.ideal().truncation_basis(3).size());
}

TEST(Lift, SuperminimalHeadDegrees) {
  props::Rng rng(41);
  for (int k = 0; k < 30; ++k) {
    int n = props::uniform(rng, 2, 3);
    auto J = props::random_ideal(rng, n, 4, k % 2 == 0);
    int m = props::uniform(rng, 1, J.regularity() + 1);
    auto G = props::translation_basis(J, m, props::random_shift(rng, n));
    auto H = lift_to_homogeneous(G, compute_completion(G));
    std::size_t superminimal = 0;
    for (auto& F : H.polys()) {
      EXPECT_TRUE(F.poly().is_homogeneous());
      if (!F.superminimal) continue;
      ++superminimal;
      EXPECT_EQ(F.head.degree(), std::max(m, F.head.dehomogenized().degree()));
    }
    EXPECT_EQ(superminimal, J.basis().size());
  }
}

TEST(Lift, DropRoundtrip) {
  auto G = kx1x2();
  auto comp = compute_completion(G);
  auto [G2, comp2] = drop_to_affine(lift_to_homogeneous(G, comp));
  ASSERT_EQ(G2.polys().size(), G.polys().size());
  for (auto& f : G.polys()) EXPECT_EQ(G2.at(f.head).poly(), f.poly());
  ASSERT_EQ(comp2.polys.size(), comp.polys.size());
  for (auto& f : comp.polys) {
    auto g = comp2.find(f.head);
    ASSERT_NE(g, nullptr);
    EXPECT_EQ(g->poly(), f.poly());
  }
}

TEST(Lift, HomogeneousSetRejectsUnsaturatedIdeals) {
  auto J = make_ideal(Ring::S, 2, {"x2", "x1*x0", "x1^2"});
  EXPECT_THROW(HomogMarkedSet<Rational>(J, 2, {}), NotTruncationOfSaturated);
}

TEST(FamilyIdeal, LowDegreeCombinationIsOutsideTheLevel) {
  auto G = kx1x2();
  auto comp = compute_completion(G);
  auto fam = homogenized_family_ideal(G, comp);
  auto f3 = comp.find(mono("x2^2", 2))->poly();
  auto f5 = comp.find(mono("x2*x1", 2))->poly();
  auto h = f5.scaled(Rational(3)) + f3;
  EXPECT_EQ(h.degree(), 2);
  auto res = family_ideal_contains(fam, h.homogenized());
  EXPECT_FALSE(res.in_span);
  EXPECT_FALSE(res.conclusive);
  auto lifted = family_ideal_contains(fam, h.homogenized() * poly("x0", 2));
  EXPECT_TRUE(lifted.in_span);
  EXPECT_TRUE(lifted.conclusive);
}

TEST(FamilyIdeal, MonomialCaseGivesTheMonomialBasis) {
  auto J = make_ideal(Ring::R, 2, {"x2", "x1^4"});
  std::vector<MarkedPolynomial<Rational>> ps;
  for (auto& g : J.basis()) ps.push_back({g, ScalarPoly(2)});
  MarkedSet<Rational> G(J, 3, ps);
  auto fam = homogenized_family_ideal(G, compute_completion(G));
  for (auto& g : fam.gens) {
    EXPECT_EQ(g.size(), 1u);
    EXPECT_TRUE(J.homogenized().contains(g.support().front()));
  }
}

// Degree by degree, the lifted set and the homogenized family span the same space.
TEST(FamilyIdeal, SpansAgreeFromTheLevelOn) {
  auto G = kx1x2();
  auto comp = compute_completion(G);
  auto fam = homogenized_family_ideal(G, comp);
  auto H = lift_to_homogeneous(G, comp);
  FamilyGenerators<Rational> lifted;
  lifted.level = G.level();
  for (auto& F : H.polys()) lifted.gens.push_back(F.poly());
  for (int l = G.level(); l <= G.level() + 2; ++l) {
    for (auto& F : H.polys())
      if (F.head.degree() <= l)
        EXPECT_TRUE(family_ideal_contains(fam, F.poly() * x0_power(2, l - F.head.degree())).in_span)
            << to_string(F.head) << " at " << l;
    for (auto& g : fam.gens)
      if (g.degree() <= l)
        EXPECT_TRUE(family_ideal_contains(lifted, g * x0_power(2, l - g.degree())).in_span) << to_string(g);
  }
}

TEST(Replay, AffineCertificatesBecomeSuperminimalSteps) {
  props::Rng rng(42);
  int replays = 0;
  for (int k = 0; k < 50; ++k) {
    int n = props::uniform(rng, 2, 3);
    auto J = props::random_ideal(rng, n, 3, k % 2 == 0);
    int m = props::uniform(rng, 1, J.regularity() + 1);
    auto G = props::translation_basis(J, m, props::random_shift(rng, n));
    auto comp = compute_completion(G);
    auto g = props::random_poly(rng, n, m + 2, 4);
    auto cert = reduce(g, G);
    auto rep = homrid_replay(G, comp, cert);
    ASSERT_TRUE(rep.ok) << rep.failure;
    EXPECT_GE(rep.t0, 0);
    EXPECT_EQ(rep.steps.size(), cert.steps.size());
    auto back = affinrid_replay(g, rep.steps);
    ASSERT_EQ(back.steps.size(), cert.steps.size());
    for (std::size_t s = 0; s < back.steps.size(); ++s) {
      EXPECT_EQ(back.steps[s].generator, cert.steps[s].generator);
      EXPECT_EQ(back.steps[s].cofactor, cert.steps[s].cofactor);
      EXPECT_EQ(back.steps[s].coeff, cert.steps[s].coeff);
    }
    back.result = cert.result;
    EXPECT_TRUE(back.verify(G));
    ++replays;
  }
  EXPECT_EQ(replays, 50);
}

TEST(Replay, TamperedCertificateIsRejected) {
  auto G = kx1x2();
  auto cert = reduce(poly("x2^3", 2), G);
  cert.result = poly("x1", 2);
  EXPECT_FALSE(homrid_replay(G, compute_completion(G), cert).ok);
}

TEST(Oracle, Examples) {
  auto J = make_ideal(Ring::R, 2, {"x2", "x1^4"});
  std::vector<MarkedPolynomial<Rational>> ps;
  for (auto& g : J.basis()) ps.push_back({g, ScalarPoly(2)});
  auto mono_rep = linear_oracle(MarkedSet<Rational>(J, 3, ps));
  EXPECT_TRUE(mono_rep.has_completion);
  EXPECT_TRUE(mono_rep.pass);

  auto rep = linear_oracle(kx1x2());
  EXPECT_TRUE(rep.has_completion);
  EXPECT_TRUE(rep.pass);
  ASSERT_FALSE(rep.degrees.empty());
  EXPECT_EQ(rep.degrees.front().degree, 3);
  EXPECT_EQ(rep.degrees.back().degree, 7);
  for (auto& d : rep.degrees) EXPECT_EQ(d.rank, d.expected) << d.degree;

  auto bad = linear_oracle(mbtest::load_scalar("x3x2sq.mset"));
  EXPECT_FALSE(bad.has_completion);
  EXPECT_FALSE(bad.pass);
  EXPECT_TRUE(std::any_of(bad.degrees.begin(), bad.degrees.end(), [](auto& d) { return !d.pass && d.degree <= 5; }));
}

TEST(Oracle, AgreesWithTheCriterion) {
  auto r = props::criterion_matches_oracle(1, 120);
  EXPECT_TRUE(r.pass) << r.detail;
}

TEST(Homogenization, Roundtrips) {
  auto r = props::homogenization_roundtrips();
  EXPECT_TRUE(r.pass) << r.detail;
}

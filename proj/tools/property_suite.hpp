#pragma once

// Randomized property checks shared by the acceptance binary and the tests.
// Every generator is driven by a seeded mt19937_64, so runs are reproducible.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "markedbases/markedbases.hpp"

namespace mb::props {

struct PropertyResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Monomial random_monomial(Rng& rng, int n, int degree, int lo = 1) {
  Monomial m(n);
  for (int k = 0; k < degree; ++k) {
    int i = uniform(rng, lo, n);
    m = m.times_var(i);
  }
  return m;
}

/// Strongly stable ideal of R with n variables and regularity ≤ max_reg. Artinian when `artinian`.
inline StronglyStableIdeal random_ideal(Rng& rng, int n, int max_reg, bool artinian) {
  for (;;) {
    std::vector<Monomial> seeds;
    int k = uniform(rng, 1, 3);
    for (int s = 0; s < k; ++s) seeds.push_back(random_monomial(rng, n, uniform(rng, 1, max_reg)));
    if (artinian) seeds.push_back(Monomial::variable(n, 1).times_var(1, uniform(rng, 1, max_reg) - 1));
    auto J = strongly_stable_closure(Ring::R, n, seeds);
    if (J.regularity() <= max_reg) return J;
  }
}

/// Saturated strongly stable ideal of S (no generator involves x_0).
inline StronglyStableIdeal random_saturated_ideal(Rng& rng, int n, int max_reg) {
  return random_ideal(rng, n, max_reg, uniform(rng, 0, 1) == 1).homogenized();
}

inline ScalarPoly random_poly(Rng& rng, int n, int max_degree, int terms, int lo = 1) {
  ScalarPoly f(n);
  for (int k = 0; k < terms; ++k) {
    int c = uniform(rng, -4, 4);
    if (c == 0) continue;
    f.add_term(random_monomial(rng, n, uniform(rng, 0, max_degree), lo), Rational(c));
  }
  return f;
}

inline Integer binomial(int n, int k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

/// The image of B_𝔧 under x ↦ x + a, marked on B_𝔧: always a basis, at every level.
inline MarkedSet<Rational> translation_basis(const StronglyStableIdeal& J, int m, const std::vector<int>& a) {
  int n = J.num_vars();
  auto shifted_power = [&](const Monomial& beta) {
    ScalarPoly p = ScalarPoly::constant(n, Rational(1));
    for (int i = 1; i <= n; ++i) {
      ScalarPoly lin = ScalarPoly::monomial(Monomial::variable(n, i));
      lin.add_term(Monomial(n), Rational(a[static_cast<std::size_t>(i - 1)]));
      for (int e = 0; e < beta.exponent(i); ++e) p = p * lin;
    }
    return p;
  };
  std::vector<MarkedPolynomial<Rational>> polys;
  for (auto& alpha : J.basis()) {
    ScalarPoly tail(n);
    for (auto& beta : J.sous_escalier(alpha.degree())) {
      if (!beta.divides(alpha)) continue;
      Rational c = 1;
      for (int i = 1; i <= n; ++i) {
        int d = alpha.exponent(i) - beta.exponent(i);
        Integer pw;
        mpz_pow_ui(pw.get_mpz_t(), Integer(-a[static_cast<std::size_t>(i - 1)]).get_mpz_t(), static_cast<unsigned long>(d));
        c *= Rational(binomial(alpha.exponent(i), beta.exponent(i)) * pw);
      }
      tail += shifted_power(beta).scaled(c);
    }
    polys.push_back({alpha, tail});
  }
  return MarkedSet<Rational>(J, m, std::move(polys));
}

inline std::vector<int> random_shift(Rng& rng, int n) {
  std::vector<int> a;
  for (int i = 0; i < n; ++i) a.push_back(uniform(rng, -2, 2));
  return a;
}

/// Sparse random tails inside N(𝔧)_{≤max(m,|α|)}.
inline MarkedSet<Rational> random_marked_set(Rng& rng, const StronglyStableIdeal& J, int m, int density = 3) {
  std::vector<MarkedPolynomial<Rational>> polys;
  for (auto& alpha : J.basis()) {
    auto N = J.sous_escalier(std::max(m, alpha.degree()));
    ScalarPoly tail(J.num_vars());
    for (auto& x : N)
      if (uniform(rng, 0, 9) < density) {
        int c = uniform(rng, -3, 3);
        if (c != 0) tail.add_term(x, Rational(c));
      }
    polys.push_back({alpha, tail});
  }
  return MarkedSet<Rational>(J, m, std::move(polys));
}

/// A translation basis with one tail coefficient changed.
inline MarkedSet<Rational> perturbed_basis(Rng& rng, const StronglyStableIdeal& J, int m) {
  auto B = translation_basis(J, m, random_shift(rng, J.num_vars()));
  auto polys = B.polys();
  auto& f = polys[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(polys.size()) - 1))];
  auto N = J.sous_escalier(std::max(m, f.head.degree()));
  if (N.empty()) return B;
  auto& x = N[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(N.size()) - 1))];
  f.tail.add_term(x, Rational(uniform(rng, 1, 3)));
  return MarkedSet<Rational>(J, m, std::move(polys));
}

/// Instances for the criterion/oracle comparison: a third each of bases, perturbed bases and random sets.
inline MarkedSet<Rational> random_instance(Rng& rng, int k) {
  int n = uniform(rng, 2, 3);
  auto J = random_ideal(rng, n, 4, uniform(rng, 0, 2) > 0);
  int m = uniform(rng, 1, J.regularity() + 1);
  switch (k % 3) {
    case 0: return translation_basis(J, m, random_shift(rng, n));
    case 1: return perturbed_basis(rng, J, m);
    default: return random_marked_set(rng, J, m);
  }
}

// ---------------------------------------------------------------------------

inline PropertyResult criterion_matches_oracle(std::uint64_t seed = 1, int count = 200) {
  PropertyResult r{"criterion_matches_oracle", true, ""};
  Rng rng(seed);
  int bases = 0, non_bases = 0;
  for (int k = 0; k < count; ++k) {
    auto G = random_instance(rng, k);
    bool crit = check_marked_basis(G).is_basis;
    bool orc = linear_oracle(G).pass;
    (crit ? bases : non_bases)++;
    if (crit != orc && r.pass) {
      r.pass = false;
      r.detail = "instance " + std::to_string(k) + ": criterion " + (crit ? "basis" : "not basis") + ", oracle " +
                 (orc ? "pass" : "fail");
    }
  }
  if (r.pass) r.detail = std::to_string(count) + " instances, " + std::to_string(bases) + " bases, " +
                         std::to_string(non_bases) + " non-bases";
  return r;
}

inline PropertyResult certificate_soundness(std::uint64_t seed = 2, int count = 1000) {
  PropertyResult r{"certificate_soundness", true, ""};
  Rng rng(seed);
  std::uint64_t steps = 0;
  for (int k = 0; k < count; ++k) {
    int n = uniform(rng, 1, 3);
    auto J = random_ideal(rng, n, 4, uniform(rng, 0, 1) == 1);
    int m = uniform(rng, 1, J.regularity() + 1);
    auto G = k % 2 == 0 ? random_marked_set(rng, J, m) : translation_basis(J, m, random_shift(rng, n));
    auto g = random_poly(rng, n, J.regularity() + 2, uniform(rng, 1, 6));
    ReduceOptions opt;
    opt.strategy = k % 4 == 3 ? Strategy::StarSmallest : Strategy::StarLargest;
    auto cert = reduce(g, G, opt);
    steps += cert.step_count;
    if (!cert.verify(G) || cert.steps.size() != cert.step_count) {
      r.pass = false;
      r.detail = "re-expansion failed for instance " + std::to_string(k);
      return r;
    }
  }
  r.detail = std::to_string(count) + " certificates, " + std::to_string(steps) + " steps re-expanded";
  return r;
}

/// Nf(x_i x^β) = Nf(x_i Nf(x^β)) for all β of degree ≤ reg+2 on a verified basis.
inline std::string normal_form_commutation(const MarkedSet<Rational>& G) {
  int n = G.num_vars();
  int top = G.ideal().regularity() + 2;
  for (int d = 0; d <= top; ++d)
    for (auto& beta : monomials_of_degree(n, d))
      for (int i = 1; i <= n; ++i) {
        auto xi = Monomial::variable(n, i);
        auto lhs = normal_form(ScalarPoly::monomial(beta * xi), G);
        auto nb = normal_form(ScalarPoly::monomial(beta), G);
        auto rhs = normal_form(nb.times(xi), G);
        if (!(lhs == rhs)) return "x" + std::to_string(i) + " * " + to_string(beta);
      }
  return "";
}

inline PropertyResult normal_form_commutes(std::uint64_t seed = 3, int count = 200) {
  PropertyResult r{"normal_form_commutes", true, ""};
  Rng rng(seed);
  int verified = 0;
  for (int k = 0; k < count; ++k) {
    auto G = random_instance(rng, k);
    if (!check_marked_basis(G).is_basis) continue;
    ++verified;
    if (auto bad = normal_form_commutation(G); !bad.empty()) {
      r.pass = false;
      r.detail = "instance " + std::to_string(k) + " fails at " + bad;
      return r;
    }
  }
  r.detail = std::to_string(verified) + " verified bases";
  r.pass = verified > 0;
  return r;
}

/// No generator of degree m+1 is divisible by x_1.
inline bool level_drop_allowed(const StronglyStableIdeal& J, int m) {
  for (auto& g : J.basis())
    if (g.degree() == m + 1 && g.exponent(1) > 0) return false;
  return true;
}

inline PropertyResult level_agreement(std::uint64_t seed = 4, int count = 200) {
  PropertyResult r{"level_agreement", true, ""};
  Rng rng(seed);
  int compared = 0, bases = 0, lifted = 0;
  for (int k = 0; k < count; ++k) {
    int n = uniform(rng, 2, 3);
    auto J = random_ideal(rng, n, 4, true);
    std::vector<int> levels;
    for (int m = 2; m <= J.regularity() + 1; ++m)
      if (level_drop_allowed(J, m)) levels.push_back(m);
    if (levels.empty()) continue;
    int m = levels[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(levels.size()) - 1))];

    // A set satisfying both degree bounds: compare the two verdicts.
    auto G = k % 2 == 0 ? translation_basis(J, m - 1, random_shift(rng, n)) : perturbed_basis(rng, J, m - 1);
    CheckOptions full;
    full.force_completion = true;
    bool low = check_marked_basis(G, full).is_basis;
    bool high = check_marked_basis(G.at_level(m), full).is_basis;
    ++compared;
    bases += high;
    if (low != high) {
      r.pass = false;
      r.detail = "instance " + std::to_string(k) + " (m=" + std::to_string(m) + ") disagrees";
      return r;
    }
    // A basis at level m has tails that already fit level m−1.
    auto H = random_marked_set(rng, J, m, 1);
    if (check_marked_basis(H, full).is_basis) {
      ++lifted;
      try {
        if (!check_marked_basis(H.at_level(m - 1), full).is_basis) throw InvalidMarkedSet("not a basis at m-1");
      } catch (const InvalidMarkedSet& e) {
        r.pass = false;
        r.detail = "instance " + std::to_string(k) + ": basis at m=" + std::to_string(m) + " but " + e.what();
        return r;
      }
    }
  }
  r.detail = std::to_string(compared) + " level pairs (" + std::to_string(bases) + " bases), " +
             std::to_string(lifted) + " random bases dropped a level";
  r.pass = compared > 0 && bases > 0 && bases < compared;
  return r;
}

/// Brute-force count of factorizations m = g·c with g ∈ B and min(g) ≥ max(c).
inline int star_factorizations(const StronglyStableIdeal& J, const Monomial& m) {
  int count = 0;
  for (auto& g : J.basis()) {
    if (!g.divides(m)) continue;
    Monomial c = m / g;
    if (c.is_one() || g.min_var() >= c.max_var()) ++count;
  }
  return count;
}

inline PropertyResult star_uniqueness(std::uint64_t seed = 5, int count = 80) {
  PropertyResult r{"star_uniqueness", true, ""};
  Rng rng(seed);
  std::size_t checked = 0;
  for (int k = 0; k < count; ++k) {
    bool in_s = k % 4 == 3;
    int n = uniform(rng, 1, 4);
    auto J0 = random_ideal(rng, n, 4, uniform(rng, 0, 1) == 1);
    auto J = in_s ? J0.homogenized() : J0;
    for (int d = 0; d <= J.regularity() + 3; ++d)
      for (auto& m : monomials_of_degree(n, d, J.lowest_var())) {
        if (!J.contains(m)) continue;
        ++checked;
        auto dec = J.star_decompose(m);
        if (star_factorizations(J, m) != 1 || !(dec.generator * dec.cofactor == m) ||
            !J.is_basis_element(dec.generator)) {
          r.pass = false;
          r.detail = "monomial " + to_string(m) + " has no unique star decomposition";
          return r;
        }
      }
  }
  r.detail = std::to_string(checked) + " ideal monomials";
  return r;
}

inline PropertyResult desc_lex(std::uint64_t seed = 6, int count = 30) {
  PropertyResult r{"desc_lex", true, ""};
  Rng rng(seed);
  std::size_t checked = 0, same_degree = 0;
  for (int k = 0; k < count; ++k) {
    int n = uniform(rng, 2, 4);
    auto J = random_ideal(rng, n, 4, uniform(rng, 0, 1) == 1);
    auto N = J.sous_escalier(5);
    for (auto& eps : N)
      for (int dd = 1; dd + eps.degree() <= 6; ++dd)
        for (auto& delta : monomials_of_degree(n, dd)) {
          Monomial m = eps * delta;
          if (!J.contains(m)) continue;
          ++checked;
          auto dec = J.star_decompose(m);
          bool ok = lex_compare(dec.cofactor, delta) < 0;
          if (dec.cofactor.degree() == delta.degree()) {
            ++same_degree;
            ok = ok && borel_compare(dec.cofactor, delta) == BorelRelation::Less;
          }
          if (!ok) {
            r.pass = false;
            r.detail = to_string(eps) + " * " + to_string(delta) + " decomposes with cofactor " + to_string(dec.cofactor);
            return r;
          }
        }
  }
  r.detail = std::to_string(checked) + " products, " + std::to_string(same_degree) + " with equal degree";
  return r;
}

/// The pair from the literature showing <_∗ is not multiplicative: x_0x_2x_3 <_∗ x_1²x_2,
/// but after multiplying both by x_3 the order flips.
inline bool star_order_counterexample() {
  auto J = make_ideal(Ring::S, 3, {"x3^2", "x3*x2", "x3*x1", "x2^2", "x2*x1"});
  auto a = parse_monomial("x0*x2*x3", 3), b = parse_monomial("x1^2*x2", 3);
  auto x3 = Monomial::variable(3, 3);
  return J.star_compare(a, b) < 0 && J.star_compare(a * x3, b * x3) > 0;
}

inline PropertyResult star_order_axioms(std::uint64_t seed = 7, int count = 20) {
  PropertyResult r{"star_order_axioms", true, ""};
  Rng rng(seed);
  std::size_t pairs = 0, triples = 0;
  for (int k = 0; k < count && r.pass; ++k) {
    int n = uniform(rng, 1, 3);
    auto J0 = random_ideal(rng, n, 3, uniform(rng, 0, 1) == 1);
    auto J = k % 2 ? J0.homogenized() : J0;
    std::vector<Monomial> ms;
    for (int d = 0; d <= J.regularity() + 3; ++d)
      for (auto& m : monomials_of_degree(n, d, J.lowest_var()))
        if (J.contains(m)) ms.push_back(m);
    if (ms.size() > 120) {
      std::shuffle(ms.begin(), ms.end(), rng);
      ms.resize(120);
    }
    for (auto& a : ms)
      for (auto& b : ms) {
        ++pairs;
        auto ab = J.star_compare(a, b), ba = J.star_compare(b, a);
        bool ok = (a == b) ? ab == 0 : (ab != 0 && (ab < 0) == (ba > 0));
        if (!ok) {
          r.pass = false;
          r.detail = "antisymmetry or totality fails for " + to_string(a) + ", " + to_string(b);
        }
      }
    for (int t = 0; t < 2000 && r.pass && !ms.empty(); ++t) {
      auto& a = ms[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(ms.size()) - 1))];
      auto& b = ms[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(ms.size()) - 1))];
      auto& c = ms[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(ms.size()) - 1))];
      ++triples;
      if (J.star_compare(a, b) < 0 && J.star_compare(b, c) < 0 && !(J.star_compare(a, c) < 0)) {
        r.pass = false;
        r.detail = "transitivity fails for " + to_string(a) + ", " + to_string(b) + ", " + to_string(c);
      }
    }
  }
  if (!r.pass) return r;
  if (!star_order_counterexample()) {
    r.pass = false;
    r.detail = "the non-multiplicative pair does not flip";
    return r;
  }
  r.detail = std::to_string(pairs) + " pairs, " + std::to_string(triples) + " triples, counterexample flips";
  return r;
}

inline PropertyResult homogenization_roundtrips(std::uint64_t seed = 8) {
  PropertyResult r{"homogenization_roundtrips", true, ""};
  Rng rng(seed);
  for (int k = 0; k < 20; ++k) {
    auto f = random_poly(rng, uniform(rng, 1, 4), 5, 6);
    if (!(f.homogenized().dehomogenized() == f)) {
      r.pass = false;
      r.detail = "polynomial " + to_string(f);
      return r;
    }
  }
  for (int k = 0; k < 20; ++k) {
    auto J = random_saturated_ideal(rng, uniform(rng, 1, 4), 4);
    if (!(J.dehomogenized().homogenized() == J)) {
      r.pass = false;
      r.detail = "ideal roundtrip " + std::to_string(k);
      return r;
    }
  }
  int sets = 0;
  for (int k = 0; sets < 20; ++k) {
    auto G = random_instance(rng, 0);
    Completion<Rational> comp;
    try {
      comp = compute_completion(G);
    } catch (const NoCompletion<Rational>&) {
      continue;
    }
    ++sets;
    auto [G2, comp2] = drop_to_affine(lift_to_homogeneous(G, comp));
    bool same = G2.level() == G.level() && G2.polys() == G.polys() && comp2.polys == comp.polys;
    if (!same) {
      r.pass = false;
      r.detail = "marked-set roundtrip " + std::to_string(k);
      return r;
    }
  }
  r.detail = "20 polynomials, 20 saturated ideals, 20 marked sets with completions";
  return r;
}

inline std::string scheme_bytes(const StronglyStableIdeal& J, int m, unsigned workers) {
  SchemeOptions opt;
  opt.workers = workers;
  std::ostringstream out;
  write_scheme(out, marked_scheme(J, m, opt));
  return out.str();
}

inline PropertyResult reduction1_determinism(std::uint64_t seed = 9, int count = 6) {
  PropertyResult r{"reduction1_determinism", true, ""};
  Rng rng(seed);
  for (int k = 0; k < count; ++k) {
    auto J = random_ideal(rng, uniform(rng, 2, 3), 4, k % 2 == 0);
    int m = uniform(rng, 1, J.regularity());
    auto one = scheme_bytes(J, m, 1);
    for (unsigned w : {1u, 2u, 4u})
      if (scheme_bytes(J, m, w) != one) {
        r.pass = false;
        r.detail = "scheme output differs with " + std::to_string(w) + " workers";
        return r;
      }
  }
  r.detail = std::to_string(count) + " schemes, workers 1/2/4 byte-identical";
  return r;
}

inline std::vector<std::function<PropertyResult()>> all_properties() {
  return {[] { return criterion_matches_oracle(); }, [] { return certificate_soundness(); },
          [] { return normal_form_commutes(); },     [] { return level_agreement(); },
          [] { return star_uniqueness(); },          [] { return desc_lex(); },
          [] { return star_order_axioms(); },        [] { return homogenization_roundtrips(); },
          [] { return reduction1_determinism(); }};
}

}  // namespace mb::props

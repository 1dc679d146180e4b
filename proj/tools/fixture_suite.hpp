#pragma once

// Named checks over the shipped fixture corpus, and the grouping of those
// checks into the eight acceptance criteria.

#include <chrono>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "markedbases/markedbases.hpp"
#include "property_suite.hpp"

namespace mb::suite {

using props::PropertyResult;

struct FixtureContext {
  std::filesystem::path dir;
  unsigned workers = 1;

  std::filesystem::path path(const std::string& name) const { return dir / name; }

  /// Schemes are expensive; each ideal file is turned into a scheme once per context.
  const SchemeIdeal& scheme(const std::string& ideal_file, int m) const {
    std::lock_guard lock(cache_->mu);
    auto key = ideal_file + "@" + std::to_string(m);
    auto it = cache_->schemes.find(key);
    if (it != cache_->schemes.end()) return *it->second;
    SchemeOptions opt;
    opt.workers = workers;
    auto S = std::make_unique<SchemeIdeal>(marked_scheme(load_ideal(path(ideal_file)).ideal, m, opt));
    return *cache_->schemes.emplace(key, std::move(S)).first->second;
  }

 private:
  struct Cache {
    std::mutex mu;
    std::map<std::string, std::unique_ptr<SchemeIdeal>> schemes;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

struct FixtureCheck {
  std::string name;
  std::string summary;
  std::function<PropertyResult(const FixtureContext&)> run;
};

namespace detail {

inline PropertyResult verdict(const std::string& name, bool pass, std::string detail) {
  return {name, pass, std::move(detail)};
}

inline PropertyResult scheme_counts(const FixtureContext& ctx, const std::string& name, const std::string& ideal,
                                    std::size_t params, std::size_t gens, std::uint32_t lo, std::uint32_t hi) {
  const auto& S = ctx.scheme(ideal, 3);
  auto [dlo, dhi] = S.degree_range();
  bool count_ok = S.raw_count == gens || S.generators.size() == gens;
  std::string d = "parameters " + std::to_string(S.catalogue.size()) + ", equations raw " +
                  std::to_string(S.raw_count) + " dedup " + std::to_string(S.generators.size()) + ", degrees [" +
                  std::to_string(dlo) + "," + std::to_string(dhi) + "]";
  bool degrees_ok = hi == 0 || (dlo == lo && dhi == hi);
  return verdict(name, S.catalogue.size() == params && count_ok && degrees_ok, d);
}

inline PropertyResult tangent(const FixtureContext& ctx, const std::string& name, const std::string& ideal,
                              const MarkedSet<Rational>& B, std::size_t expected) {
  const auto& S = ctx.scheme(ideal, 3);
  auto p = point_from_basis(S, B, ctx.workers);
  auto t = tangent_dimension(S, p, ctx.workers);
  return verdict(name, t == expected, "tangent dimension " + std::to_string(t));
}

template <Coefficient C>
PropertyResult basis(const std::string& name, const MarkedSet<C>& G, const std::string& what) {
  auto v = check_marked_basis(G);
  std::string d = what + ": " + std::to_string(v.syzygy_checked) + " syzygy residues, " +
                  std::to_string(v.syzygy_failures.size()) + " nonzero";
  if (v.completion_checked) d += ", " + std::to_string(v.completion_failures.size()) + " completion failures";
  return verdict(name, v.is_basis, d);
}

inline PropertyResult hilbert_value(const FixtureContext& ctx, const std::string& name, const std::string& ideal,
                                    const std::string& expected) {
  auto J = load_ideal(ctx.path(ideal)).ideal;
  bool affine = J.ring() == Ring::R;
  auto P = hilbert_polynomial(J, affine);
  auto s = to_string(P);
  return verdict(name, s == expected, std::string(affine ? "affine " : "") + "Hilbert polynomial " + s);
}

/// For Artinian 𝔧: ᵃH(t) = |N(𝔧)| for every t ≥ reg−1.
inline PropertyResult artinian_stability(const FixtureContext& ctx, const std::string& name, const std::string& ideal) {
  auto J = load_ideal(ctx.path(ideal)).ideal;
  auto total = J.sous_escalier_all().size();
  for (int t = std::max(0, J.regularity() - 1); t <= J.regularity() + 3; ++t)
    if (hilbert_function(J, t, true) != total)
      return verdict(name, false, "affine Hilbert function at " + std::to_string(t) + " differs from |N|");
  return verdict(name, true, "affine Hilbert function constant " + std::to_string(total) + " from reg-1");
}

inline PropertyResult segment(const FixtureContext& ctx, const std::string& name, const std::string& ideal) {
  auto f = load_ideal(ctx.path(ideal));
  std::vector<std::int64_t> w(f.weights->begin(), f.weights->end());
  bool seg = f.ideal.is_affine_segment(3, WeightVector::descending(w));
  return verdict(name, seg, std::string("affine 3-segment: ") + (seg ? "yes" : "no"));
}

inline std::vector<Rational> zero_point(const MarkedSetFile& f) {
  return std::vector<Rational>(f.parameters.size(), Rational(0));
}

struct NegativeReport {
  bool syzygy_ok = false;
  bool completion_fails = false;
  bool witness_found = false;
  std::vector<std::string> border_failures;
};

/// The failing set over (x_3, x_2²): verdicts and the border subset A.
inline NegativeReport negative_report(const FixtureContext& ctx) {
  auto G = load_marked_set(ctx.path("x3x2sq.mset")).scalar(3);
  CheckOptions opt;
  opt.force_completion = true;
  auto v = check_marked_basis(G, opt);
  NegativeReport r;
  r.syzygy_ok = v.syzygy_ok;
  r.completion_fails = v.completion_checked && !v.completion_ok;
  auto witness = parse_monomial("x1*x3^2", 3);
  for (auto& f : v.completion_failures) r.witness_found = r.witness_found || f.head == witness;
  for (auto s : {"x1*x2^2", "x1*x3", "x1^2*x3", "x2*x3", "x1*x2*x3"}) {
    auto nf = reduce(ScalarPoly::monomial(parse_monomial(s, 3)), G).result;
    if (nf.degree() > 3) r.border_failures.push_back(std::string(s) + " reduces to degree " + std::to_string(nf.degree()));
  }
  return r;
}

}  // namespace detail

inline std::vector<FixtureCheck> fixture_checks() {
  using namespace detail;
  std::vector<FixtureCheck> c;
  c.push_back({"kx1x2_basis", "K[x1,x2] example is a [j,3]-marked basis", [](const FixtureContext& ctx) {
                 auto G = load_marked_set(ctx.path("kx1x2.mset")).scalar();
                 auto r = basis("kx1x2_basis", G, "scalar");
                 bool orc = linear_oracle(G).pass;
                 r.pass = r.pass && orc;
                 r.detail += std::string(", oracle ") + (orc ? "pass" : "fail");
                 return r;
               }});
  c.push_back({"kx1x2_completion", "the five completion polynomials, bit-exact", [](const FixtureContext& ctx) {
                 auto G = load_marked_set(ctx.path("kx1x2.mset")).scalar();
                 auto comp = compute_completion(G);
                 auto expected = read_json_file(ctx.path("kx1x2.completion.json")).at("polys");
                 bool ok = comp.polys.size() == expected.size();
                 std::size_t same = 0;
                 for (auto& e : expected) {
                   auto want = to_string(parse_poly(e.get<std::string>(), 2));
                   for (auto& f : comp.polys)
                     if (to_string(f.poly()) == want) ++same;
                 }
                 ok = ok && same == expected.size();
                 return verdict("kx1x2_completion", ok,
                                std::to_string(same) + " of " + std::to_string(expected.size()) + " polynomials match");
               }});
  c.push_back({"x3x2sq_negative", "(x3,x2^2) set: syzygies lift, completion fails at x1*x3^2",
               [](const FixtureContext& ctx) {
                 auto r = negative_report(ctx);
                 bool ok = r.syzygy_ok && r.completion_fails && r.witness_found;
                 return verdict("x3x2sq_negative", ok,
                                std::string("syzygy condition ") + (r.syzygy_ok ? "holds" : "fails") +
                                    ", completion condition " + (r.completion_fails ? "fails" : "holds") +
                                    ", x1*x3^2 " + (r.witness_found ? "among" : "not among") + " the failures");
               }});
  c.push_back({"x3x2sq_border_subset", "(x3,x2^2) set: the border subset A reduces to degree <= 3",
               [](const FixtureContext& ctx) {
                 auto r = negative_report(ctx);
                 std::string d = r.border_failures.empty() ? "all five reduce to degree <= 3" : "";
                 for (auto& f : r.border_failures) d += (d.empty() ? "" : "; ") + f;
                 return verdict("x3x2sq_border_subset", r.border_failures.empty(), d);
               }});
  c.push_back({"scheme_j541", "MarkedScheme on the 7-variable ideal, m=3: 512 / 2160 / [3,5]",
               [](const FixtureContext& ctx) { return scheme_counts(ctx, "scheme_j541", "j541.ideal", 512, 2160, 3, 5); }});
  c.push_back({"scheme_gor5", "MarkedScheme on the 5-variable ideal, m=3: 204 / 576",
               [](const FixtureContext& ctx) { return scheme_counts(ctx, "scheme_gor5", "gor5.ideal", 204, 576, 0, 0); }});
  c.push_back({"g_t_basis", "G_t is a basis identically in t", [](const FixtureContext& ctx) {
                 return basis("g_t_basis", load_marked_set(ctx.path("g_t.mset")).symbolic(), "over Q[t]");
               }});
  c.push_back({"f_t_basis", "the T-family is a basis identically in T", [](const FixtureContext& ctx) {
                 return basis("f_t_basis", load_marked_set(ctx.path("f_t.mset")).symbolic(), "over Q[T]");
               }});
  c.push_back({"l_basis", "the l point is a basis", [](const FixtureContext& ctx) {
                 return basis("l_basis", load_marked_set(ctx.path("l.mset")).scalar(), "scalar");
               }});
  c.push_back({"v_basis", "the v point is a basis", [](const FixtureContext& ctx) {
                 return basis("v_basis", load_marked_set(ctx.path("v.mset")).scalar(), "scalar");
               }});
  c.push_back({"tangent_g0", "tangent dimension 112 at G_0", [](const FixtureContext& ctx) {
                 auto f = load_marked_set(ctx.path("g_t.mset"));
                 return tangent(ctx, "tangent_g0", "j541.ideal", f.scalar(std::nullopt, zero_point(f)), 112);
               }});
  c.push_back({"tangent_l", "tangent dimension 161 at l", [](const FixtureContext& ctx) {
                 return tangent(ctx, "tangent_l", "j541.ideal", load_marked_set(ctx.path("l.mset")).scalar(), 161);
               }});
  c.push_back({"tangent_v", "tangent dimension 153 at v", [](const FixtureContext& ctx) {
                 return tangent(ctx, "tangent_v", "j541.ideal", load_marked_set(ctx.path("v.mset")).scalar(), 153);
               }});
  c.push_back({"tangent_f0", "tangent dimension 60 at T=0", [](const FixtureContext& ctx) {
                 auto f = load_marked_set(ctx.path("f_t.mset"));
                 return tangent(ctx, "tangent_f0", "gor5.ideal", f.scalar(std::nullopt, zero_point(f)), 60);
               }});
  c.push_back({"hilbert_j541", "affine Hilbert polynomial 16", [](const FixtureContext& ctx) {
                 return hilbert_value(ctx, "hilbert_j541", "j541.ideal", "16");
               }});
  c.push_back({"hilbert_gor5", "affine Hilbert polynomial 12", [](const FixtureContext& ctx) {
                 return hilbert_value(ctx, "hilbert_gor5", "gor5.ideal", "12");
               }});
  c.push_back({"hilbert_x3x2sq", "affine Hilbert polynomial 2t+1", [](const FixtureContext& ctx) {
                 return hilbert_value(ctx, "hilbert_x3x2sq", "x3x2sq.ideal", "2*t + 1");
               }});
  c.push_back({"hilbert_p7", "Hilbert polynomial 7", [](const FixtureContext& ctx) {
                 return hilbert_value(ctx, "hilbert_p7", "p7.ideal", "7");
               }});
  c.push_back({"hilbert_jlex16", "affine Hilbert polynomial 16 for the lex ideal", [](const FixtureContext& ctx) {
                 return hilbert_value(ctx, "hilbert_jlex16", "jlex16.ideal", "16");
               }});
  c.push_back({"satiety_gin5", "satiety 4", [](const FixtureContext& ctx) {
                 auto J = load_ideal(ctx.path("gin5.ideal")).ideal;
                 return verdict("satiety_gin5", J.satiety() == 4, "satiety " + std::to_string(J.satiety()));
               }});
  c.push_back({"artinian_j541", "affine Hilbert function stable from reg-1", [](const FixtureContext& ctx) {
                 return artinian_stability(ctx, "artinian_j541", "j541.ideal");
               }});
  c.push_back({"artinian_gor5", "affine Hilbert function stable from reg-1", [](const FixtureContext& ctx) {
                 return artinian_stability(ctx, "artinian_gor5", "gor5.ideal");
               }});
  c.push_back({"segment_j541", "affine 3-segment for the stored weights", [](const FixtureContext& ctx) {
                 return segment(ctx, "segment_j541", "j541.ideal");
               }});
  c.push_back({"segment_gor5", "affine 3-segment for the stored weights", [](const FixtureContext& ctx) {
                 return segment(ctx, "segment_gor5", "gor5.ideal");
               }});
  return c;
}

inline const FixtureCheck* find_check(const std::vector<FixtureCheck>& checks, const std::string& name) {
  for (auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

struct CriterionResult {
  int number = 0;
  std::string title;
  bool pass = false;
  std::vector<PropertyResult> parts;
  double seconds = 0;
};

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> fixtures;
  bool properties = false;
};

inline std::vector<Criterion> criteria() {
  return {
      {1, "7-variable MarkedScheme: 512 parameters, 2160 equations, degrees 3..5", {"scheme_j541"}},
      {2, "5-variable MarkedScheme: 204 parameters, 576 equations", {"scheme_gor5"}},
      {3, "tangent dimensions 112, 161, 153, 60", {"tangent_g0", "tangent_l", "tangent_v", "tangent_f0"}},
      {4, "symbolic and scalar basis verdicts", {"g_t_basis", "f_t_basis", "l_basis", "v_basis"}},
      {5, "completion of the K[x1,x2] example", {"kx1x2_basis", "kx1x2_completion"}},
      {6, "negative criterion fixture over (x3,x2^2)", {"x3x2sq_negative", "x3x2sq_border_subset"}},
      {7, "property suite", {}, true},
      {8, "Hilbert fixtures", {"hilbert_j541", "hilbert_gor5", "hilbert_x3x2sq", "hilbert_p7", "hilbert_jlex16", "satiety_gin5"}},
  };
}

inline CriterionResult run_criterion(const Criterion& c, const FixtureContext& ctx) {
  auto t0 = std::chrono::steady_clock::now();
  CriterionResult out{c.number, c.title, true, {}, 0};
  auto checks = fixture_checks();
  auto record = [&](PropertyResult r) {
    out.pass = out.pass && r.pass;
    out.parts.push_back(std::move(r));
  };
  for (auto& name : c.fixtures) {
    try {
      record(find_check(checks, name)->run(ctx));
    } catch (const std::exception& e) {
      record({name, false, std::string("error: ") + e.what()});
    }
  }
  if (c.properties)
    for (auto& p : props::all_properties()) record(p());
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

}  // namespace mb::suite

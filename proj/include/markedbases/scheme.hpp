#pragma once

// Equations of the marked family Mf(𝔧,m) in the tail parameters C, family
// points and Zariski tangent dimensions.

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "markedbases/criterion.hpp"
#include "markedbases/linalg.hpp"
#include "markedbases/parallel.hpp"

namespace mb {

/// One parameter C_{αγ} per generator x^α and sous-escalier monomial x^γ of degree ≤ max(m0,|α|).
class ParameterCatalogue {
 public:
  struct Entry {
    Monomial alpha;
    Monomial gamma;
  };

  ParameterCatalogue() = default;
  ParameterCatalogue(const StronglyStableIdeal& J, int m0) : m0_(m0) {
    for (auto& a : generator_order(J)) {
      for (auto& g : J.sous_escalier(std::max(m0, a.degree()))) {
        auto idx = table_.index_of(param_name(a, g));
        entries_.push_back({a, g});
        index_.emplace(key(a, g), idx);
      }
    }
  }

  /// Generators Lex-descending, the order used for entries and obligations.
  static std::vector<Monomial> generator_order(const StronglyStableIdeal& J) {
    std::vector<Monomial> gens = J.basis();
    std::sort(gens.begin(), gens.end(), LexGreater{});
    return gens;
  }

  int level() const { return m0_; }
  std::size_t size() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }
  const ParamTable& names() const { return table_; }
  ParamTable& names() { return table_; }

  std::optional<std::uint32_t> find(const Monomial& alpha, const Monomial& gamma) const {
    auto it = index_.find(key(alpha, gamma));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

 private:
  static std::string key(const Monomial& a, const Monomial& g) { return exponent_tuple(a) + ";" + exponent_tuple(g); }

  int m0_ = 0;
  std::vector<Entry> entries_;
  ParamTable table_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

/// f_α = x^α − Σ C_{αγ} x^γ.
inline MarkedSet<CoeffPoly> generic_marked_set(const StronglyStableIdeal& J, int m0, const ParameterCatalogue& cat) {
  std::vector<MarkedPolynomial<CoeffPoly>> polys;
  for (auto& a : J.basis()) polys.push_back({a, ParamPoly(J.num_vars())});
  std::unordered_map<Monomial, std::size_t> at;
  for (std::size_t k = 0; k < polys.size(); ++k) at.emplace(polys[k].head, k);
  for (std::uint32_t idx = 0; idx < cat.size(); ++idx) {
    auto& e = cat.entries()[idx];
    polys[at.at(e.alpha)].tail.add_term(e.gamma, CoeffPoly::variable(idx));
  }
  return MarkedSet<CoeffPoly>(J, m0, std::move(polys));
}

struct Provenance {
  enum class Source { Reduction1, Reduction2 };
  Source source = Source::Reduction1;
  Monomial head;  ///< x^α for Reduction1, x^β for Reduction2
  int var = 0;    ///< x_i for Reduction1
  Monomial gamma; ///< the x-monomial whose coefficient this is

  std::string describe() const {
    std::string s = source == Source::Reduction1 ? "reduction1 head=" + to_string(head) + " var=x" + std::to_string(var)
                                                 : "reduction2 head=" + to_string(head);
    return s + " coeff-of=" + to_string(gamma);
  }
};

struct Equation {
  CoeffPoly poly;
  Provenance provenance;
};

namespace detail {

/// Nonzero coefficients of f, in print order.
inline void collect_coefficients(const ParamPoly& f, const Provenance& base, std::vector<Equation>& out) {
  for (auto* t : print_order(f.terms())) {
    Provenance p = base;
    p.gamma = t->first;
    out.push_back({t->second, p});
  }
}

}  // namespace detail

struct SchemeOptions {
  unsigned workers = 1;
  std::uint64_t fuel = 1'000'000;
};

/// All coefficients of the reduced forms of x_i f_α, x_i > min(x^α).
inline std::vector<Equation> reduction1(const MarkedSet<CoeffPoly>& G, const SchemeOptions& opt = {}) {
  auto obligations = syzygy_obligations(G.ideal());
  ReduceOptions ro{Strategy::StarLargest, opt.fuel, false};
  auto residues = parallel_map(
      obligations.size(), [&](std::size_t k) { return syzygy_residue(G, obligations[k], ro); }, opt.workers);
  std::vector<Equation> out;
  for (std::size_t k = 0; k < obligations.size(); ++k) {
    Provenance p{Provenance::Source::Reduction1, obligations[k].alpha, obligations[k].var, Monomial{}};
    detail::collect_coefficients(residues[k], p, out);
  }
  return out;
}

/// Coefficients of the part of degree > m0 of the reduced form of each x^β ∈ 𝔧_{≤m0}∖B_𝔧.
inline std::vector<Equation> reduction2(const MarkedSet<CoeffPoly>& G, const SchemeOptions& opt = {}) {
  int m0 = G.level();
  auto heads = completion_heads(G.ideal(), m0);
  ReduceOptions ro{Strategy::StarLargest, opt.fuel, false};
  auto forms = parallel_map(
      heads.size(), [&](std::size_t k) { return reduce(ParamPoly::monomial(heads[k]), G, ro).result.part_above(m0); },
      opt.workers);
  std::vector<Equation> out;
  for (std::size_t k = 0; k < heads.size(); ++k) {
    Provenance p{Provenance::Source::Reduction2, heads[k], 0, Monomial{}};
    detail::collect_coefficients(forms[k], p, out);
  }
  return out;
}

/// Generators of the ideal 𝔄 ⊂ ℚ[C] cutting out Mf(𝔧,m).
struct SchemeIdeal {
  StronglyStableIdeal ideal;
  int level = 0;            ///< the requested m
  int optimized_level = 0;  ///< m0
  bool reduction2_skipped = false;
  ParameterCatalogue catalogue;
  std::size_t raw_count = 0;  ///< nonzero coefficients before removing duplicates
  std::vector<Equation> generators;

  /// Smallest and largest total degree among the generators.
  std::pair<std::uint32_t, std::uint32_t> degree_range() const {
    if (generators.empty()) return {0, 0};
    std::uint32_t lo = UINT32_MAX, hi = 0;
    for (auto& g : generators) {
      lo = std::min(lo, g.poly.total_degree());
      hi = std::max(hi, g.poly.total_degree());
    }
    return {lo, hi};
  }

  /// Generator count per total degree.
  std::map<std::uint32_t, std::size_t> degree_histogram() const {
    std::map<std::uint32_t, std::size_t> h;
    for (auto& g : generators) ++h[g.poly.total_degree()];
    return h;
  }
};

namespace detail {

struct CoeffPolyHash {
  std::size_t operator()(const CoeffPoly& p) const { return p.hash(); }
};

inline std::vector<Equation> dedup(std::vector<Equation> eqs) {
  std::unordered_set<CoeffPoly, CoeffPolyHash> seen;
  std::vector<Equation> out;
  for (auto& e : eqs)
    if (seen.insert(e.poly).second) out.push_back(std::move(e));
  return out;
}

}  // namespace detail

/// Whether MarkedScheme may skip Reduction2: m0 = reg−1 and N(𝔧)_{≤reg−1} = N(𝔧)_{≤reg}.
inline bool reduction2_shortcut(const StronglyStableIdeal& J, int m0) {
  int reg = J.regularity();
  return m0 == reg - 1 && J.sous_escalier(reg - 1) == J.sous_escalier(reg);
}

inline SchemeIdeal marked_scheme(const StronglyStableIdeal& J, int m, const SchemeOptions& opt = {}) {
  if (J.ring() != Ring::R) throw std::invalid_argument("marked_scheme expects an ideal of R");
  if (m < 1) throw std::invalid_argument("level m must be a positive integer");
  SchemeIdeal S;
  S.ideal = J;
  S.level = m;
  S.optimized_level = J.optimized_level(m);
  S.catalogue = ParameterCatalogue(J, S.optimized_level);
  auto G = generic_marked_set(J, S.optimized_level, S.catalogue);
  auto eqs = reduction1(G, opt);
  S.reduction2_skipped = reduction2_shortcut(J, S.optimized_level);
  if (!S.reduction2_skipped) {
    auto more = reduction2(G, opt);
    eqs.insert(eqs.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  }
  S.raw_count = eqs.size();
  S.generators = detail::dedup(std::move(eqs));
  return S;
}

/// MarkedScheme(Aff(J), Sat(Aff(J))−1), with the level floored at 1.
inline SchemeIdeal hilbert_open_subset(const StronglyStableIdeal& J, const SchemeOptions& opt = {}) {
  auto a = J.dehomogenized();
  return marked_scheme(a, std::max(1, a.satiety() - 1), opt);
}

/// Re-runs the single reduction named by the provenance and returns that coefficient.
inline CoeffPoly rederive(const SchemeIdeal& S, const Provenance& p) {
  auto G = generic_marked_set(S.ideal, S.optimized_level, S.catalogue);
  if (p.source == Provenance::Source::Reduction1) return syzygy_residue(G, {p.head, p.var}, {}).coeff(p.gamma);
  return reduce(ParamPoly::monomial(p.head), G).result.coeff(p.gamma);
}

struct UnsupportedTailMonomial : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotOnScheme : std::runtime_error {
  NotOnScheme(std::size_t idx, const std::string& what)
      : std::runtime_error("point is not on the scheme: generator " + std::to_string(idx) + " (" + what +
                           ") does not vanish"),
        generator(idx) {}
  std::size_t generator;
};

struct FamilyPoint {
  std::vector<Rational> values;  ///< indexed by parameter
};

/// C_{αγ} := coefficient of x^γ in T(f_α). Does not check the scheme equations.
inline FamilyPoint point_coordinates(const ParameterCatalogue& cat, const MarkedSet<Rational>& B) {
  FamilyPoint p;
  p.values.assign(cat.size(), Rational(0));
  for (auto& f : B.polys())
    for (auto& [g, c] : f.tail.terms()) {
      auto idx = cat.find(f.head, g);
      if (!idx)
        throw UnsupportedTailMonomial("tail of " + to_string(f.head) + " uses " + to_string(g) +
                                      ", which has no parameter in the catalogue");
      p.values[*idx] = c;
    }
  return p;
}

/// Index of the first generator not vanishing at the point, if any.
inline std::optional<std::size_t> first_nonvanishing(const SchemeIdeal& S, const FamilyPoint& p, unsigned workers = 1) {
  auto vals = parallel_map(
      S.generators.size(), [&](std::size_t k) { return is_zero(S.generators[k].poly.evaluate(p.values)); }, workers);
  for (std::size_t k = 0; k < vals.size(); ++k)
    if (!vals[k]) return k;
  return std::nullopt;
}

inline FamilyPoint point_from_basis(const SchemeIdeal& S, const MarkedSet<Rational>& B, unsigned workers = 1) {
  if (!(B.ideal() == S.ideal)) throw std::invalid_argument("marked set and scheme use different ideals");
  auto p = point_coordinates(S.catalogue, B);
  if (auto k = first_nonvanishing(S, p, workers)) throw NotOnScheme(*k, S.generators[*k].provenance.describe());
  return p;
}

/// The Jacobian of the generators at p, one sparse row per generator.
inline std::vector<SparseRow> jacobian_at(const SchemeIdeal& S, const FamilyPoint& p, unsigned workers = 1) {
  return parallel_map(
      S.generators.size(),
      [&](std::size_t k) {
        SparseRow r;
        for (auto& [v, d] : S.generators[k].poly.gradient(p.values)) r.emplace_back(v, d);
        return r;
      },
      workers);
}

/// |C| − rank of the Jacobian at p.
inline std::size_t tangent_dimension(const SchemeIdeal& S, const FamilyPoint& p, unsigned workers = 1) {
  if (auto k = first_nonvanishing(S, p, workers)) throw NotOnScheme(*k, S.generators[*k].provenance.describe());
  auto rank = exact_rank_sparse_pivoting(jacobian_at(S, p, workers));
  return S.catalogue.size() - rank;
}

}  // namespace mb

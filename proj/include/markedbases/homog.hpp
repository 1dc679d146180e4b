#pragma once

// Passing between [𝔧,m]-marked sets in R and 𝔧^h_{≥m}-marked sets in S.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "markedbases/linalg.hpp"
#include "markedbases/marked.hpp"

namespace mb {

struct NotTruncationOfSaturated : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

template <Coefficient C>
struct HomogMarkedPolynomial {
  Monomial head;
  Polynomial<C> tail;
  bool superminimal = false;

  Polynomial<C> poly() const {
    Polynomial<C> p = -tail;
    p.add_term(head, C(1));
    return p;
  }
};

/// A J_{≥m}-marked set for a saturated strongly stable J ⊂ S.
template <Coefficient C>
class HomogMarkedSet {
 public:
  HomogMarkedSet(StronglyStableIdeal J, int m, std::vector<HomogMarkedPolynomial<C>> polys)
      : ideal_(std::move(J)), m_(m) {
    if (ideal_.ring() != Ring::S) throw NotTruncationOfSaturated("homogeneous marked sets live over an ideal of S");
    if (!ideal_.is_saturated()) throw NotTruncationOfSaturated("the ideal of S must be saturated");
    auto heads = ideal_.truncation_basis(m);
    if (polys.size() != heads.size())
      throw InvalidMarkedSet("expected " + std::to_string(heads.size()) + " polynomials for the truncation, got " +
                             std::to_string(polys.size()));
    polys_.resize(heads.size());
    std::vector<bool> seen(heads.size(), false);
    for (auto& f : polys) {
      auto it = std::find(heads.begin(), heads.end(), f.head);
      if (it == heads.end()) throw InvalidMarkedSet(to_string(f.head) + " is not a generator of the truncation");
      auto k = static_cast<std::size_t>(it - heads.begin());
      if (seen[k]) throw InvalidMarkedSet(to_string(f.head) + " is marked twice");
      for (auto& [mono, c] : f.tail.terms()) {
        if (mono.degree() != f.head.degree())
          throw InvalidMarkedSet("polynomial with head " + to_string(f.head) + " is not homogeneous");
        if (ideal_.contains(mono))
          throw InvalidMarkedSet("tail of " + to_string(f.head) + " contains " + to_string(mono) + ", which is in the ideal");
      }
      f.superminimal = is_superminimal_head(f.head);
      seen[k] = true;
      polys_[k] = std::move(f);
    }
  }

  const StronglyStableIdeal& ideal() const { return ideal_; }
  int level() const { return m_; }
  /// Polynomials in the order of ideal().truncation_basis(level()).
  const std::vector<HomogMarkedPolynomial<C>>& polys() const { return polys_; }

  const HomogMarkedPolynomial<C>& at(const Monomial& head) const {
    for (auto& f : polys_)
      if (f.head == head) return f;
    throw std::out_of_range(to_string(head) + " is not a head");
  }

  /// x_0^{t_α} x^α with x^α ∈ B_J and t_α = max(0, m − |α|).
  bool is_superminimal_head(const Monomial& h) const {
    Monomial a = h.dehomogenized();
    return ideal_.is_basis_element(a) && h.exponent(0) == std::max(0, m_ - a.degree());
  }

 private:
  StronglyStableIdeal ideal_;
  int m_;
  std::vector<HomogMarkedPolynomial<C>> polys_;
};

namespace detail {

template <Coefficient C>
HomogMarkedPolynomial<C> lift_one(const MarkedPolynomial<C>& f, int m) {
  auto p = f.poly();
  int d = p.degree();
  int m_alpha = std::max(0, m - d);
  auto F = p.homogenized(d).times(Monomial(p.num_vars()).times_var(0, m_alpha));
  Monomial head = f.head.times_var(0, m_alpha + d - f.head.degree());
  return {head, -(F - Polynomial<C>::monomial(head)), false};
}

}  // namespace detail

/// {x_0^{m_α} f_α^h}; the images of G form the superminimal subset.
template <Coefficient C>
HomogMarkedSet<C> lift_to_homogeneous(const MarkedSet<C>& G, const Completion<C>& comp) {
  std::vector<HomogMarkedPolynomial<C>> polys;
  for (auto& f : G.polys()) polys.push_back(detail::lift_one(f, G.level()));
  for (auto& f : comp.polys) polys.push_back(detail::lift_one(f, G.level()));
  return HomogMarkedSet<C>(G.ideal().homogenized(), G.level(), std::move(polys));
}

/// Dehomogenizes: the superminimal part gives the marked set, the rest its completion.
template <Coefficient C>
std::pair<MarkedSet<C>, Completion<C>> drop_to_affine(const HomogMarkedSet<C>& H) {
  std::vector<MarkedPolynomial<C>> g;
  Completion<C> comp;
  for (auto& F : H.polys()) {
    MarkedPolynomial<C> f{F.head.dehomogenized(), F.tail.dehomogenized()};
    if (F.superminimal) g.push_back(std::move(f));
    else comp.polys.push_back(std::move(f));
  }
  std::sort(comp.polys.begin(), comp.polys.end(),
            [](auto& a, auto& b) { return deglex_compare(a.head, b.head) > 0; });
  return {MarkedSet<C>(H.ideal().dehomogenized(), H.level(), std::move(g)), std::move(comp)};
}

/// f^h for every f in G and its completion; they generate (G)^h in degrees ≥ level.
template <Coefficient C>
struct FamilyGenerators {
  std::vector<Polynomial<C>> gens;
  int level = 0;
};

template <Coefficient C>
FamilyGenerators<C> homogenized_family_ideal(const MarkedSet<C>& G, const Completion<C>& comp) {
  FamilyGenerators<C> out;
  out.level = G.level();
  for (auto& f : G.polys()) out.gens.push_back(f.poly().homogenized());
  for (auto& f : comp.polys) out.gens.push_back(f.poly().homogenized());
  return out;
}

/// Degree-ℓ multiples x^δ·g of homogeneous generators, as sparse rows over a column index.
class MonomialColumns {
 public:
  std::uint32_t index(const Monomial& m) {
    auto [it, fresh] = cols_.try_emplace(m, static_cast<std::uint32_t>(cols_.size()));
    return it->second;
  }
  std::size_t size() const { return cols_.size(); }

 private:
  std::unordered_map<Monomial, std::uint32_t> cols_;
};

inline std::vector<SparseRow> degree_multiples(const std::vector<ScalarPoly>& gens, int degree, MonomialColumns& cols) {
  std::vector<SparseRow> rows;
  for (auto& g : gens) {
    if (g.is_zero() || g.degree() > degree) continue;
    for (auto& d : monomials_of_degree(g.num_vars(), degree - g.degree(), 0)) {
      SparseRow r;
      for (auto& [m, c] : g.terms()) r.emplace_back(cols.index(m * d), c);
      rows.push_back(std::move(r));
    }
  }
  return rows;
}

/// Span membership of homogeneous F in (gens)_{deg F}. Only conclusive for (G)^h when deg F ≥ level.
struct FamilyMembership {
  bool in_span = false;
  bool conclusive = false;
};

inline FamilyMembership family_ideal_contains(const FamilyGenerators<Rational>& fam, const ScalarPoly& F) {
  if (!F.is_homogeneous()) throw std::invalid_argument("membership test expects a homogeneous polynomial");
  FamilyMembership out;
  out.conclusive = F.degree() >= fam.level;
  if (F.is_zero()) {
    out.in_span = true;
    return out;
  }
  MonomialColumns cols;
  auto rows = degree_multiples(fam.gens, F.degree(), cols);
  Echelon e;
  for (auto& r : rows) e.add(std::move(r));
  SparseRow fr;
  for (auto& [m, c] : F.terms()) fr.emplace_back(cols.index(m), c);
  out.in_span = !e.add(std::move(fr));
  return out;
}

// ---------------------------------------------------------------------------
// Replay validators for the correspondence between affine and superminimal
// reduction steps.

template <Coefficient C>
struct HomogStep {
  Monomial gamma;     ///< monomial of S being reduced
  C coeff;
  Monomial cofactor;  ///< x^{η'}, may involve x_0
  Monomial head;      ///< superminimal head x_0^{t_α} x^α
};

template <Coefficient C>
struct HomridReplay {
  bool ok = false;
  int t0 = 0;  ///< smallest initial power of x_0 that makes every step legal
  int t_final = 0;
  std::vector<HomogStep<C>> steps;
  std::string failure;
};

/// Replays an affine certificate as superminimal steps on x_0^t g^h.
template <Coefficient C>
HomridReplay<C> homrid_replay(const MarkedSet<C>& G, const Completion<C>& comp, const ReductionCertificate<C>& cert) {
  HomridReplay<C> out;
  auto H = lift_to_homogeneous(G, comp);
  const auto& Jh = H.ideal();
  int m = G.level();

  // First pass: affine polynomials along the certificate and the x_0 shortfall.
  std::vector<Polynomial<C>> gs{cert.input};
  for (auto& s : cert.steps) gs.push_back(gs.back() - G.at(s.generator).poly().times(s.cofactor).scaled(s.coeff));
  if (!(gs.back() == cert.result)) {
    out.failure = "certificate does not end at its stated result";
    return out;
  }
  long shift = 0, need = 0;  // t_k = t + shift
  for (std::size_t k = 0; k < cert.steps.size(); ++k) {
    auto& s = cert.steps[k];
    int dg = gs[k].degree();
    auto f = G.at(s.generator).poly();
    int df = s.cofactor.degree() + f.degree();
    int m_alpha = std::max(0, m - f.degree());
    long r = dg >= df ? std::max(0, m_alpha - dg + df) : m_alpha + df - dg;
    need = std::max(need, r - shift);
    if (!gs[k + 1].is_zero()) shift += dg - gs[k + 1].degree();
  }
  out.t0 = static_cast<int>(need);

  // Second pass: concrete superminimal steps.
  long t = need;
  auto state = gs[0].homogenized().times(Monomial(G.num_vars()).times_var(0, static_cast<int>(t)));
  for (std::size_t k = 0; k < cert.steps.size(); ++k) {
    auto& s = cert.steps[k];
    int dg = gs[k].degree();
    Monomial gamma = s.gamma.times_var(0, static_cast<int>(t) + dg - s.gamma.degree());
    const auto& F = H.at(s.generator.times_var(0, std::max(0, m - s.generator.degree())));
    if (!F.superminimal || !F.head.divides(gamma)) {
      out.failure = "step " + std::to_string(k) + ": no superminimal head divides " + to_string(gamma);
      return out;
    }
    auto dec = Jh.star_decompose(gamma);
    if (!(dec.generator == s.generator)) {
      out.failure = "step " + std::to_string(k) + ": star decomposition uses a different generator";
      return out;
    }
    if (!(state.coeff(gamma) == s.coeff)) {
      out.failure = "step " + std::to_string(k) + ": coefficient mismatch at " + to_string(gamma);
      return out;
    }
    Monomial eta = gamma / F.head;
    state -= F.poly().times(eta).scaled(s.coeff);
    out.steps.push_back({gamma, s.coeff, eta, F.head});
    long t_next = gs[k + 1].is_zero() ? t + dg : t + dg - gs[k + 1].degree();
    auto expect = gs[k + 1].is_zero()
                      ? Polynomial<C>(G.num_vars())
                      : gs[k + 1].homogenized().times(Monomial(G.num_vars()).times_var(0, static_cast<int>(t_next)));
    if (!(state == expect)) {
      out.failure = "step " + std::to_string(k) + ": homogeneous state differs from x0^t g^h";
      return out;
    }
    t = t_next;
  }
  out.t_final = static_cast<int>(t);
  out.ok = true;
  return out;
}

/// Dehomogenizes superminimal steps into an affine certificate for g.
template <Coefficient C>
ReductionCertificate<C> affinrid_replay(const Polynomial<C>& g, const std::vector<HomogStep<C>>& steps) {
  ReductionCertificate<C> cert;
  cert.input = g;
  for (auto& s : steps) {
    Monomial a = s.head.dehomogenized();
    Monomial eta = s.cofactor.dehomogenized();
    cert.steps.push_back({a * eta, s.coeff, eta, a});
  }
  cert.step_count = steps.size();
  return cert;
}

}  // namespace mb

#pragma once

// The effective marked-basis criterion, normal forms and syzygy lifts.
//
// Syzygy condition:    x_i f_α reduces to 0 for every f_α and every x_i > min(x^α).
// Completion condition: every x^β ∈ 𝔧_{≤m}∖B_𝔧 reduces to a polynomial of degree ≤ m.
// For a finite sous-escalier and m ≥ sat(𝔧)−1 the syzygy condition alone decides.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "markedbases/marked.hpp"
#include "markedbases/parallel.hpp"

namespace mb {

struct NotABasis : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SyzygyObligation {
  Monomial alpha;
  int var;
};

/// Pairs (x^α, x_i) with x_i > min(x^α): α Lex-descending, then i descending.
inline std::vector<SyzygyObligation> syzygy_obligations(const StronglyStableIdeal& J) {
  std::vector<Monomial> gens = J.basis();
  std::sort(gens.begin(), gens.end(), LexGreater{});
  std::vector<SyzygyObligation> out;
  for (auto& a : gens)
    for (int i = J.num_vars(); i > a.min_var(); --i) out.push_back({a, i});
  return out;
}

template <Coefficient C>
struct ConditionFailure {
  Monomial head;  ///< x^α for the syzygy condition, x^β for the completion condition
  int var = 0;    ///< x_i for the syzygy condition, 0 otherwise
  Polynomial<C> residue;
};

template <Coefficient C>
struct BasisVerdict {
  bool is_basis = false;
  bool artinian_shortcut = false;
  bool syzygy_ok = false;
  std::size_t syzygy_checked = 0;
  std::vector<ConditionFailure<C>> syzygy_failures;
  bool completion_checked = false;
  bool completion_ok = false;
  std::size_t completion_checked_count = 0;
  std::vector<ConditionFailure<C>> completion_failures;
};

struct CheckOptions {
  unsigned workers = 1;
  ReduceOptions reduce{Strategy::StarLargest, 1'000'000, false};
  /// Evaluate the completion condition even when the shortcut applies.
  bool force_completion = false;
};

/// True when the syzygy condition alone decides: finite sous-escalier and m ≥ sat(𝔧)−1.
inline bool artinian_shortcut_applies(const StronglyStableIdeal& J, int m) {
  return J.is_artinian() && m >= J.satiety() - 1;
}

template <Coefficient C>
Polynomial<C> syzygy_residue(const MarkedSet<C>& G, const SyzygyObligation& ob, const ReduceOptions& opt) {
  auto g = G.at(ob.alpha).poly().times(Monomial::variable(G.num_vars(), ob.var));
  ReduceOptions o = opt;
  o.record_steps = false;
  return reduce(g, G, o).result;
}

template <Coefficient C>
BasisVerdict<C> check_marked_basis(const MarkedSet<C>& G, const CheckOptions& opt = {}) {
  BasisVerdict<C> v;
  const auto& J = G.ideal();
  auto obligations = syzygy_obligations(J);
  auto residues = parallel_map(
      obligations.size(), [&](std::size_t k) { return syzygy_residue(G, obligations[k], opt.reduce); }, opt.workers);
  v.syzygy_checked = obligations.size();
  for (std::size_t k = 0; k < obligations.size(); ++k)
    if (!residues[k].is_zero())
      v.syzygy_failures.push_back({obligations[k].alpha, obligations[k].var, std::move(residues[k])});
  v.syzygy_ok = v.syzygy_failures.empty();

  v.artinian_shortcut = artinian_shortcut_applies(J, G.level());
  if (!v.artinian_shortcut || opt.force_completion) {
    v.completion_checked = true;
    auto heads = completion_heads(J, G.level());
    ReduceOptions o = opt.reduce;
    o.record_steps = false;
    auto forms = parallel_map(
        heads.size(), [&](std::size_t k) { return reduce(Polynomial<C>::monomial(heads[k]), G, o).result; },
        opt.workers);
    v.completion_checked_count = heads.size();
    for (std::size_t k = 0; k < heads.size(); ++k)
      if (forms[k].degree() > G.level()) v.completion_failures.push_back({heads[k], 0, std::move(forms[k])});
    v.completion_ok = v.completion_failures.empty();
  }
  v.is_basis = v.syzygy_ok && (v.artinian_shortcut || v.completion_ok);
  return v;
}

/// The reduced form of g; with `verify`, first checks that G is a basis.
template <Coefficient C>
Polynomial<C> normal_form(const Polynomial<C>& g, const MarkedSet<C>& G, bool verify = false,
                          const ReduceOptions& opt = {Strategy::StarLargest, 1'000'000, false}) {
  if (verify && !check_marked_basis(G).is_basis) throw NotABasis("marked set is not a marked basis");
  return reduce(g, G, opt).result;
}

/// x_i f_α = Σ c_k x^{δ_k} f_{α_k}, where each x^{δ_k} x^{α_k} is a star decomposition.
template <Coefficient C>
struct SyzygyLift {
  struct Summand {
    C coeff;
    Monomial cofactor;
    Monomial generator;
  };
  Monomial alpha;
  int var = 0;
  std::vector<Summand> summands;
  StarDecomposition partner;  ///< x_i x^α = x^{α'} ∗ x^{δ'}
  bool identity_holds = false;
  bool partner_present = false;
};

template <Coefficient C>
SyzygyLift<C> syzygy_lift(const MarkedSet<C>& G, const Monomial& alpha, int var, const ReduceOptions& opt = {}) {
  if (var <= alpha.min_var() || var > G.num_vars())
    throw std::invalid_argument("syzygy lift needs x_i > min(x^α)");
  const auto& J = G.ideal();
  auto xi = Monomial::variable(G.num_vars(), var);
  auto g = G.at(alpha).poly().times(xi);
  ReduceOptions o = opt;
  o.record_steps = true;
  auto cert = reduce(g, G, o);
  if (!cert.result.is_zero())
    throw NotABasis("x" + std::to_string(var) + "*(" + to_string(alpha) + " poly) does not reduce to 0");

  SyzygyLift<C> lift;
  lift.alpha = alpha;
  lift.var = var;
  std::map<detail::StarKey, C, detail::StarKeyLess> agg;
  for (auto& s : cert.steps) {
    auto [it, fresh] = agg.try_emplace(detail::StarKey{s.cofactor, s.generator}, s.coeff);
    if (!fresh) it->second = it->second + s.coeff;
  }
  for (auto it = agg.rbegin(); it != agg.rend(); ++it)
    if (!coeff_is_zero(it->second)) lift.summands.push_back({it->second, it->first.cofactor, it->first.generator});

  Polynomial<C> acc = g;
  for (auto& s : lift.summands) acc -= G.at(s.generator).poly().times(s.cofactor).scaled(s.coeff);
  lift.identity_holds = acc.is_zero();
  lift.partner = J.star_decompose(alpha * xi);
  for (auto& s : lift.summands)
    if (s.generator == lift.partner.generator && s.cofactor == lift.partner.cofactor && s.coeff == C(1))
      lift.partner_present = true;
  return lift;
}

}  // namespace mb

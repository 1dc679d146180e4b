#pragma once

// Marked polynomials, [𝔧,m]-marked sets and the G*-reduction.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "markedbases/ideal.hpp"
#include "markedbases/polynomial.hpp"
#include "markedbases/text.hpp"

namespace mb {

struct InvalidMarkedSet : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct FuelExceeded : std::runtime_error {
  explicit FuelExceeded(std::uint64_t fuel)
      : std::runtime_error("reduction exceeded " + std::to_string(fuel) + " steps") {}
};

/// head − tail.
template <Coefficient C>
struct MarkedPolynomial {
  Monomial head;
  Polynomial<C> tail;

  Polynomial<C> poly() const {
    Polynomial<C> p = -tail;
    p.add_term(head, C(1));
    return p;
  }

  /// Marks `f` on `head`, which must carry coefficient 1.
  static MarkedPolynomial from_poly(const Monomial& head, const Polynomial<C>& f) {
    C c = f.coeff(head);
    if (!(c == C(1))) throw InvalidMarkedSet("head " + to_string(head) + " must have coefficient 1");
    Polynomial<C> tail = -f;
    tail.add_term(head, C(1));
    return {head, tail};
  }

  bool operator==(const MarkedPolynomial&) const = default;
};

/// An [𝔧,m]-marked set: one marked polynomial per generator of 𝔧.
template <Coefficient C>
class MarkedSet {
 public:
  MarkedSet() = default;

  /// Checks heads against B_𝔧 and the tail support bound N(𝔧)_{≤max(m,|α|)}.
  MarkedSet(StronglyStableIdeal ideal, int m, std::vector<MarkedPolynomial<C>> polys)
      : ideal_(std::move(ideal)), m_(m) {
    if (ideal_.ring() != Ring::R) throw InvalidMarkedSet("marked sets live over an ideal of R");
    if (m < 1) throw InvalidMarkedSet("level m must be a positive integer");
    if (polys.size() != ideal_.basis().size())
      throw InvalidMarkedSet("expected " + std::to_string(ideal_.basis().size()) + " marked polynomials, got " +
                             std::to_string(polys.size()));
    polys_.resize(polys.size());
    std::vector<bool> seen(polys.size(), false);
    for (auto& f : polys) {
      auto it = std::find(ideal_.basis().begin(), ideal_.basis().end(), f.head);
      if (it == ideal_.basis().end()) throw InvalidMarkedSet("head " + to_string(f.head) + " is not a generator");
      auto k = static_cast<std::size_t>(it - ideal_.basis().begin());
      if (seen[k]) throw InvalidMarkedSet("head " + to_string(f.head) + " is marked twice");
      int t = std::max(m, f.head.degree());
      for (auto& [mono, c] : f.tail.terms()) {
        if (ideal_.contains(mono))
          throw InvalidMarkedSet("tail of " + to_string(f.head) + " contains " + to_string(mono) + ", which is in the ideal");
        if (mono.degree() > t)
          throw InvalidMarkedSet("tail of " + to_string(f.head) + " contains " + to_string(mono) + " of degree above " +
                                 std::to_string(t));
      }
      seen[k] = true;
      polys_[k] = std::move(f);
    }
    for (std::size_t k = 0; k < polys_.size(); ++k) index_.emplace(ideal_.basis()[k], k);
  }

  const StronglyStableIdeal& ideal() const { return ideal_; }
  int level() const { return m_; }
  int num_vars() const { return ideal_.num_vars(); }
  /// Marked polynomials in the order of ideal().basis().
  const std::vector<MarkedPolynomial<C>>& polys() const { return polys_; }
  const MarkedPolynomial<C>& at(const Monomial& head) const {
    auto it = index_.find(head);
    if (it == index_.end()) throw std::out_of_range(to_string(head) + " is not a head");
    return polys_[it->second];
  }

  /// Same tails read at another level, checked against that level's bound.
  MarkedSet at_level(int m) const { return MarkedSet(ideal_, m, polys_); }

 private:
  StronglyStableIdeal ideal_;
  int m_ = 1;
  std::vector<MarkedPolynomial<C>> polys_;
  std::unordered_map<Monomial, std::size_t> index_;
};

/// The marked set whose tails are all zero.
template <Coefficient C>
MarkedSet<C> monomial_marked_set(const StronglyStableIdeal& J, int m) {
  std::vector<MarkedPolynomial<C>> polys;
  for (auto& g : J.basis()) polys.push_back({g, Polynomial<C>(J.num_vars())});
  return MarkedSet<C>(J, m, std::move(polys));
}

template <Coefficient C>
struct ReductionStep {
  Monomial gamma;      ///< reduced monomial x^γ
  C coeff;             ///< its coefficient c_γ
  Monomial cofactor;   ///< x^η
  Monomial generator;  ///< x^α
};

/// input − result = Σ c·x^η·f_α over the steps.
template <Coefficient C>
struct ReductionCertificate {
  Polynomial<C> input;
  Polynomial<C> result;
  std::vector<ReductionStep<C>> steps;
  std::uint64_t step_count = 0;

  /// Re-expands the representation; true iff it matches exactly.
  bool verify(const MarkedSet<C>& G) const {
    Polynomial<C> acc = input - result;
    for (auto& s : steps) acc -= G.at(s.generator).poly().times(s.cofactor).scaled(s.coeff);
    if (!acc.is_zero()) return false;
    for (auto& [m, c] : result.terms())
      if (G.ideal().contains(m)) return false;
    return true;
  }
};

enum class Strategy { StarLargest, StarSmallest };

struct ReduceOptions {
  Strategy strategy = Strategy::StarLargest;
  std::uint64_t fuel = 1'000'000;
  bool record_steps = true;
};

namespace detail {

struct StarKey {
  Monomial cofactor;
  Monomial generator;
};

struct StarKeyLess {
  bool operator()(const StarKey& a, const StarKey& b) const {
    if (auto c = lex_compare(a.cofactor, b.cofactor); c != 0) return c < 0;
    return lex_compare(a.generator, b.generator) < 0;
  }
};

}  // namespace detail

/// G*-reduction: repeatedly replaces a monomial x^γ = x^α ∗ x^η of 𝔧 by x^η·T(f_α).
template <Coefficient C>
ReductionCertificate<C> reduce(const Polynomial<C>& g, const MarkedSet<C>& G, const ReduceOptions& opt = {}) {
  const StronglyStableIdeal& J = G.ideal();
  if (g.num_vars() != J.num_vars()) throw std::invalid_argument("polynomial and marked set live in different rings");
  ReductionCertificate<C> cert;
  cert.input = g;
  Polynomial<C> lower(g.num_vars());
  std::map<detail::StarKey, C, detail::StarKeyLess> upper;
  std::unordered_map<Monomial, std::size_t> gen_index;
  for (std::size_t k = 0; k < J.basis().size(); ++k) gen_index.emplace(J.basis()[k], k);

  auto push = [&](const Monomial& m, const C& c) {
    if (!J.contains(m)) {
      lower.add_term(m, c);
      return;
    }
    auto d = J.star_decompose(m);
    auto [it, fresh] = upper.try_emplace(detail::StarKey{d.cofactor, d.generator}, c);
    if (fresh) return;
    it->second = it->second + c;
    if (coeff_is_zero(it->second)) upper.erase(it);
  };
  for (auto& [m, c] : g.terms()) push(m, c);

  while (!upper.empty()) {
    if (cert.step_count >= opt.fuel) throw FuelExceeded(opt.fuel);
    auto it = opt.strategy == Strategy::StarLargest ? std::prev(upper.end()) : upper.begin();
    detail::StarKey key = it->first;
    C c = std::move(it->second);
    upper.erase(it);
    ++cert.step_count;
    const auto& f = G.polys()[gen_index.at(key.generator)];
    for (auto& [t, d] : f.tail.terms()) push(t * key.cofactor, c * d);
    if (opt.record_steps) cert.steps.push_back({key.cofactor * key.generator, std::move(c), key.cofactor, key.generator});
  }
  cert.result = std::move(lower);
  return cert;
}

/// x^β − (reduced form of x^β) for every x^β ∈ 𝔧_{≤m}∖B_𝔧.
template <Coefficient C>
struct Completion {
  std::vector<MarkedPolynomial<C>> polys;

  const MarkedPolynomial<C>* find(const Monomial& head) const {
    for (auto& f : polys)
      if (f.head == head) return &f;
    return nullptr;
  }
};

template <Coefficient C>
struct NoCompletion : std::runtime_error {
  NoCompletion(Monomial b, Polynomial<C> r, const std::string& printed)
      : std::runtime_error("no completion: " + to_string(b) + " reduces to " + printed), beta(b), reduced(std::move(r)) {}
  Monomial beta;
  Polynomial<C> reduced;
};

/// Heads of a completion: 𝔧_{≤m}∖B_𝔧, DegLex-descending.
inline std::vector<Monomial> completion_heads(const StronglyStableIdeal& J, int m) {
  std::vector<Monomial> out;
  for (auto& b : J.vspace(m))
    if (!J.is_basis_element(b)) out.push_back(b);
  return out;
}

inline std::string printable(const ScalarPoly& f) { return to_string(f); }
inline std::string printable(const ParamPoly& f) { return to_string(f, nullptr); }

/// Builds the completion; throws NoCompletion at the first x^β whose reduced form exceeds degree m.
template <Coefficient C>
Completion<C> compute_completion(const MarkedSet<C>& G, const ReduceOptions& opt = {}) {
  Completion<C> out;
  ReduceOptions o = opt;
  o.record_steps = false;
  for (auto& b : completion_heads(G.ideal(), G.level())) {
    auto r = reduce(Polynomial<C>::monomial(b), G, o).result;
    if (r.degree() > G.level()) throw NoCompletion<C>(b, r, printable(r));
    out.polys.push_back({b, std::move(r)});
  }
  return out;
}

}  // namespace mb

#pragma once

// Strongly stable monomial ideals: validation, star decompositions, the
// sous-escalier and the invariants read off the monomial basis.

#include <algorithm>
#include <compare>
#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "markedbases/monomial.hpp"
#include "markedbases/text.hpp"

namespace mb {

/// R = K[x_1..x_n] (affine side) or S = K[x_0..x_n] (projective side).
enum class Ring { R, S };

inline const char* ring_name(Ring r) { return r == Ring::R ? "R" : "S"; }

struct EmptyBasis : std::invalid_argument {
  EmptyBasis() : std::invalid_argument("monomial basis is empty") {}
};

struct NotStronglyStable : std::invalid_argument {
  NotStronglyStable(Monomial gen, int from, int to, Monomial image)
      : std::invalid_argument("not strongly stable: moving x" + std::to_string(from) + " to x" + std::to_string(to) +
                              " sends " + to_string(gen) + " to " + to_string(image) + ", which is outside the ideal"),
        generator(gen), from_var(from), to_var(to), image(image) {}
  Monomial generator;
  int from_var;
  int to_var;
  Monomial image;
};

struct NotInIdeal : std::invalid_argument {
  explicit NotInIdeal(const Monomial& m) : std::invalid_argument(to_string(m) + " is not in the ideal"), monomial(m) {}
  Monomial monomial;
};

struct NotSaturated : std::invalid_argument {
  NotSaturated() : std::invalid_argument("ideal is not saturated (some basis monomial involves x0)") {}
};

struct StarDecomposition {
  Monomial generator;  ///< x^α ∈ B_J
  Monomial cofactor;   ///< x^η with min(x^α) ≥ max(x^η)
  bool operator==(const StarDecomposition&) const = default;
};

enum class BorelRelation { Greater, Less, Incomparable, Equal };

/// Increasing elementary move x_i -> x_{i+1}; nullopt when x_i does not divide m or i = n.
inline std::optional<Monomial> increasing_move(const Monomial& m, int i) {
  if (i >= m.num_vars() || m.exponent(i) == 0) return std::nullopt;
  Monomial r = m;
  r.set(i, m.exponent(i) - 1);
  r.set(i + 1, m.exponent(i + 1) + 1);
  return r;
}

/// Decides a >_B b by searching the graph of increasing moves starting at b.
inline BorelRelation borel_compare(const Monomial& a, const Monomial& b) {
  a.same_ring(b);
  if (a.degree() != b.degree()) throw std::invalid_argument("Borel comparison needs monomials of equal degree");
  if (a == b) return BorelRelation::Equal;
  auto reaches = [](const Monomial& from, const Monomial& to) {
    std::unordered_set<Monomial> seen{from};
    std::deque<Monomial> queue{from};
    while (!queue.empty()) {
      Monomial cur = queue.front();
      queue.pop_front();
      for (int i = 0; i < cur.num_vars(); ++i) {
        auto next = increasing_move(cur, i);
        if (!next) continue;
        if (*next == to) return true;
        if (lex_compare(*next, to) > 0) continue;
        if (seen.insert(*next).second) queue.push_back(*next);
      }
    }
    return false;
  };
  if (reaches(b, a)) return BorelRelation::Greater;
  if (reaches(a, b)) return BorelRelation::Less;
  return BorelRelation::Incomparable;
}

class StronglyStableIdeal {
 public:
  StronglyStableIdeal() = default;

  /// Minimalizes the generators and checks closure under increasing moves.
  static StronglyStableIdeal validate(Ring ring, int n, std::vector<Monomial> gens) {
    if (gens.empty()) throw EmptyBasis();
    int lo = ring == Ring::S ? 0 : 1;
    for (auto& g : gens) {
      if (g.num_vars() != n) throw std::invalid_argument("generator " + to_string(g) + " has the wrong variable count");
      if (lo == 1 && g.exponent(0) != 0) throw std::invalid_argument("generator " + to_string(g) + " uses x0 in ring R");
    }
    std::sort(gens.begin(), gens.end(), DegLexGreater{});
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> minimal;
    for (std::size_t k = gens.size(); k-- > 0;) {
      bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const Monomial& m) { return m.divides(gens[k]); });
      if (!redundant) minimal.push_back(gens[k]);
    }
    std::sort(minimal.begin(), minimal.end(), DegLexGreater{});

    StronglyStableIdeal J;
    J.ring_ = ring;
    J.n_ = n;
    J.basis_ = std::move(minimal);
    J.cache_ = std::make_shared<Cache>();
    for (auto& g : J.basis_)
      for (int i = lo; i < n; ++i) {
        auto img = increasing_move(g, i);
        if (img && !J.contains(*img)) throw NotStronglyStable(g, i, i + 1, *img);
      }
    return J;
  }

  Ring ring() const { return ring_; }
  int num_vars() const { return n_; }
  /// Index of the smallest ambient variable: 0 in S, 1 in R.
  int lowest_var() const { return ring_ == Ring::S ? 0 : 1; }
  /// Minimal generators in DegLex-descending order.
  const std::vector<Monomial>& basis() const { return basis_; }

  bool contains(const Monomial& m) const {
    return std::any_of(basis_.begin(), basis_.end(), [&](const Monomial& g) { return g.divides(m); });
  }
  bool is_basis_element(const Monomial& m) const {
    return std::find(basis_.begin(), basis_.end(), m) != basis_.end();
  }

  StarDecomposition star_decompose(const Monomial& m) const {
    for (auto& g : basis_) {
      if (!g.divides(m)) continue;
      Monomial c = m / g;
      if (c.is_one() || g.min_var() >= c.max_var()) return {g, c};
    }
    throw NotInIdeal(m);
  }

  /// <_∗ order: cofactors by Lex, then generators by Lex.
  std::strong_ordering star_compare(const Monomial& a, const Monomial& b) const {
    auto da = star_decompose(a), db = star_decompose(b);
    if (auto c = lex_compare(da.cofactor, db.cofactor); c != 0) return c;
    return lex_compare(da.generator, db.generator);
  }

  int regularity() const {
    int r = 0;
    for (auto& g : basis_) r = std::max(r, g.degree());
    return r;
  }

  /// Largest degree of a generator divisible by the smallest variable; 0 when none is.
  int satiety() const {
    int s = 0;
    for (auto& g : basis_)
      if (g.exponent(lowest_var()) > 0) s = std::max(s, g.degree());
    return s;
  }

  bool is_saturated() const { return satiety() == 0; }

  /// True when the sous-escalier is finite, i.e. a power of every variable lies in the ideal.
  bool is_artinian() const {
    for (int i = lowest_var(); i <= n_; ++i) {
      bool pure = std::any_of(basis_.begin(), basis_.end(),
                              [&](const Monomial& g) { return g.exponent(i) == g.degree(); });
      if (!pure) return false;
    }
    return true;
  }

  /// Largest m0 ≤ m with a generator of degree m0+1 divisible by the smallest variable; at least 1.
  int optimized_level(int m) const {
    int best = 0;
    for (auto& g : basis_)
      if (g.exponent(lowest_var()) > 0 && g.degree() - 1 <= m) best = std::max(best, g.degree() - 1);
    return std::max(best, 1);
  }

  /// Monomials of degree exactly d outside the ideal, DegLex-descending.
  std::vector<Monomial> sous_escalier_degree(int d) const {
    if (d < 0) return {};
    std::lock_guard lock(cache_->mu);
    grow_locked(d);
    return cache_->levels[static_cast<std::size_t>(d)];
  }

  /// Monomials of degree ≤ d outside the ideal, DegLex-descending.
  std::vector<Monomial> sous_escalier(int d) const {
    std::vector<Monomial> out;
    if (d < 0) return out;
    std::lock_guard lock(cache_->mu);
    grow_locked(d);
    for (int k = d; k >= 0; --k) {
      auto& level = cache_->levels[static_cast<std::size_t>(k)];
      out.insert(out.end(), level.begin(), level.end());
    }
    return out;
  }

  /// The whole sous-escalier; only for Artinian ideals.
  std::vector<Monomial> sous_escalier_all() const {
    if (!is_artinian()) throw std::invalid_argument("sous-escalier is infinite");
    return sous_escalier(regularity());
  }

  std::size_t sous_escalier_count(int d) const { return sous_escalier(d).size(); }

  /// Ideal monomials of exactly degree d, DegLex-descending.
  std::vector<Monomial> vspace_degree(int d) const {
    std::vector<Monomial> out;
    for (auto& m : monomials_of_degree(n_, d, lowest_var()))
      if (contains(m)) out.push_back(m);
    return out;
  }

  /// Ideal monomials of degree ≤ d, DegLex-descending.
  std::vector<Monomial> vspace(int d) const {
    std::vector<Monomial> out;
    for (int k = d; k >= 0; --k) {
      auto level = vspace_degree(k);
      out.insert(out.end(), level.begin(), level.end());
    }
    return out;
  }

  /// Weights listed for x_n down to x_1: every generator must ω-dominate N_{≤max(m,|α|)}.
  bool is_affine_segment(int m, const WeightVector& w) const {
    if (w.num_vars() != n_) throw std::invalid_argument("weight vector length does not match the ring");
    for (int i = 1; i <= n_; ++i)
      if (w.weight(i) <= 0) throw std::invalid_argument("segment weights must be positive");
    int top = std::max(m, regularity());
    auto N = sous_escalier(top);
    for (auto& g : basis_) {
      int t = std::max(m, g.degree());
      auto wg = w.degree(g);
      for (auto& x : N)
        if (x.degree() <= t && w.degree(x) >= wg) return false;
    }
    return true;
  }

  /// The same generators read in S.
  StronglyStableIdeal homogenized() const {
    if (ring_ != Ring::R) throw std::invalid_argument("homogenize expects an ideal of R");
    return validate(Ring::S, n_, basis_);
  }

  /// The same generators read in R; requires saturation.
  StronglyStableIdeal dehomogenized() const {
    if (ring_ != Ring::S) throw std::invalid_argument("dehomogenize expects an ideal of S");
    if (!is_saturated()) throw NotSaturated();
    return validate(Ring::R, n_, basis_);
  }

  /// Minimal generators of the truncation J_{≥m}, DegLex-descending.
  std::vector<Monomial> truncation_basis(int m) const {
    std::vector<Monomial> out = vspace_degree(m);
    for (auto& g : basis_)
      if (g.degree() > m) out.push_back(g);
    std::sort(out.begin(), out.end(), DegLexGreater{});
    return out;
  }

  bool operator==(const StronglyStableIdeal& o) const {
    return ring_ == o.ring_ && n_ == o.n_ && basis_ == o.basis_;
  }

 private:
  struct Cache {
    std::mutex mu;
    std::vector<std::vector<Monomial>> levels;
  };

  void grow_locked(int d) const {
    auto& levels = cache_->levels;
    int lo = lowest_var();
    if (levels.empty()) {
      Monomial one(n_);
      levels.push_back(contains(one) ? std::vector<Monomial>{} : std::vector<Monomial>{one});
    }
    while (static_cast<int>(levels.size()) <= d) {
      std::vector<Monomial> next;
      std::unordered_set<Monomial> seen;
      for (auto& m : levels.back())
        for (int i = lo; i <= n_; ++i) {
          Monomial c = m.times_var(i);
          if (!contains(c) && seen.insert(c).second) next.push_back(c);
        }
      std::sort(next.begin(), next.end(), DegLexGreater{});
      levels.push_back(std::move(next));
    }
  }

  Ring ring_ = Ring::R;
  int n_ = 0;
  std::vector<Monomial> basis_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// The smallest strongly stable ideal containing the given monomials.
inline StronglyStableIdeal strongly_stable_closure(Ring ring, int n, const std::vector<Monomial>& seeds) {
  int lo = ring == Ring::S ? 0 : 1;
  std::vector<Monomial> all;
  std::unordered_set<Monomial> seen;
  std::vector<Monomial> queue(seeds.begin(), seeds.end());
  while (!queue.empty()) {
    Monomial m = queue.back();
    queue.pop_back();
    if (!seen.insert(m).second) continue;
    all.push_back(m);
    for (int i = lo; i < n; ++i)
      if (auto img = increasing_move(m, i)) queue.push_back(*img);
  }
  return StronglyStableIdeal::validate(ring, n, std::move(all));
}

inline StronglyStableIdeal make_ideal(Ring ring, int n, const std::vector<std::string>& gens) {
  std::vector<Monomial> ms;
  for (auto& g : gens) ms.push_back(parse_monomial(g, n));
  return StronglyStableIdeal::validate(ring, n, std::move(ms));
}

}  // namespace mb

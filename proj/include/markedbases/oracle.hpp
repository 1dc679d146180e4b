#pragma once

// Linear-algebra cross-check of the marked-basis criterion, independent of
// the reduction outcome.
//
// With a completion, the homogeneous lift G is tested degree by degree:
// G is a 𝔧^h_{≥m}-marked basis iff dim (G)_ℓ = |𝔧^h_ℓ|, i.e. the degree-ℓ
// multiples of G span a space no larger than the one spanned by V_ℓ.
// Without a completion, the direct sum R_{≤t} = (G)_{≤t} ⊕ ⟨N_{≤t}⟩ is
// tested for t ∈ [m, L] on a finite window of multiples.

#include <optional>
#include <string>
#include <vector>

#include "markedbases/homog.hpp"
#include "markedbases/linalg.hpp"

namespace mb {

struct OracleDegree {
  int degree = 0;
  std::size_t rank = 0;
  std::size_t expected = 0;
  bool pass = false;
};

struct OracleReport {
  bool has_completion = false;
  std::vector<OracleDegree> degrees;
  bool pass = false;
};

inline int default_oracle_bound(const MarkedSet<Rational>& G) {
  return std::max(G.level(), G.ideal().regularity()) + 3;
}

namespace detail {

inline std::size_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

inline OracleReport homogeneous_oracle(const MarkedSet<Rational>& G, const Completion<Rational>& comp, int L) {
  OracleReport rep;
  rep.has_completion = true;
  auto H = lift_to_homogeneous(G, comp);
  std::vector<ScalarPoly> gens;
  for (auto& F : H.polys()) gens.push_back(F.poly());
  int n = G.num_vars();
  rep.pass = true;
  for (int l = G.level(); l <= L; ++l) {
    MonomialColumns cols;
    auto rows = degree_multiples(gens, l, cols);
    OracleDegree d;
    d.degree = l;
    d.rank = exact_rank(std::move(rows));
    d.expected = binomial(n + l, n) - H.ideal().sous_escalier_degree(l).size();
    d.pass = d.rank == d.expected;
    rep.pass = rep.pass && d.pass;
    rep.degrees.push_back(d);
  }
  return rep;
}

/// R_{≤t} = (G)_{≤t} ⊕ ⟨N_{≤t}⟩ for t ∈ [m, L], with (G)_{≤t} approximated by multiples of degree ≤ L+1.
inline OracleReport affine_oracle(const MarkedSet<Rational>& G, int L) {
  OracleReport rep;
  int m = G.level(), n = G.num_vars();
  int W = L + 1;
  rep.pass = true;
  for (int t = m; t <= L; ++t) {
    // Columns: monomials of degree > t lead, so the pivots that land in the low
    // block span the multiples lying in R_{≤t}.
    std::unordered_map<Monomial, std::uint32_t> col;
    std::uint32_t next = 0;
    for (int d = W; d > t; --d)
      for (auto& x : monomials_of_degree(n, d)) col.emplace(x, next++);
    std::uint32_t low_start = next;
    for (int d = t; d >= 0; --d)
      for (auto& x : monomials_of_degree(n, d)) col.emplace(x, next++);

    Echelon e;
    for (auto& f : G.polys()) {
      auto p = f.poly();
      for (int d = 0; d <= W - p.degree(); ++d)
        for (auto& x : monomials_of_degree(n, d)) {
          SparseRow r;
          for (auto& [mono, c] : p.terms()) r.emplace_back(col.at(mono * x), c);
          e.add(std::move(r));
        }
    }
    Echelon low;
    for (auto& [lead, row] : e.pivots())
      if (lead >= low_start) {
        SparseRow r;
        for (auto& [c, v] : row) r.emplace_back(c, Rational(v));
        low.add(std::move(r));
      }
    std::size_t in_ideal = low.rank();
    auto N = G.ideal().sous_escalier(t);
    for (auto& x : N) low.add(SparseRow{{col.at(x), Rational(1)}});
    OracleDegree d;
    d.degree = t;
    d.rank = low.rank();
    d.expected = binomial(n + t, n);
    d.pass = d.rank == d.expected && in_ideal + N.size() == d.expected;
    rep.pass = rep.pass && d.pass;
    rep.degrees.push_back(d);
  }
  return rep;
}

}  // namespace detail

/// Per-degree verdicts for ℓ ∈ [m, L]; L defaults to max(m, reg)+3.
inline OracleReport linear_oracle(const MarkedSet<Rational>& G, std::optional<int> max_degree = std::nullopt) {
  int L = max_degree.value_or(default_oracle_bound(G));
  if (L < G.level()) throw std::invalid_argument("oracle bound must be at least m");
  try {
    auto comp = compute_completion(G, {Strategy::StarLargest, 1'000'000, false});
    return detail::homogeneous_oracle(G, comp, L);
  } catch (const NoCompletion<Rational>&) {
    return detail::affine_oracle(G, L);
  }
}

}  // namespace mb

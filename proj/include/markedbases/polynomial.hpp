#pragma once

// Sparse polynomials in x_0..x_n over a coefficient domain: Rational for concrete
// marked sets, CoeffPoly for sets whose tails carry parameters.

#include <algorithm>
#include <concepts>
#include <map>
#include <stdexcept>
#include <vector>

#include "markedbases/coeff_poly.hpp"
#include "markedbases/monomial.hpp"
#include "markedbases/rational.hpp"

namespace mb {

inline bool coeff_is_zero(const Rational& c) { return is_zero(c); }
inline bool coeff_is_zero(const CoeffPoly& c) { return c.is_zero(); }

template <class C>
concept Coefficient = requires(const C& a, const C& b) {
  { a + b } -> std::convertible_to<C>;
  { a - b } -> std::convertible_to<C>;
  { a * b } -> std::convertible_to<C>;
  { -a } -> std::convertible_to<C>;
  { coeff_is_zero(a) } -> std::same_as<bool>;
  C(1);
};

template <Coefficient C>
class Polynomial {
 public:
  using Coeff = C;
  using TermMap = std::map<Monomial, C, DegRevLexGreater>;

  Polynomial() = default;
  explicit Polynomial(int n) : n_(n) { Monomial check(n); }

  static Polynomial monomial(const Monomial& m, const C& c = C(1)) {
    Polynomial p(m.num_vars());
    p.add_term(m, c);
    return p;
  }
  static Polynomial constant(int n, const C& c) { return monomial(Monomial(n), c); }

  int num_vars() const { return n_; }
  const TermMap& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }

  C coeff(const Monomial& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? C(0) : it->second;
  }

  /// Adds c·m, pruning the term if it cancels.
  void add_term(const Monomial& m, const C& c) {
    if (m.num_vars() != n_) throw std::invalid_argument("term lives in a ring with a different variable count");
    if (coeff_is_zero(c)) return;
    auto [it, fresh] = t_.try_emplace(m, c);
    if (fresh) return;
    it->second = it->second + c;
    if (coeff_is_zero(it->second)) t_.erase(it);
  }

  /// Largest total degree of a term; -1 for the zero polynomial.
  int degree() const { return t_.empty() ? -1 : t_.begin()->first.degree(); }

  bool is_homogeneous() const {
    if (t_.empty()) return true;
    int d = degree();
    return std::all_of(t_.begin(), t_.end(), [d](const auto& t) { return t.first.degree() == d; });
  }

  std::vector<Monomial> support() const {
    std::vector<Monomial> out;
    out.reserve(t_.size());
    for (auto& [m, c] : t_) out.push_back(m);
    return out;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& [m, c] : r.t_) c = -c;
    return r;
  }
  Polynomial& operator+=(const Polynomial& o) {
    same_ring(o);
    for (auto& [m, c] : o.t_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    same_ring(o);
    for (auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
  }
  Polynomial operator+(const Polynomial& o) const { Polynomial r = *this; return r += o; }
  Polynomial operator-(const Polynomial& o) const { Polynomial r = *this; return r -= o; }

  Polynomial operator*(const Polynomial& o) const {
    same_ring(o);
    Polynomial r(n_);
    for (auto& [ma, ca] : t_)
      for (auto& [mb, cb] : o.t_) r.add_term(ma * mb, ca * cb);
    return r;
  }

  Polynomial scaled(const C& c) const {
    Polynomial r(n_);
    if (coeff_is_zero(c)) return r;
    for (auto& [m, v] : t_) r.add_term(m, v * c);
    return r;
  }

  Polynomial times(const Monomial& m) const {
    Polynomial r(n_);
    for (auto& [t, c] : t_) r.t_.emplace_hint(r.t_.end(), t * m, c);
    return r;
  }

  /// Terms of total degree strictly above d.
  Polynomial part_above(int d) const {
    Polynomial r(n_);
    for (auto& [m, c] : t_)
      if (m.degree() > d) r.t_.emplace_hint(r.t_.end(), m, c);
    return r;
  }
  Polynomial part_at_most(int d) const {
    Polynomial r(n_);
    for (auto& [m, c] : t_)
      if (m.degree() <= d) r.t_.emplace_hint(r.t_.end(), m, c);
    return r;
  }

  /// x_0^{d - deg f} f^h; d defaults to deg f. The zero polynomial stays zero.
  Polynomial homogenized(int d = -1) const {
    if (d < 0) d = std::max(degree(), 0);
    if (d < degree()) throw std::invalid_argument("homogenization degree below polynomial degree");
    Polynomial r(n_);
    for (auto& [m, c] : t_) {
      if (m.exponent(0) != 0) throw std::invalid_argument("homogenize expects a polynomial free of x0");
      r.add_term(m.times_var(0, d - m.degree()), c);
    }
    return r;
  }

  /// Sets x_0 := 1.
  Polynomial dehomogenized() const {
    Polynomial r(n_);
    for (auto& [m, c] : t_) r.add_term(m.dehomogenized(), c);
    return r;
  }

  /// Largest k with x_0^k dividing every term (0 for the zero polynomial).
  int x0_content() const {
    if (t_.empty()) return 0;
    int k = t_.begin()->first.exponent(0);
    for (auto& [m, c] : t_) k = std::min(k, m.exponent(0));
    return k;
  }

  bool operator==(const Polynomial& o) const { return n_ == o.n_ && t_ == o.t_; }

  void same_ring(const Polynomial& o) const {
    if (n_ != o.n_) throw std::invalid_argument("polynomials live in rings with different variable counts");
  }

 private:
  int n_ = 0;
  TermMap t_;
};

using ScalarPoly = Polynomial<Rational>;
using ParamPoly = Polynomial<CoeffPoly>;

inline ParamPoly to_param(const ScalarPoly& f) {
  ParamPoly r(f.num_vars());
  for (auto& [m, c] : f.terms()) r.add_term(m, CoeffPoly(c));
  return r;
}

/// Evaluates every coefficient at the point, giving a scalar polynomial.
inline ScalarPoly substitute_point(const ParamPoly& f, const std::vector<Rational>& values) {
  ScalarPoly r(f.num_vars());
  for (auto& [m, c] : f.terms()) r.add_term(m, c.evaluate(values));
  return r;
}

/// Scalar view of a polynomial whose coefficients are all constants; throws otherwise.
inline ScalarPoly to_scalar(const ParamPoly& f) {
  ScalarPoly r(f.num_vars());
  for (auto& [m, c] : f.terms()) {
    if (!c.is_constant()) throw std::invalid_argument("polynomial has non-constant parameter coefficients");
    r.add_term(m, c.constant_term());
  }
  return r;
}

}  // namespace mb

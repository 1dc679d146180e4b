#pragma once

// Sparse polynomials in the parameter variables C, with rational coefficients.
// These are the coefficients of a generic marked set: each variable stands for
// one C_{αγ}. Variables are plain indices; names live in a ParamTable.

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "markedbases/rational.hpp"

namespace mb {

/// A monomial in the parameter variables: (variable, exponent) pairs sorted by variable.
class ParamMonomial {
 public:
  using Factor = std::pair<std::uint32_t, std::uint32_t>;

  ParamMonomial() = default;
  static ParamMonomial variable(std::uint32_t v, std::uint32_t e = 1) {
    ParamMonomial m;
    if (e != 0) m.f_.emplace_back(v, e);
    return m;
  }

  const std::vector<Factor>& factors() const { return f_; }
  bool is_one() const { return f_.empty(); }
  std::uint32_t degree() const {
    std::uint32_t d = 0;
    for (auto& [v, e] : f_) d += e;
    return d;
  }
  std::uint32_t exponent(std::uint32_t v) const {
    auto it = std::lower_bound(f_.begin(), f_.end(), Factor{v, 0},
                               [](const Factor& a, const Factor& b) { return a.first < b.first; });
    return (it != f_.end() && it->first == v) ? it->second : 0;
  }

  ParamMonomial operator*(const ParamMonomial& o) const {
    ParamMonomial r;
    r.f_.reserve(f_.size() + o.f_.size());
    auto a = f_.begin(), b = o.f_.begin();
    while (a != f_.end() || b != o.f_.end()) {
      if (b == o.f_.end() || (a != f_.end() && a->first < b->first)) r.f_.push_back(*a++);
      else if (a == f_.end() || b->first < a->first) r.f_.push_back(*b++);
      else {
        r.f_.emplace_back(a->first, a->second + b->second);
        ++a, ++b;
      }
    }
    return r;
  }

  /// Removes one power of v; the caller guarantees v divides the monomial.
  ParamMonomial without_one(std::uint32_t v) const {
    ParamMonomial r = *this;
    for (auto it = r.f_.begin(); it != r.f_.end(); ++it)
      if (it->first == v) {
        if (--it->second == 0) r.f_.erase(it);
        return r;
      }
    throw std::logic_error("parameter variable does not divide monomial");
  }

  bool operator==(const ParamMonomial& o) const { return f_ == o.f_; }

  /// Graded order; within a degree, the smaller variable index is the larger variable.
  friend bool operator<(const ParamMonomial& a, const ParamMonomial& b) {
    auto da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    std::size_t k = 0;
    for (; k < a.f_.size() && k < b.f_.size(); ++k) {
      if (a.f_[k].first != b.f_[k].first) return a.f_[k].first > b.f_[k].first;
      if (a.f_[k].second != b.f_[k].second) return a.f_[k].second < b.f_[k].second;
    }
    return a.f_.size() < b.f_.size();
  }

  std::size_t hash() const {
    std::size_t h = 0xCBF29CE484222325ull;
    for (auto& [v, e] : f_) h = (h ^ (std::size_t(v) << 8 ^ e)) * 0x100000001B3ull;
    return h;
  }

 private:
  std::vector<Factor> f_;
};

class CoeffPoly {
 public:
  using Term = std::pair<ParamMonomial, Rational>;

  CoeffPoly() = default;
  CoeffPoly(const Rational& c) {  // NOLINT(google-explicit-constructor)
    if (!mb::is_zero(c)) t_.emplace_back(ParamMonomial{}, c);
  }
  CoeffPoly(int c) : CoeffPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static CoeffPoly variable(std::uint32_t v) {
    CoeffPoly p;
    p.t_.emplace_back(ParamMonomial::variable(v), Rational(1));
    return p;
  }
  static CoeffPoly term(ParamMonomial m, Rational c) {
    CoeffPoly p;
    if (!mb::is_zero(c)) p.t_.emplace_back(std::move(m), std::move(c));
    return p;
  }
  /// Builds from arbitrary terms: sorts, merges and drops zeros.
  static CoeffPoly from_terms(std::vector<Term> terms) {
    CoeffPoly p;
    p.t_ = std::move(terms);
    p.normalize();
    return p;
  }

  /// Terms sorted descending (largest monomial first).
  const std::vector<Term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first.is_one()); }
  Rational constant_term() const {
    return (!t_.empty() && t_.back().first.is_one()) ? t_.back().second : Rational(0);
  }
  std::size_t size() const { return t_.size(); }
  std::uint32_t total_degree() const { return t_.empty() ? 0 : t_.front().first.degree(); }
  std::uint32_t min_degree() const { return t_.empty() ? 0 : t_.back().first.degree(); }

  CoeffPoly operator-() const {
    CoeffPoly r = *this;
    for (auto& [m, c] : r.t_) c = -c;
    return r;
  }
  CoeffPoly operator+(const CoeffPoly& o) const { return merge(o, false); }
  CoeffPoly operator-(const CoeffPoly& o) const { return merge(o, true); }
  CoeffPoly& operator+=(const CoeffPoly& o) { return *this = merge(o, false); }
  CoeffPoly& operator-=(const CoeffPoly& o) { return *this = merge(o, true); }

  CoeffPoly operator*(const CoeffPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    if (o.is_constant()) return scaled(o.t_[0].second);
    if (is_constant()) return o.scaled(t_[0].second);
    std::vector<Term> out;
    out.reserve(t_.size() * o.t_.size());
    for (auto& [ma, ca] : t_)
      for (auto& [mb, cb] : o.t_) out.emplace_back(ma * mb, ca * cb);
    return from_terms(std::move(out));
  }
  CoeffPoly& operator*=(const CoeffPoly& o) { return *this = *this * o; }

  CoeffPoly scaled(const Rational& c) const {
    if (mb::is_zero(c)) return {};
    CoeffPoly r = *this;
    for (auto& [m, v] : r.t_) v *= c;
    return r;
  }

  bool operator==(const CoeffPoly& o) const { return t_ == o.t_; }

  /// Value at a point given as one rational per variable index.
  Rational evaluate(const std::vector<Rational>& values) const {
    Rational sum = 0;
    for (auto& [m, c] : t_) {
      Rational v = c;
      for (auto& [var, e] : m.factors()) {
        const Rational& x = at(values, var);
        for (std::uint32_t k = 0; k < e; ++k) v *= x;
      }
      sum += v;
    }
    return sum;
  }

  /// Gradient at a point, as (variable, partial derivative) pairs with nonzero value.
  std::vector<std::pair<std::uint32_t, Rational>> gradient(const std::vector<Rational>& values) const {
    std::map<std::uint32_t, Rational> acc;
    for (auto& [m, c] : t_) {
      const auto& f = m.factors();
      for (std::size_t k = 0; k < f.size(); ++k) {
        Rational v = c * f[k].second;
        for (std::size_t j = 0; j < f.size(); ++j) {
          std::uint32_t e = f[j].second - (j == k ? 1 : 0);
          const Rational& x = at(values, f[j].first);
          for (std::uint32_t r = 0; r < e; ++r) v *= x;
          if (mb::is_zero(v)) break;
        }
        if (!mb::is_zero(v)) acc[f[k].first] += v;
      }
    }
    std::vector<std::pair<std::uint32_t, Rational>> out;
    for (auto& [var, v] : acc)
      if (!mb::is_zero(v)) out.emplace_back(var, v);
    return out;
  }

  /// Replaces every variable v by sign(v)*v, where flip(v) says whether to negate.
  template <class Flip>
  CoeffPoly with_flipped_signs(Flip flip) const {
    CoeffPoly r = *this;
    for (auto& [m, c] : r.t_) {
      std::uint32_t odd = 0;
      for (auto& [v, e] : m.factors())
        if (flip(v)) odd += e;
      if (odd % 2) c = -c;
    }
    return r;
  }

  /// Every variable index occurring in the polynomial.
  std::vector<std::uint32_t> variables() const {
    std::vector<std::uint32_t> out;
    for (auto& [m, c] : t_)
      for (auto& [v, e] : m.factors()) out.push_back(v);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::size_t hash() const {
    std::size_t h = t_.size();
    for (auto& [m, c] : t_) {
      h = h * 31 + m.hash();
      h = h * 31 + std::hash<std::string>{}(c.get_str());
    }
    return h;
  }

 private:
  static const Rational& at(const std::vector<Rational>& values, std::uint32_t v) {
    if (v >= values.size()) throw std::out_of_range("point has no value for parameter " + std::to_string(v));
    return values[v];
  }

  void normalize() {
    std::sort(t_.begin(), t_.end(), [](const Term& a, const Term& b) { return b.first < a.first; });
    std::vector<Term> out;
    out.reserve(t_.size());
    for (auto& t : t_) {
      if (!out.empty() && out.back().first == t.first) out.back().second += t.second;
      else out.push_back(std::move(t));
    }
    std::erase_if(out, [](const Term& t) { return mb::is_zero(t.second); });
    t_ = std::move(out);
  }

  CoeffPoly merge(const CoeffPoly& o, bool subtract) const {
    CoeffPoly r;
    r.t_.reserve(t_.size() + o.t_.size());
    auto a = t_.begin(), b = o.t_.begin();
    while (a != t_.end() || b != o.t_.end()) {
      if (b == o.t_.end() || (a != t_.end() && b->first < a->first)) {
        r.t_.push_back(*a++);
      } else if (a == t_.end() || a->first < b->first) {
        r.t_.emplace_back(b->first, subtract ? Rational(-b->second) : b->second);
        ++b;
      } else {
        Rational c = subtract ? Rational(a->second - b->second) : Rational(a->second + b->second);
        if (!mb::is_zero(c)) r.t_.emplace_back(a->first, std::move(c));
        ++a, ++b;
      }
    }
    return r;
  }

  std::vector<Term> t_;
};

/// Names of parameter variables, indexed by variable number.
class ParamTable {
 public:
  std::uint32_t index_of(const std::string& name) {
    auto it = by_name_.find(name);
    if (it != by_name_.end()) return it->second;
    auto idx = static_cast<std::uint32_t>(names_.size());
    names_.push_back(name);
    by_name_.emplace(name, idx);
    return idx;
  }
  /// Index of an existing name, or -1.
  std::int64_t find(const std::string& name) const {
    auto it = by_name_.find(name);
    return it == by_name_.end() ? -1 : static_cast<std::int64_t>(it->second);
  }
  const std::string& name(std::uint32_t idx) const { return names_.at(idx); }
  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::uint32_t> by_name_;
};

}  // namespace mb

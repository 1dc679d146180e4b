#pragma once

// Monomials in K[x_0, x_1, ..., x_n] with the variable order x_n > ... > x_1 > x_0,
// and the term orders used to compare them.
//
// A monomial always carries a slot for x_0; monomials of R = K[x_1..x_n] simply
// keep that slot at zero. This makes (de)homogenization a matter of touching one
// exponent.

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mb {

/// Largest supported n (variables x_1..x_n, plus x_0).
inline constexpr int kMaxVariables = 15;

class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;

  /// The constant monomial 1 in a ring with variables x_1..x_n (plus x_0).
  explicit Monomial(int n) : n_(check_n(n)) {}

  /// Exponents listed for x_1..x_n; x_0 gets `x0`.
  static Monomial from_exponents(int n, std::span<const int> exps, int x0 = 0) {
    if (static_cast<int>(exps.size()) != n)
      throw std::invalid_argument("exponent vector length does not match variable count");
    Monomial m(n);
    m.set(0, x0);
    for (int i = 1; i <= n; ++i) m.set(i, exps[i - 1]);
    return m;
  }
  static Monomial from_exponents(int n, std::initializer_list<int> exps, int x0 = 0) {
    return from_exponents(n, std::span<const int>(exps.begin(), exps.size()), x0);
  }

  /// The single variable x_i.
  static Monomial variable(int n, int i) {
    Monomial m(n);
    m.set(i, 1);
    return m;
  }

  int num_vars() const { return n_; }
  int exponent(int i) const { return e_[static_cast<std::size_t>(i)]; }
  int degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }

  void set(int i, int value) {
    if (i < 0 || i > n_) throw std::out_of_range("variable index out of range");
    if (value < 0 || value > 0xFFFF) throw std::out_of_range("exponent out of range");
    deg_ += value - e_[static_cast<std::size_t>(i)];
    e_[static_cast<std::size_t>(i)] = static_cast<Exponent>(value);
  }

  /// Index of the smallest variable dividing the monomial, -1 for 1.
  int min_var() const {
    for (int i = 0; i <= n_; ++i)
      if (e_[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
  }
  /// Index of the largest variable dividing the monomial, -1 for 1.
  int max_var() const {
    for (int i = n_; i >= 0; --i)
      if (e_[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
  }

  bool divides(const Monomial& other) const {
    same_ring(other);
    for (int i = 0; i <= n_; ++i)
      if (e_[static_cast<std::size_t>(i)] > other.e_[static_cast<std::size_t>(i)]) return false;
    return true;
  }

  Monomial operator*(const Monomial& other) const {
    same_ring(other);
    Monomial r(n_);
    for (int i = 0; i <= n_; ++i) {
      int v = e_[static_cast<std::size_t>(i)] + other.e_[static_cast<std::size_t>(i)];
      r.set(i, v);
    }
    return r;
  }

  /// this / other; throws unless other divides this.
  Monomial operator/(const Monomial& other) const {
    if (!other.divides(*this)) throw std::invalid_argument("monomial division is not exact");
    Monomial r(n_);
    for (int i = 0; i <= n_; ++i)
      r.set(i, e_[static_cast<std::size_t>(i)] - other.e_[static_cast<std::size_t>(i)]);
    return r;
  }

  Monomial times_var(int i, int power = 1) const {
    Monomial r = *this;
    r.set(i, exponent(i) + power);
    return r;
  }

  /// Drops x_0.
  Monomial dehomogenized() const {
    Monomial r = *this;
    r.set(0, 0);
    return r;
  }

  /// Same exponents in a ring with a different n (extra variables get exponent 0).
  Monomial with_num_vars(int n) const {
    Monomial r(n);
    for (int i = 0; i <= std::min(n, n_); ++i) r.set(i, exponent(i));
    for (int i = n + 1; i <= n_; ++i)
      if (exponent(i) != 0) throw std::invalid_argument("monomial uses a variable outside the target ring");
    return r;
  }

  bool operator==(const Monomial& o) const { return n_ == o.n_ && e_ == o.e_; }

  std::size_t hash() const {
    std::size_t h = static_cast<std::size_t>(n_) * 0x9E3779B97F4A7C15ull;
    for (int i = 0; i <= n_; ++i)
      h = (h ^ e_[static_cast<std::size_t>(i)]) * 0x100000001B3ull;
    return h;
  }

  void same_ring(const Monomial& o) const {
    if (n_ != o.n_) throw std::invalid_argument("monomials live in rings with different variable counts");
  }

 private:
  static int check_n(int n) {
    if (n < 0 || n > kMaxVariables)
      throw std::invalid_argument("variable count must be in [0, " + std::to_string(kMaxVariables) + "]");
    return n;
  }

  std::array<Exponent, kMaxVariables + 1> e_{};
  std::int32_t deg_ = 0;
  std::int32_t n_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// ---------------------------------------------------------------------------
// Orders. All comparisons return how `a` relates to `b`; x_n > ... > x_0.

inline std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) {
  a.same_ring(b);
  for (int i = a.num_vars(); i >= 0; --i)
    if (a.exponent(i) != b.exponent(i)) return a.exponent(i) <=> b.exponent(i);
  return std::strong_ordering::equal;
}

inline std::strong_ordering deglex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  return lex_compare(a, b);
}

inline std::strong_ordering degrevlex_compare(const Monomial& a, const Monomial& b) {
  a.same_ring(b);
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (int i = 0; i <= a.num_vars(); ++i)
    if (a.exponent(i) != b.exponent(i)) return b.exponent(i) <=> a.exponent(i);
  return std::strong_ordering::equal;
}

/// Weight vector over x_0..x_n. Construct it from the listing convention in use.
class WeightVector {
 public:
  /// Weights listed for x_1, ..., x_n (x_0 gets weight 0 unless given).
  static WeightVector ascending(std::vector<std::int64_t> w, std::int64_t x0 = 0) {
    WeightVector v;
    v.w_.push_back(x0);
    v.w_.insert(v.w_.end(), w.begin(), w.end());
    return v;
  }
  /// Weights listed for x_n, ..., x_1.
  static WeightVector descending(std::vector<std::int64_t> w, std::int64_t x0 = 0) {
    std::reverse(w.begin(), w.end());
    return ascending(std::move(w), x0);
  }

  int num_vars() const { return static_cast<int>(w_.size()) - 1; }
  std::int64_t weight(int i) const { return w_.at(static_cast<std::size_t>(i)); }

  std::int64_t degree(const Monomial& m) const {
    if (m.num_vars() != num_vars()) throw std::invalid_argument("weight vector and monomial ring differ");
    std::int64_t d = 0;
    for (int i = 0; i <= m.num_vars(); ++i) d += w_[static_cast<std::size_t>(i)] * m.exponent(i);
    return d;
  }

 private:
  std::vector<std::int64_t> w_;
};

class TermOrder {
 public:
  enum class Kind { Lex, DegLex, DegRevLex, Weighted };

  static TermOrder lex() { return TermOrder(Kind::Lex); }
  static TermOrder deglex() { return TermOrder(Kind::DegLex); }
  static TermOrder degrevlex() { return TermOrder(Kind::DegRevLex); }
  /// Compares ω-degrees first, then falls back to `tie_break` (not itself Weighted).
  static TermOrder weighted(WeightVector w, Kind tie_break = Kind::DegRevLex) {
    if (tie_break == Kind::Weighted) throw std::invalid_argument("tie-break order cannot be weighted");
    TermOrder o(Kind::Weighted);
    o.weights_ = std::move(w);
    o.tie_ = tie_break;
    return o;
  }

  Kind kind() const { return kind_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    a.same_ring(b);
    switch (kind_) {
      case Kind::Lex: return lex_compare(a, b);
      case Kind::DegLex: return deglex_compare(a, b);
      case Kind::DegRevLex: return degrevlex_compare(a, b);
      case Kind::Weighted: {
        auto wa = weights_.degree(a), wb = weights_.degree(b);
        if (wa != wb) return wa <=> wb;
        return TermOrder(tie_).compare(a, b);
      }
    }
    return std::strong_ordering::equal;
  }

 private:
  explicit TermOrder(Kind k) : kind_(k) {}
  Kind kind_;
  Kind tie_ = Kind::DegRevLex;
  WeightVector weights_;
};

/// Storage order for polynomial terms: DegRevLex, largest first.
struct DegRevLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return degrevlex_compare(a, b) > 0; }
};

/// Printing order: DegLex, largest first.
struct DegLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return deglex_compare(a, b) > 0; }
};

struct LexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return lex_compare(a, b) > 0; }
};

/// All monomials of exactly degree d in x_lo..x_n, in DegLex-descending order.
inline std::vector<Monomial> monomials_of_degree(int n, int d, int lo = 1) {
  std::vector<Monomial> out;
  Monomial cur(n);
  // Recursive fill from the largest variable down: yields Lex-descending order.
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == lo) {
      cur.set(var, left);
      out.push_back(cur);
      cur.set(var, 0);
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur.set(var, e);
      rec(var - 1, left - e);
    }
    cur.set(var, 0);
  };
  if (d < 0) return out;
  if (n < lo) {
    if (d == 0) out.push_back(cur);
    return out;
  }
  rec(n, d);
  return out;
}

}  // namespace mb

template <>
struct std::hash<mb::Monomial> {
  std::size_t operator()(const mb::Monomial& m) const { return m.hash(); }
};

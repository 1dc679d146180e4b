#pragma once

// Hilbert functions and polynomials of quotients by strongly stable ideals,
// by direct enumeration of the sous-escalier.

#include <stdexcept>
#include <string>
#include <vector>

#include "markedbases/ideal.hpp"
#include "markedbases/rational.hpp"

namespace mb {

struct InterpolationUnstable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A polynomial in ℚ[t], coefficients in the monomial basis (index = power of t).
class NumericalPolynomial {
 public:
  NumericalPolynomial() = default;
  explicit NumericalPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  static NumericalPolynomial constant(const Rational& v) { return NumericalPolynomial({v}); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational coefficient(int k) const {
    return k >= 0 && k < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(k)] : Rational(0);
  }

  Rational operator()(const Rational& t) const {
    Rational v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * t + *it;
    return v;
  }

  bool operator==(const NumericalPolynomial&) const = default;

  /// Lagrange interpolation through (t_k, v_k).
  static NumericalPolynomial interpolate(const std::vector<long>& ts, const std::vector<Rational>& vs) {
    std::vector<Rational> acc(ts.size(), Rational(0));
    for (std::size_t i = 0; i < ts.size(); ++i) {
      std::vector<Rational> basis{Rational(1)};
      Rational denom = 1;
      for (std::size_t j = 0; j < ts.size(); ++j) {
        if (j == i) continue;
        std::vector<Rational> next(basis.size() + 1, Rational(0));
        for (std::size_t k = 0; k < basis.size(); ++k) {
          next[k + 1] += basis[k];
          next[k] -= basis[k] * ts[j];
        }
        basis = std::move(next);
        denom *= Rational(ts[i] - ts[j]);
      }
      for (std::size_t k = 0; k < basis.size(); ++k) acc[k] += vs[i] * basis[k] / denom;
    }
    for (auto& a : acc) a.canonicalize();
    return NumericalPolynomial(std::move(acc));
  }

 private:
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }
  std::vector<Rational> c_;
};

/// E.g. "2*t + 1", "16", "1/2*t^2 - t".
inline std::string to_string(const NumericalPolynomial& p) {
  if (p.degree() < 0) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    Rational c = p.coefficient(k);
    if (is_zero(c)) continue;
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    if (out.empty()) out = neg ? "-" : "";
    else out += neg ? " - " : " + ";
    std::string mono = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
    if (mono.empty()) out += to_string(a);
    else if (is_one(a)) out += mono;
    else out += to_string(a) + "*" + mono;
  }
  return out;
}

/// Graded: |N(J)_t|. Affine: |N(𝔧)_{≤t}|, only for ideals of R.
inline std::size_t hilbert_function(const StronglyStableIdeal& J, int t, bool affine = false) {
  if (t < 0) throw std::invalid_argument("Hilbert function argument must be non-negative");
  if (affine) {
    if (J.ring() != Ring::R) throw std::invalid_argument("the affine Hilbert function is defined for ideals of R");
    return J.sous_escalier(t).size();
  }
  return J.sous_escalier_degree(t).size();
}

/// Interpolates the counting function at reg..reg+n and checks two more values.
inline NumericalPolynomial hilbert_polynomial(const StronglyStableIdeal& J, bool affine = false) {
  int start = J.regularity();
  int points = J.num_vars() + 1;
  std::vector<long> ts;
  std::vector<Rational> vs;
  for (int k = 0; k < points; ++k) {
    ts.push_back(start + k);
    vs.emplace_back(static_cast<unsigned long>(hilbert_function(J, start + k, affine)));
  }
  auto P = NumericalPolynomial::interpolate(ts, vs);
  for (int k = points; k < points + 2; ++k) {
    Rational expected(static_cast<unsigned long>(hilbert_function(J, start + k, affine)));
    if (P(Rational(start + k)) != expected)
      throw InterpolationUnstable("interpolated Hilbert polynomial disagrees with the count at t = " +
                                  std::to_string(start + k));
  }
  return P;
}

}  // namespace mb

#pragma once

// Canonical text form of monomials and polynomials.
//
//   poly    := ["-"] term { ("+" | "-") term }
//   term    := factor { "*" factor }
//   factor  := int ["/" int] | "x" int ["^" int] | param ["^" int] | "(" poly ")"
//   param   := identifier | "c[" exps ";" exps "]"
//
// Printing lists x-monomials in DegLex-descending order, variables inside a
// monomial by descending index, and omits unit coefficients. Parameter
// coefficients with several terms are parenthesized. parse(print(f)) == f.

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "markedbases/coeff_poly.hpp"
#include "markedbases/monomial.hpp"
#include "markedbases/polynomial.hpp"
#include "markedbases/rational.hpp"

namespace mb {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string s;
  for (int i = m.num_vars(); i >= 0; --i) {
    int e = m.exponent(i);
    if (e == 0) continue;
    if (!s.empty()) s += '*';
    s += 'x' + std::to_string(i);
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s;
}

/// "a1,...,an" for the exponents of x_1..x_n.
inline std::string exponent_tuple(const Monomial& m) {
  std::string s;
  for (int i = 1; i <= m.num_vars(); ++i) {
    if (i > 1) s += ',';
    s += std::to_string(m.exponent(i));
  }
  return s;
}

/// Canonical parameter name c[α;γ].
inline std::string param_name(const Monomial& alpha, const Monomial& gamma) {
  return "c[" + exponent_tuple(alpha) + ";" + exponent_tuple(gamma) + "]";
}

inline std::string to_string(const ParamMonomial& m, const ParamTable* names) {
  std::string s;
  for (auto& [v, e] : m.factors()) {
    if (!s.empty()) s += '*';
    s += names ? names->name(v) : "p" + std::to_string(v);
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s;
}

namespace detail {

inline void append_term(std::string& out, bool negative, const std::string& body) {
  if (out.empty()) out = negative ? "-" + body : body;
  else out += (negative ? " - " : " + ") + body;
}

/// Body of |c|·(param part)·(x part) without sign.
inline std::string scaled_body(const Rational& abs_c, const std::string& factors) {
  if (factors.empty()) return to_string(abs_c);
  if (is_one(abs_c)) return factors;
  return to_string(abs_c) + "*" + factors;
}

inline std::string join_factors(const std::string& a, const std::string& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  return a + "*" + b;
}

template <class Map>
std::vector<const typename Map::value_type*> print_order(const Map& terms) {
  std::vector<const typename Map::value_type*> v;
  for (auto& t : terms) v.push_back(&t);
  std::sort(v.begin(), v.end(), [](auto* a, auto* b) { return deglex_compare(a->first, b->first) > 0; });
  return v;
}

}  // namespace detail

inline std::string to_string(const ScalarPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (auto* t : detail::print_order(f.terms())) {
    const Rational& c = t->second;
    std::string x = t->first.is_one() ? "" : to_string(t->first);
    detail::append_term(out, sgn(c) < 0, detail::scaled_body(abs(c), x));
  }
  return out;
}

inline std::string to_string(const CoeffPoly& p, const ParamTable* names) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto& [m, c] : p.terms())
    detail::append_term(out, sgn(c) < 0, detail::scaled_body(abs(c), to_string(m, names)));
  return out;
}

inline std::string to_string(const ParamPoly& f, const ParamTable* names) {
  if (f.is_zero()) return "0";
  std::string out;
  for (auto* t : detail::print_order(f.terms())) {
    const CoeffPoly& c = t->second;
    std::string x = t->first.is_one() ? "" : to_string(t->first);
    if (c.size() == 1) {
      auto& [pm, r] = c.terms()[0];
      detail::append_term(out, sgn(r) < 0, detail::scaled_body(abs(r), detail::join_factors(to_string(pm, names), x)));
    } else {
      detail::append_term(out, false, detail::join_factors("(" + to_string(c, names) + ")", x));
    }
  }
  return out;
}

namespace detail {

class Parser {
 public:
  Parser(std::string_view s, int n, ParamTable* params) : s_(s), n_(n), params_(params) {}

  ParamPoly parse_all() {
    ParamPoly p = poly();
    skip();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("parse error at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  std::string digits() {
    skip();
    std::size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (b == pos_) fail("expected a number");
    return std::string(s_.substr(b, pos_ - b));
  }
  int small_int() {
    auto d = digits();
    if (d.size() > 6) fail("integer too large");
    return std::stoi(d);
  }

  ParamPoly poly() {
    ParamPoly acc(n_);
    bool neg = eat('-');
    if (!neg) eat('+');
    for (;;) {
      ParamPoly t = term();
      if (neg) acc -= t;
      else acc += t;
      if (eat('+')) neg = false;
      else if (eat('-')) neg = true;
      else break;
    }
    return acc;
  }

  ParamPoly term() {
    ParamPoly t = factor();
    while (eat('*')) t = t * factor();
    return t;
  }

  ParamPoly factor() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      ParamPoly p = poly();
      if (!eat(')')) fail("expected ')'");
      return power(p);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      if (eat('/')) num += "/" + digits();
      return ParamPoly::constant(n_, CoeffPoly(parse_rational(num)));
    }
    if (c == 'x' && pos_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
      ++pos_;
      int i = small_int();
      if (i > n_) fail("variable x" + std::to_string(i) + " outside the ring x0..x" + std::to_string(n_));
      int e = eat('^') ? small_int() : 1;
      Monomial m(n_);
      m.set(i, e);
      return ParamPoly::monomial(m);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return power(param());
    fail("expected a factor");
  }

  ParamPoly power(ParamPoly base) {
    if (!eat('^')) return base;
    int e = small_int();
    ParamPoly r = ParamPoly::constant(n_, CoeffPoly(1));
    for (int k = 0; k < e; ++k) r = r * base;
    return r;
  }

  ParamPoly param() {
    std::size_t b = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (pos_ < s_.size() && s_[pos_] == '[') {
      while (pos_ < s_.size() && s_[pos_] != ']') ++pos_;
      if (pos_ == s_.size()) fail("unterminated parameter name");
      ++pos_;
    }
    std::string name(s_.substr(b, pos_ - b));
    if (!params_) fail("parameter '" + name + "' in a scalar context");
    return ParamPoly::constant(n_, CoeffPoly::variable(params_->index_of(name)));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  int n_;
  ParamTable* params_;
};

}  // namespace detail

/// Parses a polynomial in x_0..x_n; parameter names are registered in `params`.
inline ParamPoly parse_param_poly(std::string_view s, int n, ParamTable& params) {
  return detail::Parser(s, n, &params).parse_all();
}

inline ScalarPoly parse_poly(std::string_view s, int n) {
  return to_scalar(detail::Parser(s, n, nullptr).parse_all());
}

inline Monomial parse_monomial(std::string_view s, int n) {
  ScalarPoly p = parse_poly(s, n);
  if (p.size() != 1 || !is_one(p.terms().begin()->second))
    throw ParseError("\"" + std::string(s) + "\" is not a monomial");
  return p.terms().begin()->first;
}

}  // namespace mb

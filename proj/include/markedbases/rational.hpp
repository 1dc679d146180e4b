#pragma once

// Exact rational scalars, backed by GMP.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace mb {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational.
inline Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  Rational r;
  if (r.set_str(std::string(text), 10) != 0)
    throw std::invalid_argument("bad rational literal: " + std::string(text));
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  r.canonicalize();
  return r;
}

/// Prints "p" or "p/q" with the sign on the numerator.
inline std::string to_string(const Rational& r) { return r.get_str(10); }

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_one(const Rational& r) { return r == 1; }

}  // namespace mb

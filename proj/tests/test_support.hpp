#pragma once

#include <gtest/gtest.h>

#include <filesystem>
#include <ostream>
#include <string>

#include "markedbases/markedbases.hpp"

namespace mb {

inline void PrintTo(const Monomial& m, std::ostream* os) { *os << to_string(m); }
inline void PrintTo(const ScalarPoly& f, std::ostream* os) { *os << to_string(f); }

}  // namespace mb

namespace mbtest {

inline std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(MARKEDBASES_FIXTURE_DIR) / name;
}

inline mb::Monomial mono(const std::string& s, int n) { return mb::parse_monomial(s, n); }
inline mb::ScalarPoly poly(const std::string& s, int n) { return mb::parse_poly(s, n); }

inline mb::MarkedSet<mb::Rational> marked(const mb::StronglyStableIdeal& J, int m,
                                          std::initializer_list<std::pair<const char*, const char*>> polys) {
  std::vector<mb::MarkedPolynomial<mb::Rational>> ps;
  for (auto& [h, f] : polys)
    ps.push_back(mb::MarkedPolynomial<mb::Rational>::from_poly(mono(h, J.num_vars()), poly(f, J.num_vars())));
  return mb::MarkedSet<mb::Rational>(J, m, std::move(ps));
}

inline mb::MarkedSet<mb::Rational> load_scalar(const std::string& name) {
  return mb::load_marked_set(fixture(name)).scalar();
}

}  // namespace mbtest

#pragma once

// Exact rank of sparse rational matrices by fraction-free elimination.
// Rows are scaled to primitive integer vectors; a row is reduced only against
// the pivot owning its current leading column, so fill-in stays to the right.

#include <algorithm>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "markedbases/rational.hpp"

namespace mb {

using SparseRow = std::vector<std::pair<std::uint32_t, Rational>>;
using IntRow = std::vector<std::pair<std::uint32_t, Integer>>;

namespace detail {

inline void make_primitive(IntRow& r) {
  if (r.empty()) return;
  Integer g = 0;
  for (auto& [c, v] : r) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (sgn(r.front().second) < 0) g = -g;
  if (g != 1)
    for (auto& [c, v] : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

/// Clears denominators; sorts by column and drops zeros.
inline IntRow to_int_row(SparseRow row) {
  std::sort(row.begin(), row.end(), [](auto& a, auto& b) { return a.first < b.first; });
  Integer l = 1;
  for (auto& [c, v] : row)
    if (!is_zero(v)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  IntRow out;
  out.reserve(row.size());
  for (auto& [c, v] : row) {
    if (is_zero(v)) continue;
    Integer x = l / v.get_den();
    x *= v.get_num();
    if (!out.empty() && out.back().first == c) out.back().second += x;
    else out.emplace_back(c, std::move(x));
  }
  std::erase_if(out, [](auto& e) { return sgn(e.second) == 0; });
  make_primitive(out);
  return out;
}

/// a·r − b·p, where both are sorted by column.
inline IntRow combine(const Integer& a, const IntRow& r, const Integer& b, const IntRow& p) {
  IntRow out;
  out.reserve(r.size() + p.size());
  auto i = r.begin(), j = p.begin();
  while (i != r.end() || j != p.end()) {
    if (j == p.end() || (i != r.end() && i->first < j->first)) {
      out.emplace_back(i->first, a * i->second);
      ++i;
    } else if (i == r.end() || j->first < i->first) {
      out.emplace_back(j->first, -b * j->second);
      ++j;
    } else {
      Integer v = a * i->second;
      v -= b * j->second;
      if (sgn(v) != 0) out.emplace_back(i->first, std::move(v));
      ++i, ++j;
    }
  }
  return out;
}

}  // namespace detail

/// Row echelon form built one row at a time. Smaller column indices lead.
class Echelon {
 public:
  /// Reduces the row against the current pivots; returns true if it was independent.
  bool add(SparseRow row) { return add_int(detail::to_int_row(std::move(row))); }

  bool add_int(IntRow r) {
    while (!r.empty()) {
      auto it = pivots_.find(r.front().first);
      if (it == pivots_.end()) {
        std::uint32_t col = r.front().first;
        pivots_.emplace(col, std::move(r));
        return true;
      }
      const IntRow& p = it->second;
      Integer g;
      mpz_gcd(g.get_mpz_t(), p.front().second.get_mpz_t(), r.front().second.get_mpz_t());
      Integer a = p.front().second / g, b = r.front().second / g;
      r = detail::combine(a, r, b, p);
      detail::make_primitive(r);
    }
    return false;
  }

  std::size_t rank() const { return pivots_.size(); }
  /// Pivot rows keyed by leading column.
  const std::map<std::uint32_t, IntRow>& pivots() const { return pivots_; }

 private:
  std::map<std::uint32_t, IntRow> pivots_;
};

/// Exact rank. Rows are fed sparsest first.
inline std::size_t exact_rank(std::vector<SparseRow> rows) {
  std::vector<IntRow> ints;
  ints.reserve(rows.size());
  for (auto& r : rows) ints.push_back(detail::to_int_row(std::move(r)));
  std::stable_sort(ints.begin(), ints.end(), [](auto& a, auto& b) { return a.size() < b.size(); });
  Echelon e;
  for (auto& r : ints) e.add_int(std::move(r));
  return e.rank();
}

/// Exact rank with columns renumbered so the sparsest columns lead.
inline std::size_t exact_rank_sparse_pivoting(std::vector<SparseRow> rows) {
  std::unordered_map<std::uint32_t, std::size_t> count;
  for (auto& r : rows)
    for (auto& [c, v] : r)
      if (!is_zero(v)) ++count[c];
  std::vector<std::uint32_t> cols;
  for (auto& [c, k] : count) cols.push_back(c);
  std::sort(cols.begin(), cols.end(), [&](auto a, auto b) { return count[a] != count[b] ? count[a] < count[b] : a < b; });
  std::unordered_map<std::uint32_t, std::uint32_t> remap;
  for (std::uint32_t k = 0; k < cols.size(); ++k) remap[cols[k]] = k;
  for (auto& r : rows)
    for (auto& [c, v] : r) c = remap[c];
  return exact_rank(std::move(rows));
}

}  // namespace mb

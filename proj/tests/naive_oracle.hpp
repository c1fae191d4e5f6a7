// Test-only reference implementations, kept deliberately naive and separate
// from the library code paths they check.
#ifndef HP0_TESTS_NAIVE_ORACLE_HPP
#define HP0_TESTS_NAIVE_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "hp0/rational.hpp"

namespace naive {

/// Dense row reduction over the rationals. Rows are dense coefficient
/// vectors; returns the reduced echelon with pivot columns.
struct Echelon {
  std::vector<std::vector<hp0::BigRat>> rows;
  std::vector<std::uint32_t> pivot_cols;

  void insert(std::vector<hp0::BigRat> v) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      std::uint32_t p = pivot_cols[r];
      if (sgn(v[p]) != 0) {
        hp0::BigRat c = v[p];
        for (std::size_t j = 0; j < v.size(); ++j) v[j] -= c * rows[r][j];
      }
    }
    std::uint32_t lead = 0;
    while (lead < v.size() && sgn(v[lead]) == 0) ++lead;
    if (lead == v.size()) return;
    hp0::BigRat inv = 1 / v[lead];
    for (auto& x : v) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      hp0::BigRat c = rows[r][lead];
      if (sgn(c) == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j) rows[r][j] -= c * v[j];
    }
    rows.push_back(std::move(v));
    pivot_cols.push_back(lead);
  }

  std::size_t rank() const { return rows.size(); }

  std::vector<std::uint32_t> sorted_pivots() const {
    auto p = pivot_cols;
    std::sort(p.begin(), p.end());
    return p;
  }
};

}  // namespace naive

#endif

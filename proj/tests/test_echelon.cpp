#include "hp0/echelon.hpp"

#include <random>

#include "doctest.h"
#include "naive_oracle.hpp"

using hp0::BigRat;
using hp0::EchelonSpan;
using hp0::SparseInts;
using hp0::SparseRats;

namespace {

SparseInts to_sparse(const std::vector<long long>& dense) {
  SparseInts out;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) out.push_back({static_cast<std::uint32_t>(i), dense[i]});
  return out;
}

std::vector<BigRat> to_dense(const std::vector<long long>& v) {
  std::vector<BigRat> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = BigRat(static_cast<long>(v[i]));
  return out;
}

}  // namespace

TEST_CASE("span matches naive reduction on random sparse systems") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (int trial = 0; trial < 60; ++trial) {
    std::uint32_t m = 4 + trial % 13;
    EchelonSpan span(m);
    naive::Echelon ref;
    int inserts = 3 + trial % 20;
    for (int i = 0; i < inserts; ++i) {
      std::vector<long long> v(m);
      for (auto& x : v) x = coef(rng) == 2 ? coef(rng) : 0;
      span.insert_ints(to_sparse(v));
      ref.insert(to_dense(v));
    }
    CHECK(span.rank() == ref.rank());
    CHECK(span.pivot_ids() == ref.sorted_pivots());
  }
}

TEST_CASE("membership via normal form") {
  // rows e1 - e3, e2 + e3 inside a 3-dim coordinate space
  EchelonSpan span(3);
  span.insert_ints({{0, 1}, {2, -1}});
  span.insert_ints({{1, 1}, {2, 1}});
  CHECK(span.rank() == 2);
  // (1,1,0) = (e1 - e3) + (e2 + e3)
  CHECK(span.member({{0, BigRat(1)}, {1, BigRat(1)}}));
  CHECK(!span.member({{0, BigRat(1)}}));
  // normal form lands on the free coordinate: 2e1 + 3e2 = 2r1 + 3r2 - e3
  auto nf = span.normal_form({{0, BigRat(2)}, {1, BigRat(3)}});
  REQUIRE(nf.size() == 1);
  CHECK(nf[0].first == 2);
  CHECK(nf[0].second == BigRat(-1));
}

TEST_CASE("insert order does not change rank or pivots") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    std::uint32_t m = 6 + trial % 8;
    std::vector<std::vector<long long>> rows;
    for (int i = 0; i < 10; ++i) {
      std::vector<long long> v(m);
      for (auto& x : v) x = coef(rng);
      rows.push_back(v);
    }
    EchelonSpan a(m), b(m);
    for (const auto& v : rows) a.insert_ints(to_sparse(v));
    std::shuffle(rows.begin(), rows.end(), rng);
    for (const auto& v : rows) b.insert_ints(to_sparse(v));
    CHECK(a.rank() == b.rank());
    CHECK(a.pivot_ids() == b.pivot_ids());
  }
}

TEST_CASE("64-bit overflow upgrades to exact big rationals") {
  EchelonSpan span(3);
  long long big = (1LL << 62);
  span.insert_ints({{0, 1}, {1, big}});
  span.insert_ints({{0, 1}, {1, -big}, {2, 1}});
  // reducing the second against the first needs 2*big, which overflows
  CHECK(span.rank() == 2);
  CHECK(span.upgraded());
  CHECK(span.member({{1, BigRat(1)}, {2, hp0::parse_bigrat("1/9223372036854775808")}}) == false);
  // exactness survives the upgrade: (0,2*big,-1) reduces to zero against rows
  SparseRats v;
  v.push_back({1, BigRat(2) * hp0::to_bigrat(hp0::Rat64(big))});
  v.push_back({2, BigRat(-1)});
  CHECK(span.member(v));
}

TEST_CASE("reduced mode keeps rows fully back-substituted") {
  EchelonSpan span(4, /*keep_reduced=*/true);
  span.insert_ints({{0, 1}, {1, 1}});           // e0 + e1
  span.insert_ints({{1, 2}, {3, 2}});           // e1 + e3 after scaling
  auto rows = span.rows();
  REQUIRE(rows.size() == 2);
  // first row must have been cleaned of the later pivot at id 1
  CHECK(rows[0].size() == 2);
  CHECK(rows[0][0].first == 0);
  CHECK(rows[0][1].first == 3);
  CHECK(rows[0][1].second == BigRat(-1));
}

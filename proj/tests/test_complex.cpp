#include "hp0/complex.hpp"

#include <random>

#include "doctest.h"

using hp0::GaleFrame;

namespace {

GaleFrame tri() { return GaleFrame(2, 3, {{1, 0, 1}, {0, 1, 1}}); }
GaleFrame u13() { return GaleFrame(1, 3, {{1, 1, 1}}); }
GaleFrame u12() { return GaleFrame(1, 2, {{1, 1}}); }

std::vector<std::vector<int>> perms(int n, int count, std::uint64_t seed) {
  std::vector<int> base(n);
  for (int i = 0; i < n; ++i) base[i] = i + 1;
  std::mt19937_64 rng(seed);
  std::vector<std::vector<int>> out;
  for (int i = 0; i < count; ++i) {
    std::shuffle(base.begin(), base.end(), rng);
    out.push_back(base);
  }
  return out;
}

}  // namespace

TEST_CASE("broken circuits") {
  CHECK(hp0::broken_circuits(u13()) ==
        std::vector<std::vector<int>>{{0}, {1}});
  CHECK(hp0::broken_circuits(tri()) == std::vector<std::vector<int>>{{0, 1}});
  // a loop contributes the empty broken circuit
  auto loops = hp0::broken_circuits(GaleFrame(1, 2, {{1, 0}}));
  REQUIRE(!loops.empty());
  CHECK(loops[0].empty());
}

TEST_CASE("broken circuit complex faces") {
  auto cx = hp0::bc_faces(u13());
  CHECK(cx.faces().size() == 2);  // {} and {3}
  CHECK(cx.is_face(0));
  CHECK(cx.is_face(1u << 2));
  CHECK(!cx.is_face(1u << 0));

  auto cx2 = hp0::bc_faces(tri());
  CHECK(cx2.faces().size() == 6);
  CHECK(!cx2.is_face((1u << 0) | (1u << 1)));

  // identity: full simplex
  auto cx3 = hp0::bc_faces(GaleFrame(2, 2, {{1, 0}, {0, 1}}));
  CHECK(cx3.faces().size() == 4);

  // loop: void complex
  auto cx4 = hp0::bc_faces(GaleFrame(1, 2, {{1, 0}}));
  CHECK(cx4.is_void());
  CHECK(cx4.face_counts().empty());
}

TEST_CASE("f and h vectors of worked frames") {
  auto fh = hp0::fh_vectors(hp0::bc_faces(tri()), 2);
  CHECK(fh.f == std::vector<long long>{1, 3, 2});
  CHECK(fh.h == std::vector<long long>{1, 1, 0});

  auto fh2 = hp0::fh_vectors(hp0::bc_faces(u12()), 1);
  CHECK(fh2.f == std::vector<long long>{1, 1});
  CHECK(fh2.h == std::vector<long long>{1, 0});

  // full simplex on 2 vertices with d = 2
  auto fh3 = hp0::fh_vectors(hp0::bc_faces(GaleFrame(2, 2, {{1, 0}, {0, 1}})), 2);
  CHECK(fh3.h == std::vector<long long>{1, 0, 0});

  CHECK_THROWS_AS(hp0::fh_vectors(hp0::bc_faces(tri()), 1), std::invalid_argument);
}

TEST_CASE("h sums to the top face count") {
  for (const GaleFrame& f : {tri(), u13(), GaleFrame(2, 4, {{1, 0, 1, 1}, {0, 1, 1, 0}})}) {
    auto cx = hp0::bc_faces(f);
    auto fh = hp0::fh_vectors(cx, f.k());
    long long sum = 0;
    for (long long h : fh.h) sum += h;
    CHECK(sum == fh.f.back());
  }
}

TEST_CASE("face-ring graded dimensions") {
  CHECK(hp0::sr_quotient_dims(tri(), 5) == std::vector<long long>{1, 3, 5, 7, 9, 11});
  CHECK(hp0::sr_quotient_dims(u12(), 4) == std::vector<long long>{1, 1, 1, 1, 1});
  CHECK(hp0::sr_quotient_dims(GaleFrame(1, 2, {{1, 0}}), 3) ==
        std::vector<long long>{0, 0, 0, 0});
}

TEST_CASE("broken circuit complex is inside the independence complex") {
  for (const GaleFrame& f : {tri(), u13(), GaleFrame(2, 4, {{1, 1, 0, 1}, {0, 1, 1, 1}})}) {
    auto cx = hp0::bc_faces(f);
    auto circuits = hp0::signed_circuits(f);
    for (std::uint32_t face : cx.faces())
      for (const auto& c : circuits) CHECK((c.mask & face) != c.mask);
  }
}

TEST_CASE("intersection cohomology table") {
  auto rep = hp0::ih_betti_report(tri(), 4);
  CHECK(rep.ih_betti == std::vector<long long>{1, 1, 0});
  CHECK(rep.equivariant == std::vector<long long>{1, 3, 5, 7, 9});

  auto rep2 = hp0::ih_betti_report(u12(), 3);
  CHECK(rep2.ih_betti == std::vector<long long>{1, 0});
  CHECK(rep2.equivariant == std::vector<long long>{1, 1, 1, 1});
}

TEST_CASE("dual top h identity on worked frames") {
  auto r1 = hp0::dual_top_h_check(u12());
  CHECK(r1.sum_h == 1);
  CHECK(r1.dual_top_h == 1);
  CHECK(r1.ok);
  auto r2 = hp0::dual_top_h_check(u13());
  CHECK(r2.sum_h == 1);
  CHECK(r2.dual_top_h == 1);
  CHECK(r2.ok);
  auto r3 = hp0::dual_top_h_check(tri());
  CHECK(r3.sum_h == 2);
  CHECK(r3.dual_top_h == 2);
  CHECK(r3.ok);
  // identity frames: both sides are 1
  auto r4 = hp0::dual_top_h_check(GaleFrame(2, 2, {{1, 0}, {0, 1}}));
  CHECK(r4.sum_h == 1);
  CHECK(r4.dual_top_h == 1);
  CHECK(r4.ok);
}

TEST_CASE("h-vector is invariant under ground set relabeling") {
  for (const GaleFrame& f : {tri(), u13(), GaleFrame(2, 4, {{1, 0, 1, 1}, {0, 1, 1, 0}})}) {
    auto base = hp0::fh_vectors(hp0::bc_faces(f), f.k()).h;
    for (const auto& p : perms(f.n(), 6, 99)) {
      auto permuted = f.permuted(p);
      CHECK(hp0::fh_vectors(hp0::bc_faces(permuted), f.k()).h == base);
    }
  }
  // face sets themselves may move: relabeling shifts which column is broken
  GaleFrame pair(2, 3, {{1, 1, 0}, {0, 0, 1}});
  auto moved = pair.permuted({3, 2, 1});
  CHECK(hp0::bc_faces(moved).faces() != hp0::bc_faces(pair).faces());
  CHECK(hp0::fh_vectors(hp0::bc_faces(moved), 2).h ==
        hp0::fh_vectors(hp0::bc_faces(pair), 2).h);
}

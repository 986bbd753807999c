#include "alcove/weyl.hpp"

#include <random>

#include "alcove/errors.hpp"
#include "doctest.h"

using namespace alcove;

namespace {

RootDatum datum(Family f, int rank) {
  return build_root_datum(f, rank, CacheConfig::disabled());
}

Weight random_weight(std::mt19937& rng, int rank, i64 lo, i64 hi) {
  std::uniform_int_distribution<i64> coord(lo, hi);
  std::vector<i64> c(rank);
  for (auto& x : c) x = coord(rng);
  return Weight(std::move(c));
}

}  // namespace

TEST_CASE("simple reflections") {
  RootDatum a1 = datum(Family::A, 1);
  CHECK(apply_simple(a1, 1, Weight{3}) == Weight{-3});

  RootDatum a2 = datum(Family::A, 2);
  CHECK(apply_simple(a2, 1, Weight{1, 0}) == Weight{-1, 1});
  CHECK(apply_simple(a2, 2, Weight{0, 1}) == Weight{1, -1});
  CHECK_THROWS_AS(apply_simple(a2, 0, Weight{1, 0}), Error);
  CHECK_THROWS_AS(apply_simple(a2, 3, Weight{1, 0}), Error);

  std::mt19937 rng(11);
  for (int t = 0; t < 30; ++t) {
    Weight w = random_weight(rng, 2, -6, 6);
    for (int i = 1; i <= 2; ++i) CHECK(apply_simple(a2, i, apply_simple(a2, i, w)) == w);
  }
}

TEST_CASE("root reflections agree with simple ones on simple roots") {
  RootDatum a2 = datum(Family::A, 2);
  std::mt19937 rng(12);
  for (int t = 0; t < 20; ++t) {
    Weight w = random_weight(rng, 2, -6, 6);
    CHECK(apply_root_reflection(a2, RootVec{1, 0}, w) == apply_simple(a2, 1, w));
    CHECK(apply_root_reflection(a2, RootVec{0, 1}, w) == apply_simple(a2, 2, w));
    // Reflection in the highest root is an involution too.
    CHECK(apply_root_reflection(a2, a2.highest_root(),
                                apply_root_reflection(a2, a2.highest_root(), w)) == w);
  }
}

TEST_CASE("orbits") {
  RootDatum a1 = datum(Family::A, 1);
  CHECK(weyl_orbit(a1, Weight{2}) == std::vector<Weight>{Weight{-2}, Weight{2}});
  CHECK(weyl_orbit(a1, Weight{0}) == std::vector<Weight>{Weight{0}});

  RootDatum a2 = datum(Family::A, 2);
  CHECK(weyl_orbit(a2, Weight{1, 0}).size() == 3);
  CHECK(weyl_orbit(a2, Weight{1, 1}).size() == 6);

  // Exactly one dominant element per orbit, and the orbit of rho has |W|
  // elements.
  for (const Weight& seed : {Weight{2, 1}, Weight{0, 3}, Weight{-1, -1}}) {
    int dominant = 0;
    for (const Weight& w : weyl_orbit(a2, seed)) dominant += w.dominant() ? 1 : 0;
    CHECK(dominant == 1);
  }
  RootDatum d4 = datum(Family::D, 4);
  CHECK(Int(weyl_orbit(d4, d4.rho()).size()) == d4.weyl_order());
}

TEST_CASE("dominant representatives") {
  RootDatum a1 = datum(Family::A, 1);
  CHECK(dominant_rep(a1, Weight{-3}) == Weight{3});
  RootDatum a2 = datum(Family::A, 2);
  CHECK(dominant_rep(a2, Weight{-1, 1}) == Weight{1, 0});
  CHECK(dominant_rep(a2, Weight{2, 2}) == Weight{2, 2});
}

TEST_CASE("dominant representatives under the dot action") {
  RootDatum a1 = datum(Family::A, 1);
  auto r = dominant_shifted(a1, Weight{-3});
  REQUIRE(r.has_value());
  CHECK(r->rep == Weight{1});
  CHECK(r->sign == -1);
  CHECK(!dominant_shifted(a1, Weight{-1}).has_value());

  RootDatum a2 = datum(Family::A, 2);
  auto r2 = dominant_shifted(a2, Weight{-2, 1});
  REQUIRE(r2.has_value());
  CHECK(r2->rep == Weight{0, 0});
  CHECK(r2->sign == -1);

  // Dominant arguments are fixed with positive sign.
  auto r3 = dominant_shifted(a2, Weight{2, 0});
  REQUIRE(r3.has_value());
  CHECK(r3->rep == Weight{2, 0});
  CHECK(r3->sign == 1);

  // Empty exactly when lambda + rho meets a reflection wall.
  std::mt19937 rng(13);
  for (int t = 0; t < 50; ++t) {
    Weight w = random_weight(rng, 2, -7, 7);
    Weight shifted = w + a2.rho();
    bool singular = false;
    for (const RootVec& beta : a2.positive_roots())
      singular = singular || a2.pair(shifted, beta) == 0;
    CHECK(dominant_shifted(a2, w).has_value() == !singular);
  }
}

TEST_CASE("dot-action signs multiply like determinants") {
  std::mt19937 rng(14);
  for (auto [f, r] : {std::pair{Family::A, 2}, std::pair{Family::A, 3}}) {
    RootDatum d = datum(f, r);
    std::uniform_int_distribution<int> node(1, r), len(0, 7);
    std::uniform_int_distribution<i64> coord(0, 4);
    for (int t = 0; t < 40; ++t) {
      std::vector<i64> c(r);
      for (auto& x : c) x = coord(rng);
      Weight start(std::move(c));
      Weight moved = start;
      int steps = len(rng);
      for (int k = 0; k < steps; ++k) {
        int i = node(rng);
        moved = apply_simple(d, i, moved + d.rho()) - d.rho();
      }
      auto folded = dominant_shifted(d, moved);
      REQUIRE(folded.has_value());
      CHECK(folded->rep == start);
      CHECK(folded->sign == (steps % 2 == 0 ? 1 : -1));
    }
  }
}

TEST_CASE("stabilizer orders") {
  RootDatum a1 = datum(Family::A, 1);
  RootDatum a2 = datum(Family::A, 2);
  CHECK(stabilizer_order(a1, Weight{0}) == 2);
  CHECK(stabilizer_order(a1, Weight{1}) == 1);
  CHECK(stabilizer_order(a2, Weight{1, 0}) == 2);
  CHECK(stabilizer_order(a2, Weight{0, 0}) == 6);

  std::mt19937 rng(15);
  for (int t = 0; t < 30; ++t) {
    Weight w = random_weight(rng, 2, -5, 5);
    CHECK(Int(weyl_orbit(a2, w).size()) * stabilizer_order(a2, w) == a2.weyl_order());
  }
}

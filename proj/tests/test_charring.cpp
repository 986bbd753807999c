#include "alcove/char_ring.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "alcove/affine.hpp"
#include "alcove/errors.hpp"
#include "alcove/weyl.hpp"
#include "doctest.h"

using namespace alcove;

namespace {

RootDatum datum(Family f, int rank) {
  return build_root_datum(f, rank, CacheConfig::disabled());
}

SymElem from_terms(const std::vector<std::pair<Weight, Rat>>& terms) {
  SymElem a;
  for (const auto& [w, c] : terms) a.add_term(w, c);
  return a;
}

SymElem random_elem(std::mt19937& rng, int rank, i64 coord_max, int nterms) {
  std::uniform_int_distribution<i64> coord(0, coord_max);
  std::uniform_int_distribution<int> coef(-3, 3);
  SymElem a;
  for (int t = 0; t < nterms; ++t) {
    std::vector<i64> c(rank);
    for (auto& x : c) x = coord(rng);
    a.add_term(Weight(std::move(c)), coef(rng));
  }
  return a;
}

}  // namespace

TEST_CASE("orbit-sum constructors and evaluation at 1") {
  RootDatum a1 = datum(Family::A, 1);
  RootDatum a2 = datum(Family::A, 2);
  CHECK(value_at_one(a1, f_elem(Weight{0})) == 1);
  CHECK(value_at_one(a1, f_elem(Weight{1})) == 2);
  CHECK(value_at_one(a1, f_elem(Weight{5})) == 2);
  CHECK(value_at_one(a2, f_elem(Weight{1, 0})) == 3);
  CHECK_THROWS_AS(f_elem(Weight{-1}), Error);

  // add_term prunes exact cancellations.
  SymElem cancel = from_terms({{Weight{2}, 1}, {Weight{2}, -1}});
  CHECK(cancel.zero());
}

TEST_CASE("Weyl characters on the orbit basis") {
  RootDatum a1 = datum(Family::A, 1);
  CHECK(chi_elem(a1, Weight{2}) == from_terms({{Weight{2}, 1}, {Weight{0}, 1}}));
  CHECK(chi_elem(a1, Weight{4}) ==
        from_terms({{Weight{4}, 1}, {Weight{2}, 1}, {Weight{0}, 1}}));

  RootDatum a2 = datum(Family::A, 2);
  CHECK(chi_elem(a2, Weight{1, 1}) ==
        from_terms({{Weight{1, 1}, 1}, {Weight{0, 0}, 2}}));
  CHECK(value_at_one(a2, chi_elem(a2, Weight{1, 1})) == 8);
}

TEST_CASE("signed characters resolve non-dominant arguments") {
  RootDatum a1 = datum(Family::A, 1);
  CHECK(chi_signed(a1, Weight{-1}).zero());
  CHECK(chi_signed(a1, Weight{-3}) == sym_scale(-1, chi_elem(a1, Weight{1})));
  CHECK(chi_signed(a1, Weight{3}) == chi_elem(a1, Weight{3}));
}

TEST_CASE("products in the character ring") {
  RootDatum a1 = datum(Family::A, 1);
  CHECK(mul(a1, f_elem(Weight{1}), f_elem(Weight{1})) ==
        from_terms({{Weight{2}, 1}, {Weight{0}, 2}}));
  CHECK(mul(a1, chi_elem(a1, Weight{4}), f_elem(Weight{4})) ==
        from_terms({{Weight{8}, 1},
                    {Weight{6}, 1},
                    {Weight{4}, 1},
                    {Weight{2}, 1},
                    {Weight{0}, 2}}));

  std::mt19937 rng(31);
  RootDatum a2 = datum(Family::A, 2);
  for (int t = 0; t < 10; ++t) {
    SymElem a = random_elem(rng, 2, 4, 3), b = random_elem(rng, 2, 4, 3);
    CHECK(mul(a2, a, f_elem(Weight{0, 0})) == a);
    CHECK(mul(a2, a, b) == mul(a2, b, a));
  }
  SymElem x = random_elem(rng, 2, 3, 2), y = random_elem(rng, 2, 3, 2),
          z = random_elem(rng, 2, 3, 2);
  CHECK(mul(a2, mul(a2, x, y), z) == mul(a2, x, mul(a2, y, z)));

  // Coefficients large enough to overflow the machine-word fast path fall
  // back to exact arithmetic; linearity ties the two paths together.
  Rat big(Int(1) << 62);
  CHECK(mul(a1, sym_scale(big, f_elem(Weight{1})), f_elem(Weight{1})) ==
        sym_scale(big, mul(a1, f_elem(Weight{1}), f_elem(Weight{1}))));
}

TEST_CASE("tensor decompositions match ring products") {
  RootDatum a1 = datum(Family::A, 1);
  auto cg = klimyk_product(a1, Weight{1}, Weight{1});
  CHECK(cg.size() == 2);
  CHECK(cg.at(Weight{2}) == 1);
  CHECK(cg.at(Weight{0}) == 1);

  RootDatum a2 = datum(Family::A, 2);
  auto adj = klimyk_product(a2, Weight{1, 0}, Weight{0, 1});
  CHECK(adj.size() == 2);
  CHECK(adj.at(Weight{1, 1}) == 1);
  CHECK(adj.at(Weight{0, 0}) == 1);
  auto unit = klimyk_product(a2, Weight{2, 1}, Weight{0, 0});
  CHECK(unit.size() == 1);
  CHECK(unit.at(Weight{2, 1}) == 1);

  // chi(lambda) chi(mu) expanded two independent ways, small boxes in A1 and
  // A2.
  for (const RootDatum* d : {&a1, &a2}) {
    std::vector<Weight> box;
    for_each_dominant_weight(d->rank(), 4, [&](const Weight& w) { box.push_back(w); });
    for (const Weight& la : box)
      for (const Weight& mu : box) {
        SymElem via_chi;
        for (const auto& [nu, c] : klimyk_product(*d, la, mu))
          via_chi = sym_add(via_chi, sym_scale(Rat(c), chi_elem(*d, nu)));
        CHECK(via_chi == mul(*d, chi_elem(*d, la), chi_elem(*d, mu)));
      }
  }
}

TEST_CASE("Steinberg characters") {
  RootDatum a1 = datum(Family::A, 1);
  RootDatum a2 = datum(Family::A, 2);
  CHECK(value_at_one(a1, steinberg(a1, 5)) == 5);
  CHECK(value_at_one(a2, steinberg(a2, 5)) == 125);
  CHECK(steinberg(a1, 7) == from_terms({{Weight{6}, 1},
                                        {Weight{4}, 1},
                                        {Weight{2}, 1},
                                        {Weight{0}, 1}}));
}

TEST_CASE("evaluation at root-of-unity points") {
  RootDatum a1 = datum(Family::A, 1);
  const double pi = std::acos(-1.0);

  SymElem f1 = f_elem(Weight{1});
  CHECK(std::abs(eval_at(a1, f1, RootVec{0}, 5) -
                 std::complex<double>(2, 0)) < 1e-12);
  CHECK(std::abs(eval_at(a1, f1, RootVec{1}, 5) -
                 std::complex<double>(2 * std::cos(2 * pi / 5), 0)) < 1e-12);
  CHECK(std::abs(eval_at(a1, f_elem(Weight{5}), RootVec{1}, 5) -
                 std::complex<double>(2, 0)) < 1e-12);

  // Ring homomorphism on random samples.
  std::mt19937 rng(32);
  RootDatum a2 = datum(Family::A, 2);
  std::uniform_int_distribution<i64> bc(0, 4);
  for (int t = 0; t < 20; ++t) {
    SymElem a = random_elem(rng, 2, 4, 2), b = random_elem(rng, 2, 4, 2);
    RootVec beta{bc(rng), bc(rng)};
    std::complex<double> lhs = eval_at(a2, mul(a2, a, b), beta, 5);
    std::complex<double> rhs = eval_at(a2, a, beta, 5) * eval_at(a2, b, beta, 5);
    CHECK(std::abs(lhs - rhs) <= 1e-9 * (1 + std::abs(rhs)));
  }

  // Weight-valued evaluation points agree with the root-valued form on Q.
  SymElem sample = random_elem(rng, 2, 4, 3);
  RootVec beta{1, 2};
  Weight as_weight = a2.root_as_weight(beta);
  CHECK(std::abs(eval_at(a2, sample, beta, 5) -
                 eval_at_weight_point(a2, sample, as_weight, 5)) < 1e-12);
}

TEST_CASE("conversion to the character basis round-trips") {
  RootDatum a2 = datum(Family::A, 2);
  std::mt19937 rng(33);
  for (int t = 0; t < 10; ++t) {
    SymElem a = random_elem(rng, 2, 4, 4);
    auto coeffs = to_chi_basis(a2, a);
    SymElem back;
    for (const auto& [nu, c] : coeffs)
      back = sym_add(back, sym_scale(c, chi_elem(a2, nu)));
    CHECK(back == a);
  }
  // chi is unitriangular: converting chi(lambda) yields the single
  // coefficient 1.
  auto c = to_chi_basis(a2, chi_elem(a2, Weight{2, 1}));
  CHECK(c.size() == 1);
  CHECK(c.at(Weight{2, 1}) == 1);
}

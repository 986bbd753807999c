#include "alcove/eval_oracle.hpp"

#include <cmath>
#include <complex>

#include "alcove/errors.hpp"
#include "alcove/restricted_ring.hpp"
#include "doctest.h"

using namespace alcove;

namespace {

RootDatum datum(Family f, int rank) {
  return build_root_datum(f, rank, CacheConfig::disabled());
}

}  // namespace

TEST_CASE("alcove character table") {
  RootDatum a1 = datum(Family::A, 1);
  EvalTable t = vr_eval_table(a1, 5);
  CHECK(t.kind == TableKind::VR_MINUS);
  REQUIRE(t.basis.size() == 4);
  REQUIRE(t.point_weights.size() == 4);
  CHECK(t.min_singular > 1e-6);

  // Column of the unit basis element is identically 1; the first row is the
  // quantum-dimension character.
  for (int p = 0; p < 4; ++p)
    CHECK(std::abs(t.values(p, 0) - std::complex<double>(1, 0)) < 1e-9);
  const double pi = std::acos(-1.0);
  CHECK(t.point_weights[0] == Weight{0});
  CHECK(std::abs(t.values(0, 1) -
                 std::complex<double>(2 * std::cos(pi / 5), 0)) < 1e-9);
}

TEST_CASE("orbit-sum character table") {
  RootDatum a1 = datum(Family::A, 1);
  EvalTable t = vrplus_eval_table(a1, 5);
  CHECK(t.kind == TableKind::VR_PLUS);
  REQUIRE(t.basis.size() == 3);
  REQUIRE(t.point_roots.size() == 3);
  CHECK(t.min_singular > 1e-6);

  // The zero point evaluates f(lambda) to its orbit size.
  CHECK(t.point_roots[0] == RootVec{0});
  CHECK(std::abs(t.values(0, 0) - std::complex<double>(1, 0)) < 1e-9);
  CHECK(std::abs(t.values(0, 1) - std::complex<double>(2, 0)) < 1e-9);
  const double pi = std::acos(-1.0);
  int alpha_row = t.point_roots[1] == RootVec{1} ? 1 : 2;
  CHECK(std::abs(t.values(alpha_row, 1) -
                 std::complex<double>(2 * std::cos(2 * pi / 5), 0)) < 1e-9);

  // Point count tracks the orbit-representative count in higher rank too.
  RootDatum a2 = datum(Family::A, 2);
  CHECK(vrplus_eval_table(a2, 5).point_roots.size() == 7);
}

TEST_CASE("numerically recovered constants") {
  RootDatum a1 = datum(Family::A, 1);
  EvalTable plus = vrplus_eval_table(a1, 5);
  OracleConstants c11 = constants_from_eval(plus, 1, 1);
  CHECK(c11.ok);
  CHECK(c11.residual < 1e-6);
  CHECK(c11.n == std::map<int, i64>{{0, 2}, {2, 1}});

  EvalTable minus = vr_eval_table(a1, 5);
  OracleConstants c33 = constants_from_eval(minus, 3, 3);
  CHECK(c33.ok);
  CHECK(c33.n == std::map<int, i64>{{0, 1}});
  for (int j = 0; j < 4; ++j) {
    OracleConstants idrow = constants_from_eval(minus, 0, j);
    CHECK(idrow.ok);
    CHECK(idrow.residual < 1e-10);
    CHECK(idrow.n == std::map<int, i64>{{j, 1}});
  }
}

TEST_CASE("oracle tables equal the exact ones") {
  for (auto [f, r, l] : {std::tuple{Family::A, 1, i64{5}}, std::tuple{Family::A, 1, i64{7}},
                         std::tuple{Family::A, 2, i64{5}}}) {
    RootDatum d = build_root_datum(f, r, CacheConfig::disabled());
    CHECK(table_from_eval(d, vr_eval_table(d, l)) ==
          build_table(d, l, TableKind::VR_MINUS));
    CHECK(table_from_eval(d, vrplus_eval_table(d, l)) ==
          build_table(d, l, TableKind::VR_PLUS));
  }
}

TEST_CASE("evaluation rows are ring homomorphisms") {
  RootDatum a2 = datum(Family::A, 2);
  CHECK(oracle_hom_max_error(a2, vr_eval_table(a2, 5), 20, 1) < 1e-9);
  CHECK(oracle_hom_max_error(a2, vrplus_eval_table(a2, 5), 20, 1) < 1e-9);
}

TEST_CASE("orbit-sum characters kill the radical") {
  // Independent numeric confirmation that the stabilizer-weighted
  // differences really are nilpotent: every evaluation character sends every
  // radical basis element to zero.
  RootDatum a2 = datum(Family::A, 2);
  EvalTable t = vrplus_eval_table(a2, 5);
  for (const RestrictedElem& x : radical_basis(a2, 5)) {
    SymElem lifted = lift(x);
    for (const RootVec& beta : t.point_roots)
      CHECK(std::abs(eval_at(a2, lifted, beta, 5)) < 1e-9);
  }
}

TEST_CASE("recovered constants are stable under basis relabeling") {
  RootDatum a1 = datum(Family::A, 1);
  EvalTable t = vrplus_eval_table(a1, 5);
  EvalTable permuted = t;
  std::swap(permuted.basis[1], permuted.basis[2]);
  permuted.values.col(1).swap(permuted.values.col(2));

  OracleConstants orig = constants_from_eval(t, 1, 1);
  OracleConstants perm = constants_from_eval(permuted, 2, 2);
  REQUIRE(orig.ok);
  REQUIRE(perm.ok);
  // n_{11} = {0:2, 2:1} becomes {0:2, 1:1} after swapping labels 1 and 2.
  CHECK(perm.n == std::map<int, i64>{{0, 2}, {1, 1}});
  CHECK(perm.n.at(0) == orig.n.at(0));
}

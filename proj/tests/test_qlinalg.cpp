#include "alcove/qlinalg.hpp"

#include <random>

#include "alcove/errors.hpp"
#include "doctest.h"

using namespace alcove;

namespace {

QMatrix from_ints(const std::vector<std::vector<int>>& rows) {
  int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  QMatrix m(static_cast<int>(rows.size()), cols);
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < cols; ++j) m.at(static_cast<int>(i), j) = rows[i][j];
  return m;
}

}  // namespace

TEST_CASE("integer determinants") {
  CHECK(det_int({{2}}) == 2);
  CHECK(det_int({{2, -1}, {-1, 2}}) == 3);
  CHECK(det_int({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}) == 4);
  CHECK(det_int({{1, 2}, {2, 4}}) == 0);
  // Row swaps flip the sign.
  CHECK(det_int({{0, 1}, {1, 0}}) == -1);
}

TEST_CASE("rank and rref") {
  QMatrix m = from_ints({{1, 2, 3}, {2, 4, 6}, {1, 1, 1}});
  CHECK(rank(m) == 2);
  std::vector<int> pivots;
  QMatrix r = rref(m, &pivots);
  CHECK(pivots == std::vector<int>{0, 1});
  CHECK(r.at(0, 0) == 1);
  CHECK(r.at(0, 1) == 0);
  CHECK(r.at(1, 1) == 1);
  CHECK(r.at(2, 0) == 0);
  CHECK(r.at(2, 2) == 0);
}

TEST_CASE("nullspace vectors satisfy m x = 0 and count matches rank") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (int trial = 0; trial < 20; ++trial) {
    int rows = 3 + trial % 3, cols = 4 + trial % 4;
    QMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      // Divide rather than use the two-argument constructor: mpq_class
      // requires canonical form, and Rat(0, 2) is not canonical.
      for (int j = 0; j < cols; ++j) m.at(i, j) = Rat(coef(rng)) / (1 + trial % 2);
    auto ns = nullspace_basis(m);
    CHECK(static_cast<int>(ns.size()) == cols - rank(m));
    for (const auto& v : ns) {
      for (int i = 0; i < rows; ++i) {
        Rat dot = 0;
        for (int j = 0; j < cols; ++j) dot += m.at(i, j) * v[j];
        CHECK(dot == 0);
      }
    }
  }
}

TEST_CASE("exact inverse") {
  QMatrix c = from_ints({{2, -1}, {-1, 2}});
  QMatrix inv = inverse(c);
  CHECK(inv.at(0, 0) == Rat(2, 3));
  CHECK(inv.at(0, 1) == Rat(1, 3));
  QMatrix prod(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) prod.at(i, j) += c.at(i, k) * inv.at(k, j);
  CHECK(prod == QMatrix::identity(2));
  CHECK_THROWS_AS(inverse(from_ints({{1, 2}, {2, 4}})), Error);
}

TEST_CASE("span comparisons") {
  std::vector<std::vector<Rat>> a = {{1, 0, 1}, {0, 1, 1}};
  std::vector<std::vector<Rat>> b = {{1, 1, 2}, {1, -1, 0}};
  std::vector<std::vector<Rat>> c = {{1, 0, 0}, {0, 1, 1}};
  CHECK(same_span(a, b, 3));
  CHECK(!same_span(a, c, 3));
  CHECK(rank_of_rows(a, 3) == 2);
}

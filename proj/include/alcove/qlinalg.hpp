#pragma once

#include <vector>

#include "alcove/numeric.hpp"

namespace alcove {

// Dense matrix over the rationals.  Sizes stay small (a few hundred rows),
// so the representation is a flat vector of exact rationals.
class QMatrix {
public:
  QMatrix() = default;
  QMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static QMatrix identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Rat& at(int i, int j) const {
    return a_[static_cast<size_t>(i) * cols_ + j];
  }

  bool operator==(const QMatrix&) const = default;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rat> a_;
};

// Determinant of an integer matrix by fraction-free (Bareiss) elimination.
Int det_int(const std::vector<std::vector<i64>>& m);

// Reduced row echelon form.  The forward pass is fraction-free on an
// integer-scaled copy; only the final normalization divides.  Pivot column
// indices are appended to *pivots when given.
QMatrix rref(const QMatrix& m, std::vector<int>* pivots = nullptr);

int rank(const QMatrix& m);

// Basis of {x : m x = 0}, one vector per free column, in ascending free
// column order.  Deterministic.
std::vector<std::vector<Rat>> nullspace_basis(const QMatrix& m);

// Exact inverse; throws on singular input.
QMatrix inverse(const QMatrix& m);

// Helpers for treating vectors as matrix rows.
QMatrix from_rows(const std::vector<std::vector<Rat>>& rows, int cols);
int rank_of_rows(const std::vector<std::vector<Rat>>& rows, int cols);
bool same_span(const std::vector<std::vector<Rat>>& a,
               const std::vector<std::vector<Rat>>& b, int cols);

}  // namespace alcove

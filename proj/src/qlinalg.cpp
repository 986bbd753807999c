#include "alcove/qlinalg.hpp"

#include <utility>

#include "alcove/errors.hpp"

namespace alcove {

namespace {

// One-step fraction-free elimination (Bareiss).  Entries stay integral:
// every intermediate value is a minor of the input, and the division by the
// previous pivot is exact.  Returns the pivot columns; rows end up in
// echelon order.
std::vector<int> bareiss(std::vector<std::vector<Int>>& m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  std::vector<int> pivots;
  Int prev = 1;
  int r = 0;
  for (int col = 0; col < cols && r < rows; ++col) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][col] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[p], m[r]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = col + 1; j < cols; ++j) {
        Int t = m[r][col] * m[i][j] - m[i][col] * m[r][j];
        if (t % prev != 0)
          fail(ErrorKind::Internal, "fraction-free elimination lost exactness");
        m[i][j] = t / prev;
      }
      m[i][col] = 0;
    }
    prev = m[r][col];
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

std::vector<std::vector<Int>> to_integer_rows(const QMatrix& m) {
  std::vector<std::vector<Int>> out(m.rows(), std::vector<Int>(m.cols()));
  for (int i = 0; i < m.rows(); ++i) {
    Int scale = 1;
    for (int j = 0; j < m.cols(); ++j) {
      Int den = m.at(i, j).get_den();
      scale = scale / gcd(scale, den) * den;  // lcm
    }
    for (int j = 0; j < m.cols(); ++j) {
      Rat v = m.at(i, j) * Rat(scale);
      v.canonicalize();
      if (v.get_den() != 1)
        fail(ErrorKind::Internal, "row scaling failed to clear denominators");
      out[i][j] = v.get_num();
    }
  }
  return out;
}

}  // namespace

Int det_int(const std::vector<std::vector<i64>>& m) {
  const int n = static_cast<int>(m.size());
  std::vector<std::vector<Int>> w(n, std::vector<Int>(n));
  for (int i = 0; i < n; ++i) {
    require(static_cast<int>(m[i].size()) == n, ErrorKind::InvalidArgument,
            "determinant requires a square matrix");
    for (int j = 0; j < n; ++j) w[i][j] = m[i][j];
  }
  int sign = 1;
  Int prev = 1;
  for (int col = 0; col < n; ++col) {
    int p = -1;
    for (int i = col; i < n; ++i)
      if (w[i][col] != 0) {
        p = i;
        break;
      }
    if (p < 0) return 0;
    if (p != col) {
      std::swap(w[p], w[col]);
      sign = -sign;
    }
    for (int i = col + 1; i < n; ++i) {
      for (int j = col + 1; j < n; ++j) {
        Int t = w[col][col] * w[i][j] - w[i][col] * w[col][j];
        if (t % prev != 0)
          fail(ErrorKind::Internal, "fraction-free elimination lost exactness");
        w[i][j] = t / prev;
      }
      w[i][col] = 0;
    }
    prev = w[col][col];
  }
  return sign * w[n - 1][n - 1];
}

QMatrix rref(const QMatrix& m, std::vector<int>* pivots_out) {
  auto w = to_integer_rows(m);
  std::vector<int> pivots = bareiss(w);
  const int r = static_cast<int>(pivots.size());
  const int cols = m.cols();

  // Normalize pivot rows and eliminate upward with exact rationals.
  QMatrix out(m.rows(), cols);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < cols; ++j) out.at(i, j) = Rat(w[i][j]) / Rat(w[i][pivots[i]]);
  for (int i = r - 1; i >= 0; --i)
    for (int k = 0; k < i; ++k) {
      Rat f = out.at(k, pivots[i]);
      if (f == 0) continue;
      for (int j = pivots[i]; j < cols; ++j)
        out.at(k, j) -= f * out.at(i, j);
    }
  if (pivots_out) *pivots_out = pivots;
  return out;
}

int rank(const QMatrix& m) {
  auto w = to_integer_rows(m);
  return static_cast<int>(bareiss(w).size());
}

std::vector<std::vector<Rat>> nullspace_basis(const QMatrix& m) {
  std::vector<int> pivots;
  QMatrix r = rref(m, &pivots);
  const int cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;

  std::vector<std::vector<Rat>> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(cols);
    v[f] = 1;
    for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r.at(static_cast<int>(k), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

QMatrix inverse(const QMatrix& m) {
  require(m.rows() == m.cols(), ErrorKind::InvalidArgument,
          "inverse requires a square matrix");
  const int n = m.rows();
  QMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  std::vector<int> pivots;
  QMatrix r = rref(aug, &pivots);
  require(static_cast<int>(pivots.size()) == n && pivots[n - 1] == n - 1,
          ErrorKind::InvalidArgument, "matrix is singular");
  QMatrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = r.at(i, n + j);
  return out;
}

QMatrix from_rows(const std::vector<std::vector<Rat>>& rows, int cols) {
  QMatrix m(static_cast<int>(rows.size()), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    require(static_cast<int>(rows[i].size()) == cols, ErrorKind::InvalidArgument,
            "row length mismatch");
    for (int j = 0; j < cols; ++j) m.at(static_cast<int>(i), j) = rows[i][j];
  }
  return m;
}

int rank_of_rows(const std::vector<std::vector<Rat>>& rows, int cols) {
  return rank(from_rows(rows, cols));
}

bool same_span(const std::vector<std::vector<Rat>>& a,
               const std::vector<std::vector<Rat>>& b, int cols) {
  std::vector<std::vector<Rat>> all = a;
  all.insert(all.end(), b.begin(), b.end());
  int ra = rank_of_rows(a, cols);
  int rb = rank_of_rows(b, cols);
  return ra == rb && rank_of_rows(all, cols) == ra;
}

}  // namespace alcove

#include "qcw/qmat.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcw {

QMat QMat::identity(int n) {
  QMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMat QMat::from_int(const IntMat& src) {
  QMat m(static_cast<int>(src.size()), src.empty() ? 0 : static_cast<int>(src[0].size()));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = Rat(static_cast<long>(src[i][j]));
  return m;
}

bool operator==(const QMat& x, const QMat& y) {
  return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
}

QMat operator*(const QMat& x, const QMat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("QMat mul: shape mismatch");
  QMat z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Rat& v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j) z.at(i, j) += v * y.at(k, j);
    }
  return z;
}

QMat operator+(const QMat& x, const QMat& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("QMat add: shape mismatch");
  QMat z(x);
  for (size_t i = 0; i < z.a.size(); ++i) z.a[i] += y.a[i];
  return z;
}

QMat operator-(const QMat& x, const QMat& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("QMat sub: shape mismatch");
  QMat z(x);
  for (size_t i = 0; i < z.a.size(); ++i) z.a[i] -= y.a[i];
  return z;
}

QMat operator*(const Rat& c, const QMat& x) {
  QMat z(x);
  for (auto& v : z.a) v *= c;
  return z;
}

QMat transpose(const QMat& m) {
  QMat t(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

QMat hstack(const QMat& x, const QMat& y) {
  if (x.rows != y.rows) throw std::invalid_argument("hstack: row mismatch");
  QMat z(x.rows, x.cols + y.cols);
  for (int i = 0; i < x.rows; ++i) {
    for (int j = 0; j < x.cols; ++j) z.at(i, j) = x.at(i, j);
    for (int j = 0; j < y.cols; ++j) z.at(i, x.cols + j) = y.at(i, j);
  }
  return z;
}

QMat vstack(const QMat& x, const QMat& y) {
  if (x.cols != y.cols) throw std::invalid_argument("vstack: col mismatch");
  QMat z(x.rows + y.rows, x.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) z.at(i, j) = x.at(i, j);
  for (int i = 0; i < y.rows; ++i)
    for (int j = 0; j < y.cols; ++j) z.at(x.rows + i, j) = y.at(i, j);
  return z;
}

QMat submatrix(const QMat& m, int r0, int c0, int nrows, int ncols) {
  QMat z(nrows, ncols);
  for (int i = 0; i < nrows; ++i)
    for (int j = 0; j < ncols; ++j) z.at(i, j) = m.at(r0 + i, c0 + j);
  return z;
}

bool is_zero(const QMat& m) {
  return std::all_of(m.a.begin(), m.a.end(), [](const Rat& v) { return v == 0; });
}

IntMat to_intmat(const QMat& m) {
  IntMat r(m.rows, IntVec(m.cols));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) r[i][j] = to_ll(m.at(i, j));
  return r;
}

Echelon row_reduce(QMat m) {
  Echelon e;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int piv = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    Rat inv = 1 / m.at(r, c);
    for (int j = c; j < m.cols; ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Rat f = m.at(i, c);
      for (int j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.rref = std::move(m);
  return e;
}

int rank(const QMat& m) { return static_cast<int>(row_reduce(m).pivots.size()); }

Rat determinant(QMat m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant: not square");
  Rat det = 1;
  for (int c = 0; c < m.cols; ++c) {
    int piv = -1;
    for (int i = c; i < m.rows; ++i)
      if (m.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return Rat(0);
    if (piv != c) {
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(c, j));
      det = -det;
    }
    det *= m.at(c, c);
    Rat inv = 1 / m.at(c, c);
    for (int i = c + 1; i < m.rows; ++i) {
      if (m.at(i, c) == 0) continue;
      Rat f = m.at(i, c) * inv;
      for (int j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(c, j);
    }
  }
  return det;
}

QMat inverse(const QMat& m) {
  if (m.rows != m.cols) throw std::invalid_argument("inverse: not square");
  Echelon e = row_reduce(hstack(m, QMat::identity(m.rows)));
  for (int i = 0; i < m.rows; ++i)
    if (i >= static_cast<int>(e.pivots.size()) || e.pivots[i] != i)
      throw std::domain_error("inverse: matrix is singular");
  return submatrix(e.rref, 0, m.cols, m.rows, m.cols);
}

QMat kernel_basis(const QMat& m) {
  Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : e.pivots) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < m.cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  QMat k(m.cols, static_cast<int>(free_cols.size()));
  for (size_t j = 0; j < free_cols.size(); ++j) {
    int fc = free_cols[j];
    k.at(fc, static_cast<int>(j)) = 1;
    for (size_t i = 0; i < e.pivots.size(); ++i) k.at(e.pivots[i], static_cast<int>(j)) = -e.rref.at(static_cast<int>(i), fc);
  }
  return k;
}

std::vector<int> pivot_columns(const QMat& m) { return row_reduce(m).pivots; }

std::optional<QMat> solve(const QMat& a, const QMat& b) {
  if (a.rows != b.rows) throw std::invalid_argument("solve: shape mismatch");
  Echelon e = row_reduce(hstack(a, b));
  // Any pivot falling in the b-block marks an inconsistent system.
  for (int c : e.pivots)
    if (c >= a.cols) return std::nullopt;
  QMat x(a.cols, b.cols);
  for (size_t i = 0; i < e.pivots.size(); ++i)
    for (int j = 0; j < b.cols; ++j) x.at(e.pivots[i], j) = e.rref.at(static_cast<int>(i), a.cols + j);
  return x;
}

QMat coordinates_in_basis(const QMat& basis_cols, const QMat& vecs) {
  if (rank(basis_cols) != basis_cols.cols) throw std::domain_error("coordinates_in_basis: columns are dependent");
  auto x = solve(basis_cols, vecs);
  if (!x) throw std::domain_error("coordinates_in_basis: vector outside span");
  return *x;
}

std::vector<int> complement_rows(const QMat& m) {
  // Column echelon pivots of m = row echelon pivots of m^T; the non-pivot
  // rows extend the column span to the full space.
  Echelon e = row_reduce(transpose(m));
  std::vector<bool> is_pivot(m.rows, false);
  for (int c : e.pivots) is_pivot[c] = true;
  std::vector<int> out;
  for (int r = 0; r < m.rows; ++r)
    if (!is_pivot[r]) out.push_back(r);
  return out;
}

}  // namespace qcw

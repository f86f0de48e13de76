#pragma once

#include <optional>
#include <vector>

#include "qcw/intvec.hpp"
#include "qcw/rational.hpp"

namespace qcw {

// Dense matrix over the rationals. Small sizes throughout (vertex spaces of
// quiver representations and flattened intertwiner systems), so a plain
// row-major vector with exact arithmetic is all that is needed.
struct QMat {
  int rows = 0, cols = 0;
  std::vector<Rat> a;

  QMat() = default;
  QMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Rat(0)) {}

  Rat& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Rat& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static QMat identity(int n);
  static QMat from_int(const IntMat& m);
};

bool operator==(const QMat& x, const QMat& y);
QMat operator*(const QMat& x, const QMat& y);
QMat operator+(const QMat& x, const QMat& y);
QMat operator-(const QMat& x, const QMat& y);
QMat operator*(const Rat& c, const QMat& x);
QMat transpose(const QMat& m);
QMat hstack(const QMat& x, const QMat& y);
QMat vstack(const QMat& x, const QMat& y);
QMat submatrix(const QMat& m, int r0, int c0, int nrows, int ncols);
bool is_zero(const QMat& m);
IntMat to_intmat(const QMat& m);  // throws if any entry is non-integral

// Gauss-Jordan elimination. rref is the reduced row echelon form, pivots
// the pivot column indices in row order.
struct Echelon {
  QMat rref;
  std::vector<int> pivots;
};
Echelon row_reduce(QMat m);

int rank(const QMat& m);
Rat determinant(QMat m);
QMat inverse(const QMat& m);  // throws std::domain_error if singular

// Columns form a basis of the null space {x : m x = 0}; deterministic
// (free coordinates in increasing order, each with entry 1).
QMat kernel_basis(const QMat& m);

// Indices of a deterministic column basis of the column space (the pivot
// columns of the reduced form).
std::vector<int> pivot_columns(const QMat& m);

// Any solution x of a x = b (b may have several columns); std::nullopt if
// inconsistent.
std::optional<QMat> solve(const QMat& a, const QMat& b);

// Coordinates of vecs in the given column basis; throws if vecs do not lie
// in the span or the basis columns are dependent.
QMat coordinates_in_basis(const QMat& basis_cols, const QMat& vecs);

// Row indices r such that {columns of m} + {e_r} is a basis of the full
// space, i.e. the non-pivot rows of the column echelon form of m. Used to
// pick deterministic complements of a column span.
std::vector<int> complement_rows(const QMat& m);

}  // namespace qcw

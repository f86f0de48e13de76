#include <doctest.h>
#include <qcw/qmat.hpp>

#include <stdexcept>

using namespace qcw;

namespace {

QMat from_rows(const IntMat& rows) { return QMat::from_int(rows); }

}  // namespace

TEST_CASE("identity, from_int and arithmetic") {
  QMat i3 = QMat::identity(3);
  CHECK(i3.rows == 3);
  CHECK(i3.at(0, 0) == Rat(1));
  CHECK(i3.at(0, 1) == Rat(0));

  QMat a = from_rows({{1, 2}, {3, 4}});
  QMat b = from_rows({{0, 1}, {1, 0}});
  CHECK(a * b == from_rows({{2, 1}, {4, 3}}));
  CHECK(a + b == from_rows({{1, 3}, {4, 4}}));
  CHECK(a - a == from_rows({{0, 0}, {0, 0}}));
  CHECK(Rat(2) * a == from_rows({{2, 4}, {6, 8}}));
  CHECK(transpose(a) == from_rows({{1, 3}, {2, 4}}));
  CHECK(is_zero(a - a));
  CHECK_FALSE(is_zero(a));
}

TEST_CASE("stacking and submatrix") {
  QMat a = from_rows({{1, 2}, {3, 4}});
  QMat b = from_rows({{5}, {6}});
  QMat h = hstack(a, b);
  CHECK(h.cols == 3);
  CHECK(h.at(1, 2) == Rat(6));
  QMat v = vstack(a, from_rows({{7, 8}}));
  CHECK(v.rows == 3);
  CHECK(v.at(2, 1) == Rat(8));
  CHECK(submatrix(h, 0, 1, 2, 2) == from_rows({{2, 5}, {4, 6}}));
}

TEST_CASE("row reduction and rank") {
  QMat m = from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  Echelon e = row_reduce(m);
  CHECK(e.pivots == std::vector<int>{0, 1});
  CHECK(rank(m) == 2);
  CHECK(rank(QMat::identity(4)) == 4);
  CHECK(rank(QMat(3, 2)) == 0);
}

TEST_CASE("determinant and inverse") {
  QMat m = from_rows({{2, 1}, {1, 1}});
  CHECK(determinant(m) == Rat(1));
  CHECK(inverse(m) * m == QMat::identity(2));
  CHECK(m * inverse(m) == QMat::identity(2));

  QMat unimod = from_rows({{1, 1, 0}, {0, 1, 1}, {0, 0, 1}});
  CHECK(determinant(unimod) == Rat(1));
  CHECK(to_intmat(inverse(unimod)) == IntMat{{1, -1, 1}, {0, 1, -1}, {0, 0, 1}});

  QMat sing = from_rows({{1, 2}, {2, 4}});
  CHECK(determinant(sing) == Rat(0));
  CHECK_THROWS_AS(inverse(sing), std::domain_error);
}

TEST_CASE("kernel basis spans the null space") {
  QMat m = from_rows({{1, 2, 3}, {2, 4, 6}});
  QMat k = kernel_basis(m);
  CHECK(k.cols == 2);
  CHECK(is_zero(m * k));
  CHECK(rank(k) == 2);
  CHECK(kernel_basis(QMat::identity(3)).cols == 0);
}

TEST_CASE("solve finds solutions and detects inconsistency") {
  QMat a = from_rows({{1, 1}, {0, 1}});
  QMat b = from_rows({{3}, {1}});
  auto x = solve(a, b);
  REQUIRE(x.has_value());
  CHECK(a * *x == b);

  QMat sing = from_rows({{1, 1}, {1, 1}});
  CHECK_FALSE(solve(sing, from_rows({{0}, {1}})).has_value());
  auto y = solve(sing, from_rows({{2}, {2}}));
  REQUIRE(y.has_value());
  CHECK(sing * *y == from_rows({{2}, {2}}));
}

TEST_CASE("pivot columns and coordinates in a basis") {
  QMat m = from_rows({{1, 2, 0}, {0, 0, 1}});
  CHECK(pivot_columns(m) == std::vector<int>{0, 2});

  QMat basis = from_rows({{1, 0}, {1, 1}});
  QMat vecs = from_rows({{2}, {3}});
  QMat c = coordinates_in_basis(basis, vecs);
  CHECK(basis * c == vecs);
  CHECK_THROWS(coordinates_in_basis(from_rows({{1}, {0}}), from_rows({{0}, {1}})));
}

TEST_CASE("complement rows extend a column span to the full space") {
  QMat m = from_rows({{1, 0}, {0, 1}, {0, 0}});
  CHECK(complement_rows(m) == std::vector<int>{2});
  CHECK(complement_rows(QMat::identity(2)).empty());
  QMat none(3, 0);
  CHECK(complement_rows(none) == std::vector<int>{0, 1, 2});
}

TEST_CASE("to_intmat rejects fractions") {
  QMat m(1, 1);
  m.at(0, 0) = Rat(1) / Rat(2);
  CHECK_THROWS(to_intmat(m));
}

#include "qcw/intvec.hpp"

#include <sstream>
#include <stdexcept>

namespace qcw {

IntMat int_identity(int n) {
  IntMat m(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMat int_zero(int rows, int cols) { return IntMat(rows, IntVec(cols, 0)); }

IntMat int_transpose(const IntMat& m) {
  if (m.empty()) return {};
  IntMat t(m[0].size(), IntVec(m.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

IntMat int_mul(const IntMat& a, const IntMat& b) {
  size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
  IntMat c(n, IntVec(p, 0));
  for (size_t i = 0; i < n; ++i) {
    if (a[i].size() != k) throw std::invalid_argument("int_mul: shape mismatch");
    for (size_t t = 0; t < k; ++t) {
      Int v = a[i][t];
      if (v == 0) continue;
      for (size_t j = 0; j < p; ++j) c[i][j] += v * b[t][j];
    }
  }
  return c;
}

IntVec mat_vec(const IntMat& m, const IntVec& x) {
  IntVec y(m.size(), 0);
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != x.size()) throw std::invalid_argument("mat_vec: shape mismatch");
    for (size_t j = 0; j < x.size(); ++j) y[i] += m[i][j] * x[j];
  }
  return y;
}

Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVec vec_add(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_add: size mismatch");
  IntVec c(a);
  for (size_t i = 0; i < b.size(); ++i) c[i] += b[i];
  return c;
}

IntVec vec_sub(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_sub: size mismatch");
  IntVec c(a);
  for (size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  return c;
}

IntVec vec_neg(const IntVec& a) {
  IntVec c(a);
  for (auto& v : c) v = -v;
  return c;
}

Int vec_sum(const IntVec& a) {
  Int s = 0;
  for (Int v : a) s += v;
  return s;
}

bool is_zero(const IntVec& a) {
  for (Int v : a)
    if (v != 0) return false;
  return true;
}

bool is_nonnegative(const IntVec& a) {
  for (Int v : a)
    if (v < 0) return false;
  return true;
}

bool is_positive(const IntVec& a) { return is_nonnegative(a) && !is_zero(a); }

std::string vec_to_string(const IntVec& v) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << ')';
  return os.str();
}

std::string mat_to_string(const IntMat& m) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < m.size(); ++i) {
    if (i) os << "; ";
    for (size_t j = 0; j < m[i].size(); ++j) {
      if (j) os << ' ';
      os << m[i][j];
    }
  }
  os << ']';
  return os.str();
}

}  // namespace qcw

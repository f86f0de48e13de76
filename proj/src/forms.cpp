#include "qcw/forms.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "qcw/qmat.hpp"

namespace qcw {

UnitForm unit_form_from_matrix(IntMat m) {
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != m.size()) throw std::invalid_argument("unit form matrix must be square");
    if (m[i][i] != 1) throw std::invalid_argument("unit form must have unit diagonal");
  }
  return UnitForm{std::move(m)};
}

UnitForm euler_unit_form(const EulerForm& f) { return unit_form_from_matrix(f.E); }

Int form_eval(const UnitForm& q, const IntVec& x) { return dot(x, mat_vec(q.M, x)); }

Int form_polar(const UnitForm& q, const IntVec& x, const IntVec& y) {
  return dot(x, mat_vec(q.M, y)) + dot(y, mat_vec(q.M, x));
}

namespace {

IntMat symmetrized(const UnitForm& q) {
  int n = q.n();
  IntMat s = int_zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s[i][j] = q.M[i][j] + q.M[j][i];
  return s;
}

Rat principal_minor(const QMat& s, const std::vector<int>& idx) {
  QMat sub(static_cast<int>(idx.size()), static_cast<int>(idx.size()));
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = 0; j < idx.size(); ++j) sub.at(static_cast<int>(i), static_cast<int>(j)) = s.at(idx[i], idx[j]);
  return determinant(sub);
}

}  // namespace

bool is_positive_definite(const UnitForm& q) {
  // Sylvester: all leading principal minors of the symmetrization positive.
  QMat s = QMat::from_int(symmetrized(q));
  std::vector<int> idx;
  for (int k = 0; k < q.n(); ++k) {
    idx.push_back(k);
    if (principal_minor(s, idx) <= 0) return false;
  }
  return true;
}

bool is_positive_semidefinite(const UnitForm& q) {
  // Semidefiniteness needs every principal minor nonnegative, not just the
  // leading ones. Ranks here are small, so 2^n exact determinants are fine.
  int n = q.n();
  if (n > 16) throw std::invalid_argument("is_positive_semidefinite: rank too large");
  QMat s = QMat::from_int(symmetrized(q));
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> idx;
    for (int k = 0; k < n; ++k)
      if (mask & (1u << k)) idx.push_back(k);
    if (principal_minor(s, idx) < 0) return false;
  }
  return true;
}

IntMat radical_basis(const UnitForm& q) {
  QMat k = kernel_basis(QMat::from_int(symmetrized(q)));
  // Kernel vectors of an integer matrix as produced by Gauss-Jordan are
  // rational; scale each column to a primitive integer vector.
  IntMat out;
  for (int j = 0; j < k.cols; ++j) {
    mpz_class lcm = 1;
    for (int i = 0; i < k.rows; ++i) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), k.at(i, j).get_den().get_mpz_t());
    mpz_class gcd = 0;
    std::vector<mpz_class> num(k.rows);
    for (int i = 0; i < k.rows; ++i) {
      num[i] = k.at(i, j).get_num() * (lcm / k.at(i, j).get_den());
      mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), num[i].get_mpz_t());
    }
    if (gcd == 0) gcd = 1;
    IntVec v(k.rows);
    for (int i = 0; i < k.rows; ++i) {
      mpz_class e = num[i] / gcd;
      if (!e.fits_slong_p()) throw std::overflow_error("radical_basis: entry too large");
      v[i] = e.get_si();
    }
    // Normalize the sign so the first nonzero entry is positive.
    for (Int c : v) {
      if (c > 0) break;
      if (c < 0) {
        v = vec_neg(v);
        break;
      }
    }
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

RootSet enumerate_roots_bfs(const UnitForm& q, Int cap, bool signed_lattice) {
  int n = q.n();
  std::set<IntVec> found;
  std::vector<IntVec> layer;
  for (int i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    found.insert(e);
    layer.push_back(e);
    if (signed_lattice) {
      found.insert(vec_neg(e));
      layer.push_back(vec_neg(e));
    }
  }
  while (!layer.empty()) {
    std::set<IntVec> next;
    for (const IntVec& x : layer) {
      for (int i = 0; i < n; ++i) {
        for (int step : {+1, -1}) {
          if (step < 0 && !signed_lattice) continue;
          IntVec y = x;
          y[i] += step;
          if (found.count(y) || is_zero(y)) continue;
          Int val = form_eval(q, y);
          if (!signed_lattice && val <= 0 && is_positive(y))
            throw FormNotWeaklyPositive("form is not weakly positive: q" + vec_to_string(y) + " = " + std::to_string(val), y);
          if (val != 1) continue;
          bool beyond = false;
          for (Int c : y)
            if (c > cap || c < -cap) beyond = true;
          if (beyond) throw RootCapExceeded("root " + vec_to_string(y) + " exceeds coordinate cap " + std::to_string(cap) + "; raise --root-cap", y);
          next.insert(std::move(y));
        }
      }
    }
    layer.assign(next.begin(), next.end());
    found.insert(next.begin(), next.end());
  }
  RootSet rs;
  rs.cap = cap;
  rs.roots.assign(found.begin(), found.end());
  std::sort(rs.roots.begin(), rs.roots.end());
  return rs;
}

}  // namespace

RootSet enumerate_positive_roots(const UnitForm& q, Int cap) { return enumerate_roots_bfs(q, cap, false); }

RootSet enumerate_all_roots(const UnitForm& q, Int cap) {
  if (!is_positive_definite(q)) throw std::invalid_argument("enumerate_all_roots: form must be positive definite");
  return enumerate_roots_bfs(q, cap, true);
}

IntVec abs_vector(const IntVec& x) {
  IntVec y(x);
  for (Int& v : y) v = v < 0 ? -v : v;
  return y;
}

IntVec apply_linear(const IntMat& a, const IntVec& x) { return mat_vec(a, x); }

FiberReport abs_fiber_check(const std::vector<IntVec>& roots) {
  std::map<IntVec, IntVec> seen;  // abs value -> representative
  for (const IntVec& x : roots) {
    IntVec ax = abs_vector(x);
    auto [it, inserted] = seen.emplace(ax, x);
    if (!inserted && it->second != x && it->second != vec_neg(x)) return FiberReport{false, it->second, x};
  }
  return FiberReport{};
}

Bigraph form_to_bigraph(const UnitForm& q, std::vector<std::string> labels) {
  int n = q.n();
  if (static_cast<int>(labels.size()) != n) throw std::invalid_argument("form_to_bigraph: label count mismatch");
  Bigraph b;
  b.labels = std::move(labels);
  b.solid = int_zero(n, n);
  b.dotted = int_zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Int c = q.M[i][j] + q.M[j][i];
      if (c < 0) b.solid[i][j] = b.solid[j][i] = -c;
      if (c > 0) b.dotted[i][j] = b.dotted[j][i] = c;
    }
  return b;
}

UnitForm bigraph_to_form(const Bigraph& b) {
  int n = b.n();
  IntMat m = int_identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) m[i][j] = b.dotted[i][j] - b.solid[i][j];
  return unit_form_from_matrix(std::move(m));
}

}  // namespace qcw

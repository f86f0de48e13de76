#include "qcw/catalog.hpp"

#include <algorithm>
#include <map>

namespace qcw {

int Catalog::index_of_dim(const IntVec& d) const {
  for (int i = 0; i < size(); ++i)
    if (dims[i] == d) return i;
  return -1;
}

int Catalog::index_of_name(const std::string& n) const {
  for (int i = 0; i < size(); ++i)
    if (names[i] == n) return i;
  return -1;
}

namespace {

std::vector<std::string> name_catalog(const Quiver& q, const Coxeter& cox, const std::vector<IntVec>& dims) {
  int n = q.n();
  std::map<IntVec, std::string> name;
  auto put = [&](const IntVec& d, const std::string& s) { name.emplace(d, s); };  // first writer wins
  for (int v = 0; v < n; ++v) put(projective_rep(q, v).dim_vec(), "P(" + q.labels[v] + ")");
  for (int v = 0; v < n; ++v) put(injective_rep(q, v).dim_vec(), "I(" + q.labels[v] + ")");
  for (int v = 0; v < n; ++v) {
    IntVec e(n, 0);
    e[v] = 1;
    put(e, "S(" + q.labels[v] + ")");
  }
  // Remaining modules: walk tau-powers of the injectives.
  for (int k = 1; k <= 3 * n; ++k)
    for (int v = 0; v < n; ++v) {
      IntVec d = injective_rep(q, v).dim_vec();
      for (int i = 0; i < k; ++i) d = mat_vec(cox.phi, d);
      if (!is_positive(d)) continue;
      put(d, (k == 1 ? "tauI(" : "tau^" + std::to_string(k) + "I(") + q.labels[v] + ")");
    }
  std::vector<std::string> out;
  for (const IntVec& d : dims) {
    auto it = name.find(d);
    out.push_back(it != name.end() ? it->second : "M" + vec_to_string(d));
  }
  return out;
}

}  // namespace

Catalog build_catalog(const Quiver& q) {
  Catalog cat;
  cat.Q = q;
  cat.euler = euler_matrix(q);
  if (!is_positive_definite(euler_unit_form(cat.euler)))
    throw std::invalid_argument("build_catalog: quiver is not representation finite (Euler form not positive definite)");
  cat.cox = coxeter_matrix(cat.euler);

  RootSet rs = enumerate_positive_roots(euler_unit_form(cat.euler));
  cat.dims = rs.roots;
  std::sort(cat.dims.begin(), cat.dims.end(), [](const IntVec& a, const IntVec& b) {
    Int sa = vec_sum(a), sb = vec_sum(b);
    return sa != sb ? sa < sb : a < b;
  });
  cat.names = name_catalog(q, cat.cox, cat.dims);
  for (const IntVec& d : cat.dims) {
    Representation r = build_root_rep(q, d);
    if (end_dim(r) != 1) throw std::logic_error("build_catalog: root module is not a brick");
    cat.reps.push_back(std::move(r));
  }
  int N = cat.size();
  cat.hom = int_zero(N, N);
  cat.ext = int_zero(N, N);
  cat.hom_bases.assign(N, std::vector<QMat>(N));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      cat.hom_bases[i][j] = hom_basis(cat.reps[i], cat.reps[j]);
      cat.hom[i][j] = cat.hom_bases[i][j].cols;
      // Hereditary: ext1 = hom - <dim_i, dim_j>.
      cat.ext[i][j] = cat.hom[i][j] - bilinear(cat.euler, cat.dims[i], cat.dims[j]);
      if (cat.ext[i][j] < 0) throw std::logic_error("build_catalog: negative ext dimension");
    }
  return cat;
}

namespace {

// Scalar of the endomorphism g o f of a brick X, or 0.
Rat composite_scalar(const Representation& X, const std::vector<QMat>& f, const std::vector<QMat>& g) {
  for (int v = 0; v < X.Q.n(); ++v) {
    if (X.dim[v] == 0) continue;
    QMat c = g[v] * f[v];
    return c.at(0, 0);
  }
  return Rat(0);
}

}  // namespace

std::vector<int> decompose(const Catalog& cat, const Representation& M) {
  if (!same_quiver(cat.Q, M.Q)) throw std::invalid_argument("decompose: different quivers");
  check_rep(M);
  Representation cur = M;
  std::vector<int> out;
  while (cur.total_dim() > 0) {
    bool peeled = false;
    for (int c = 0; c < cat.size() && !peeled; ++c) {
      bool fits = true;
      for (int v = 0; v < cat.Q.n(); ++v)
        if (cat.dims[c][v] > cur.dim[v]) fits = false;
      if (!fits) continue;
      const Representation& X = cat.reps[c];
      QMat fb = hom_basis(X, cur);
      if (fb.cols == 0) continue;
      QMat gb = hom_basis(cur, X);
      for (int i = 0; i < fb.cols && !peeled; ++i) {
        auto f = unflatten_hom(X, cur, fb, i);
        for (int j = 0; j < gb.cols && !peeled; ++j) {
          auto g = unflatten_hom(cur, X, gb, j);
          Rat scal = composite_scalar(X, f, g);
          if (scal == 0) continue;
          // p = (1/scal) f g is an idempotent endomorphism of cur with
          // image isomorphic to X; the kernel is a complementary
          // submodule.
          std::vector<QMat> kerb;
          for (int v = 0; v < cat.Q.n(); ++v) {
            QMat p = (1 / scal) * (f[v] * g[v]);
            kerb.push_back(kernel_basis(p));
          }
          SubQuot sq = sub_quotient(cur, std::move(kerb));
          if (sq.sub.total_dim() + X.total_dim() != cur.total_dim())
            throw std::logic_error("decompose: idempotent splitting dimension mismatch");
          out.push_back(c);
          cur = sq.sub;
          peeled = true;
        }
      }
    }
    if (!peeled)
      throw std::runtime_error("decompose: no catalog brick splits off " + vec_to_string(cur.dim_vec()) +
                               "; module has a non-brick indecomposable summand outside the catalog");
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_isomorphic(const Catalog& cat, const Representation& A, const Representation& B) {
  if (A.dim_vec() != B.dim_vec()) return false;
  return decompose(cat, A) == decompose(cat, B);
}

}  // namespace qcw

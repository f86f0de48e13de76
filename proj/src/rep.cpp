#include "qcw/rep.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace qcw {

IntVec Representation::dim_vec() const {
  IntVec d(dim.size());
  for (size_t i = 0; i < dim.size(); ++i) d[i] = dim[i];
  return d;
}

Int Representation::total_dim() const { return std::accumulate(dim.begin(), dim.end(), Int(0)); }

bool same_quiver(const Quiver& a, const Quiver& b) {
  if (a.labels != b.labels || a.arrows.size() != b.arrows.size()) return false;
  for (size_t i = 0; i < a.arrows.size(); ++i)
    if (a.arrows[i].src != b.arrows[i].src || a.arrows[i].tgt != b.arrows[i].tgt) return false;
  return true;
}

void check_rep(const Representation& r) {
  if (static_cast<int>(r.dim.size()) != r.Q.n() || r.mats.size() != r.Q.arrows.size())
    throw std::logic_error("representation shape mismatch");
  for (size_t a = 0; a < r.mats.size(); ++a) {
    const Arrow& ar = r.Q.arrows[a];
    if (r.mats[a].rows != r.dim[ar.tgt] || r.mats[a].cols != r.dim[ar.src])
      throw std::logic_error("arrow matrix shape mismatch");
  }
}

Representation zero_rep(const Quiver& q) {
  Representation r{q, std::vector<int>(q.n(), 0), {}};
  r.mats.assign(q.arrows.size(), QMat(0, 0));
  return r;
}

Representation simple_rep(const Quiver& q, int v) {
  Representation r = zero_rep(q);
  r.dim[v] = 1;
  for (size_t a = 0; a < q.arrows.size(); ++a) r.mats[a] = QMat(r.dim[q.arrows[a].tgt], r.dim[q.arrows[a].src]);
  return r;
}

namespace {

// All paths starting at v (for projectives) as arrow index sequences,
// grouped per end vertex, in a deterministic DFS order.
std::vector<std::vector<std::vector<int>>> paths_from(const Quiver& q, int v) {
  std::vector<std::vector<std::vector<int>>> per_vertex(q.n());
  std::vector<int> cur;
  // Iterative DFS over (vertex, path) states; acyclicity bounds the walk.
  struct Frame {
    int vertex;
    std::vector<int> path;
  };
  std::vector<Frame> stack{{v, {}}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    per_vertex[f.vertex].push_back(f.path);
    for (size_t a = 0; a < q.arrows.size(); ++a) {
      if (q.arrows[a].src != f.vertex) continue;
      Frame g{q.arrows[a].tgt, f.path};
      g.path.push_back(static_cast<int>(a));
      stack.push_back(std::move(g));
    }
  }
  for (auto& lst : per_vertex) std::sort(lst.begin(), lst.end());
  return per_vertex;
}

int path_index(const std::vector<std::vector<int>>& basis, const std::vector<int>& p) {
  auto it = std::lower_bound(basis.begin(), basis.end(), p);
  if (it == basis.end() || *it != p) throw std::logic_error("path not found in basis");
  return static_cast<int>(it - basis.begin());
}

}  // namespace

Representation projective_rep(const Quiver& q, int v) {
  auto basis = paths_from(q, v);
  Representation r{q, {}, {}};
  r.dim.resize(q.n());
  for (int w = 0; w < q.n(); ++w) r.dim[w] = static_cast<int>(basis[w].size());
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    int s = q.arrows[a].src, t = q.arrows[a].tgt;
    QMat m(r.dim[t], r.dim[s]);
    for (int j = 0; j < r.dim[s]; ++j) {
      std::vector<int> p = basis[s][j];
      p.push_back(static_cast<int>(a));
      m.at(path_index(basis[t], p), j) = 1;
    }
    r.mats.push_back(std::move(m));
  }
  return r;
}

Representation injective_rep(const Quiver& q, int v) {
  // Paths into v live on the opposite quiver; I(v) is the vertex-wise dual
  // of the right module of paths w ~> v, so each arrow acts by the
  // transpose of precomposition.
  auto basis = paths_from(opposite(q), v);  // basis[w] = paths w ~> v in q, arrow ids shared
  Representation r{q, {}, {}};
  r.dim.resize(q.n());
  for (int w = 0; w < q.n(); ++w) r.dim[w] = static_cast<int>(basis[w].size());
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    int s = q.arrows[a].src, t = q.arrows[a].tgt;
    // Precomposition: a path t ~> v extends to s -a-> t ~> v. In the
    // opposite-quiver encoding (arrow ids walked from v) that appends a.
    QMat pre(r.dim[s], r.dim[t]);
    for (int j = 0; j < r.dim[t]; ++j) {
      std::vector<int> p = basis[t][j];
      p.push_back(static_cast<int>(a));
      pre.at(path_index(basis[s], p), j) = 1;
    }
    r.mats.push_back(transpose(pre));
  }
  return r;
}

Representation direct_sum(const Representation& a, const Representation& b) {
  if (!same_quiver(a.Q, b.Q)) throw std::invalid_argument("direct_sum: different quivers");
  Representation r{a.Q, {}, {}};
  r.dim.resize(a.Q.n());
  for (int v = 0; v < a.Q.n(); ++v) r.dim[v] = a.dim[v] + b.dim[v];
  for (size_t k = 0; k < a.mats.size(); ++k) {
    const Arrow& ar = a.Q.arrows[k];
    QMat m(r.dim[ar.tgt], r.dim[ar.src]);
    for (int i = 0; i < a.mats[k].rows; ++i)
      for (int j = 0; j < a.mats[k].cols; ++j) m.at(i, j) = a.mats[k].at(i, j);
    for (int i = 0; i < b.mats[k].rows; ++i)
      for (int j = 0; j < b.mats[k].cols; ++j) m.at(a.dim[ar.tgt] + i, a.dim[ar.src] + j) = b.mats[k].at(i, j);
    r.mats.push_back(std::move(m));
  }
  return r;
}

namespace {

std::vector<int> vertex_offsets(const Representation& X, const Representation& Y) {
  std::vector<int> off(X.Q.n() + 1, 0);
  for (int v = 0; v < X.Q.n(); ++v) off[v + 1] = off[v] + X.dim[v] * Y.dim[v];
  return off;
}

std::vector<int> arrow_offsets(const Representation& X, const Representation& Y) {
  int m = static_cast<int>(X.Q.arrows.size());
  std::vector<int> off(m + 1, 0);
  for (int a = 0; a < m; ++a) off[a + 1] = off[a] + X.dim[X.Q.arrows[a].src] * Y.dim[Y.Q.arrows[a].tgt];
  return off;
}

}  // namespace

QMat hom_boundary(const Representation& X, const Representation& Y) {
  if (!same_quiver(X.Q, Y.Q)) throw std::invalid_argument("hom_boundary: different quivers");
  auto voff = vertex_offsets(X, Y);
  auto aoff = arrow_offsets(X, Y);
  QMat d(aoff.back(), voff.back());
  for (size_t a = 0; a < X.Q.arrows.size(); ++a) {
    int s = X.Q.arrows[a].src, t = X.Q.arrows[a].tgt;
    // Block row for arrow a: entry ((i,j)) of f_t X_a - Y_a f_s, where the
    // cocycle slot is a Y_t x X_s matrix, row-major.
    for (int i = 0; i < Y.dim[t]; ++i)
      for (int j = 0; j < X.dim[s]; ++j) {
        int row = aoff[a] + i * X.dim[s] + j;
        // f_t X_a term: sum_k (f_t)_{i,k} (X_a)_{k,j}
        for (int k = 0; k < X.dim[t]; ++k) d.at(row, voff[t] + i * X.dim[t] + k) += X.mats[a].at(k, j);
        // -Y_a f_s term: -sum_k (Y_a)_{i,k} (f_s)_{k,j}
        for (int k = 0; k < Y.dim[s]; ++k) d.at(row, voff[s] + k * X.dim[s] + j) -= Y.mats[a].at(i, k);
      }
  }
  return d;
}

QMat hom_basis(const Representation& X, const Representation& Y) { return kernel_basis(hom_boundary(X, Y)); }

int hom_dim(const Representation& X, const Representation& Y) { return hom_basis(X, Y).cols; }

int end_dim(const Representation& X) { return hom_dim(X, X); }

int ext1_dim(const Representation& X, const Representation& Y) {
  QMat d = hom_boundary(X, Y);
  return d.rows - rank(d);
}

std::vector<QMat> unflatten_hom(const Representation& X, const Representation& Y, const QMat& flat, int col) {
  auto voff = vertex_offsets(X, Y);
  std::vector<QMat> f;
  for (int v = 0; v < X.Q.n(); ++v) {
    QMat m(Y.dim[v], X.dim[v]);
    for (int i = 0; i < Y.dim[v]; ++i)
      for (int j = 0; j < X.dim[v]; ++j) m.at(i, j) = flat.at(voff[v] + i * X.dim[v] + j, col);
    f.push_back(std::move(m));
  }
  return f;
}

SubQuot sub_quotient(const Representation& M, std::vector<QMat> subspace_cols) {
  check_rep(M);
  SubQuot sq;
  int n = M.Q.n();
  sq.incl.resize(n);
  sq.proj.resize(n);
  sq.lift.resize(n);
  std::vector<std::vector<int>> comp(n);
  for (int v = 0; v < n; ++v) {
    QMat& b = subspace_cols[v];
    if (b.rows != M.dim[v]) throw std::invalid_argument("sub_quotient: subspace shape mismatch");
    if (rank(b) != b.cols) throw std::invalid_argument("sub_quotient: subspace columns dependent");
    sq.incl[v] = b;
    comp[v] = complement_rows(b);
    // Square [incl | E_comp]; its inverse splits M_v into span + complement
    // coordinates, giving the projection and a section of it.
    QMat ext(M.dim[v], static_cast<int>(comp[v].size()));
    for (size_t j = 0; j < comp[v].size(); ++j) ext.at(comp[v][j], static_cast<int>(j)) = 1;
    QMat pinv = inverse(hstack(b, ext));
    sq.proj[v] = submatrix(pinv, b.cols, 0, static_cast<int>(comp[v].size()), M.dim[v]);
    sq.lift[v] = ext;
  }
  sq.sub.Q = M.Q;
  sq.quot.Q = M.Q;
  sq.sub.dim.resize(n);
  sq.quot.dim.resize(n);
  for (int v = 0; v < n; ++v) {
    sq.sub.dim[v] = sq.incl[v].cols;
    sq.quot.dim[v] = static_cast<int>(comp[v].size());
  }
  for (size_t a = 0; a < M.Q.arrows.size(); ++a) {
    int s = M.Q.arrows[a].src, t = M.Q.arrows[a].tgt;
    // Invariance: M_a(sub_s) must lie in sub_t; coordinates_in_basis throws
    // otherwise.
    sq.sub.mats.push_back(coordinates_in_basis(sq.incl[t], M.mats[a] * sq.incl[s]));
    sq.quot.mats.push_back(sq.proj[t] * (M.mats[a] * sq.lift[s]));
  }
  check_rep(sq.sub);
  check_rep(sq.quot);
  return sq;
}

SubQuot torsion_submodule(const std::vector<Representation>& T_summands, const Representation& M) {
  check_rep(M);
  int n = M.Q.n();
  std::vector<QMat> span(n);
  for (int v = 0; v < n; ++v) span[v] = QMat(M.dim[v], 0);
  for (const Representation& t : T_summands) {
    if (!same_quiver(t.Q, M.Q)) throw std::invalid_argument("torsion_submodule: different quivers");
    QMat hb = hom_basis(t, M);
    for (int c = 0; c < hb.cols; ++c) {
      auto f = unflatten_hom(t, M, hb, c);
      for (int v = 0; v < n; ++v) span[v] = hstack(span[v], f[v]);
    }
  }
  // Reduce the collected image columns to a deterministic basis.
  std::vector<QMat> basis(n);
  for (int v = 0; v < n; ++v) {
    auto piv = pivot_columns(span[v]);
    QMat b(M.dim[v], static_cast<int>(piv.size()));
    for (size_t j = 0; j < piv.size(); ++j)
      for (int i = 0; i < M.dim[v]; ++i) b.at(i, static_cast<int>(j)) = span[v].at(i, piv[j]);
    basis[v] = std::move(b);
  }
  return sub_quotient(M, std::move(basis));
}

namespace {

// Vertices ordered so each is a sink when its turn comes (reverse
// topological order of the original quiver).
std::vector<int> sink_first_order(const Quiver& q) {
  std::vector<int> outdeg(q.n(), 0);
  for (const Arrow& a : q.arrows) ++outdeg[a.src];
  std::vector<int> order;
  std::vector<bool> done(q.n(), false);
  for (int step = 0; step < q.n(); ++step) {
    int pick = -1;
    for (int v = 0; v < q.n(); ++v)
      if (!done[v] && outdeg[v] == 0) {
        pick = v;
        break;
      }
    if (pick < 0) throw std::logic_error("sink_first_order: quiver has a cycle");
    done[pick] = true;
    order.push_back(pick);
    for (const Arrow& a : q.arrows)
      if (a.tgt == pick && !done[a.src]) --outdeg[a.src];
  }
  return order;
}

Quiver reflect_at(const Quiver& q, int v) {
  Quiver r = q;
  for (Arrow& a : r.arrows)
    if (a.src == v || a.tgt == v) std::swap(a.src, a.tgt);
  return r;
}

// Source reflection functor at v: N is a representation of a quiver where v
// is a source; the result lives on the quiver with the arrows at v
// reversed, with M_v = coker(N_v -> (+)_{a: v->t} N_t).
Representation source_reflection(const Representation& N, int v) {
  const Quiver& qa = N.Q;  // v is a source here
  Quiver qb = reflect_at(qa, v);
  std::vector<int> arrows_at_v;
  for (size_t a = 0; a < qa.arrows.size(); ++a)
    if (qa.arrows[a].src == v) arrows_at_v.push_back(static_cast<int>(a));
  for (int a : arrows_at_v)
    if (qa.arrows[a].tgt == v) throw std::logic_error("source_reflection: loop");
  // Stack the arrow matrices into phi : N_v -> W.
  int wdim = 0;
  std::vector<int> slot_off;
  for (int a : arrows_at_v) {
    slot_off.push_back(wdim);
    wdim += N.dim[qa.arrows[a].tgt];
  }
  QMat phi(wdim, N.dim[v]);
  for (size_t k = 0; k < arrows_at_v.size(); ++k) {
    const QMat& m = N.mats[arrows_at_v[k]];
    for (int i = 0; i < m.rows; ++i)
      for (int j = 0; j < m.cols; ++j) phi.at(slot_off[k] + i, j) = m.at(i, j);
  }
  if (rank(phi) != N.dim[v])
    throw RootNotConstructible("source reflection not defined: the stacked arrow map is not injective");
  std::vector<int> comp = complement_rows(phi);
  QMat ext(wdim, static_cast<int>(comp.size()));
  for (size_t j = 0; j < comp.size(); ++j) ext.at(comp[j], static_cast<int>(j)) = 1;
  QMat pi = submatrix(inverse(hstack(phi, ext)), N.dim[v], 0, static_cast<int>(comp.size()), wdim);

  Representation M{qb, N.dim, {}};
  M.dim[v] = static_cast<int>(comp.size());
  for (size_t a = 0; a < qb.arrows.size(); ++a) {
    auto pos = std::find(arrows_at_v.begin(), arrows_at_v.end(), static_cast<int>(a));
    if (pos == arrows_at_v.end()) {
      M.mats.push_back(N.mats[a]);
      continue;
    }
    // Reversed arrow t -> v: include N_t into W, then project to the
    // cokernel.
    size_t k = static_cast<size_t>(pos - arrows_at_v.begin());
    int t = qb.arrows[a].src;
    QMat inc(wdim, N.dim[t]);
    for (int j = 0; j < N.dim[t]; ++j) inc.at(slot_off[k] + j, j) = 1;
    M.mats.push_back(pi * inc);
  }
  check_rep(M);
  return M;
}

}  // namespace

Representation build_root_rep(const Quiver& q, const IntVec& root) {
  if (static_cast<int>(root.size()) != q.n()) throw std::invalid_argument("build_root_rep: dimension mismatch");
  if (!is_positive(root)) throw std::invalid_argument("build_root_rep: root must be positive");
  EulerForm f = euler_matrix(q);
  if (quadratic(f, root) != 1)
    throw std::invalid_argument("build_root_rep: " + vec_to_string(root) + " is not a root (q = " + std::to_string(quadratic(f, root)) + ")");

  // Underlying multiplicity matrix; the reflected dimension at v only
  // depends on it, not on the current orientation.
  IntMat mult = int_zero(q.n(), q.n());
  for (const Arrow& a : q.arrows) {
    ++mult[a.src][a.tgt];
    ++mult[a.tgt][a.src];
  }

  std::vector<int> order = sink_first_order(q);
  IntVec x = root;
  Quiver cur = q;
  std::vector<std::pair<int, Quiver>> steps;  // (vertex, quiver before reflecting it)
  int stop_vertex = -1;
  Quiver stop_quiver;
  Int max_rounds = 32 + 8 * vec_sum(root);
  for (Int round = 0; round < max_rounds && stop_vertex < 0; ++round) {
    IntVec before_round = x;
    for (int v : order) {
      IntVec ev(q.n(), 0);
      ev[v] = 1;
      if (x == ev) {
        stop_vertex = v;
        stop_quiver = cur;
        break;
      }
      Int refl = -x[v];
      for (int w = 0; w < q.n(); ++w) refl += mult[v][w] * x[w];
      steps.push_back({v, cur});
      cur = reflect_at(cur, v);
      x[v] = refl;
      if (!is_positive(x)) throw RootNotConstructible("reflection left the positive cone at " + vec_to_string(x));
    }
    if (stop_vertex < 0 && x == before_round)
      throw RootNotConstructible("root " + vec_to_string(root) + " is fixed by the reflection round (tau-periodic); not constructible by the reflection schedule");
  }
  if (stop_vertex < 0)
    throw RootNotConstructible("root " + vec_to_string(root) + " not reduced to a simple root within the round budget; not constructible by the reflection schedule");

  Representation rep = simple_rep(stop_quiver, stop_vertex);
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    rep = source_reflection(rep, it->first);
    if (!same_quiver(rep.Q, it->second)) throw std::logic_error("build_root_rep: unwind quiver mismatch");
  }
  if (rep.dim_vec() != root) throw std::logic_error("build_root_rep: produced wrong dimension vector");
  return rep;
}

ExtSpace ext_space(const Representation& X, const Representation& Y) {
  ExtSpace es;
  es.delta = hom_boundary(X, Y);
  es.basis_rows = complement_rows(es.delta);
  return es;
}

ExtClassRep ext_class(const std::vector<Representation>& T_summands, const Representation& M) {
  SubQuot sq = torsion_submodule(T_summands, M);
  const Representation& X = sq.quot;
  const Representation& Y = sq.sub;
  // eps_a = incl^{-1}(M_a lift_s - lift_t X_a) measures the failure of the
  // chosen vector space splitting to be a module splitting.
  std::vector<QMat> eps;
  for (size_t a = 0; a < M.Q.arrows.size(); ++a) {
    int s = M.Q.arrows[a].src, t = M.Q.arrows[a].tgt;
    QMat defect = M.mats[a] * sq.lift[s] - sq.lift[t] * X.mats[a];
    eps.push_back(coordinates_in_basis(sq.incl[t], defect));
  }
  ExtSpace es = ext_space(X, Y);
  // Flatten eps and express its class in the fixed complement basis: solve
  // [delta | E_B] (u, t) = eps; t is unique because E_B complements im
  // delta.
  QMat flat(es.delta.rows, 1);
  {
    int off = 0;
    for (size_t a = 0; a < M.Q.arrows.size(); ++a) {
      for (int i = 0; i < eps[a].rows; ++i)
        for (int j = 0; j < eps[a].cols; ++j) flat.at(off + i * eps[a].cols + j, 0) = eps[a].at(i, j);
      off += eps[a].rows * eps[a].cols;
    }
  }
  QMat eb(es.delta.rows, es.dim());
  for (int j = 0; j < es.dim(); ++j) eb.at(es.basis_rows[j], j) = 1;
  auto sol = solve(hstack(es.delta, eb), flat);
  if (!sol) throw std::logic_error("ext_class: cocycle outside the cocycle space");
  ExtClassRep out;
  out.sub = Y;
  out.quot = X;
  for (int j = 0; j < es.dim(); ++j) out.coords.push_back(sol->at(es.delta.cols + j, 0));
  return out;
}

Representation build_extension(const Representation& X, const Representation& Y, const std::vector<Rat>& coords) {
  if (!same_quiver(X.Q, Y.Q)) throw std::invalid_argument("build_extension: different quivers");
  ExtSpace es = ext_space(X, Y);
  if (static_cast<int>(coords.size()) != es.dim()) throw std::invalid_argument("build_extension: class coordinate count mismatch");
  // Rebuild the cocycle from the complement-basis coordinates.
  QMat flat(es.delta.rows, 1);
  for (int j = 0; j < es.dim(); ++j) flat.at(es.basis_rows[j], 0) = coords[j];
  Representation E{X.Q, {}, {}};
  E.dim.resize(X.Q.n());
  for (int v = 0; v < X.Q.n(); ++v) E.dim[v] = Y.dim[v] + X.dim[v];
  int off = 0;
  for (size_t a = 0; a < X.Q.arrows.size(); ++a) {
    int s = X.Q.arrows[a].src, t = X.Q.arrows[a].tgt;
    QMat m(E.dim[t], E.dim[s]);
    for (int i = 0; i < Y.dim[t]; ++i)
      for (int j = 0; j < Y.dim[s]; ++j) m.at(i, j) = Y.mats[a].at(i, j);
    for (int i = 0; i < X.dim[t]; ++i)
      for (int j = 0; j < X.dim[s]; ++j) m.at(Y.dim[t] + i, Y.dim[s] + j) = X.mats[a].at(i, j);
    for (int i = 0; i < Y.dim[t]; ++i)
      for (int j = 0; j < X.dim[s]; ++j) m.at(i, Y.dim[s] + j) = flat.at(off + i * X.dim[s] + j, 0);
    off += Y.dim[t] * X.dim[s];
    E.mats.push_back(std::move(m));
  }
  check_rep(E);
  return E;
}

}  // namespace qcw

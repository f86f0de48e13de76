#include "qcw/cluster.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "qcw/qmat.hpp"

namespace qcw {

namespace {

// Dimension vector of the trace of add T in cat.reps[m]: per vertex, the
// rank of all image columns of the cached homomorphism bases.
IntVec trace_dims(const Catalog& cat, const TiltingModule& T, int m) {
  const Representation& M = cat.reps[m];
  int n = cat.Q.n();
  std::vector<QMat> span;
  span.reserve(n);
  for (int v = 0; v < n; ++v) span.emplace_back(M.dim[v], 0);
  for (int t : T.idx) {
    const QMat& hb = cat.hom_bases[t][m];
    for (int c = 0; c < hb.cols; ++c) {
      auto f = unflatten_hom(cat.reps[t], M, hb, c);
      for (int v = 0; v < n; ++v) span[v] = hstack(span[v], f[v]);
    }
  }
  IntVec d(n, 0);
  for (int v = 0; v < n; ++v) d[v] = rank(span[v]);
  return d;
}

// Inverse of the hom-count matrix over the given catalog indices
// (hom[sel_i][sel_j], or its transpose). The catalog category is directed,
// so this matrix is unimodular and the inverse is integral.
IntMat hom_block_inverse(const Catalog& cat, const std::vector<int>& sel, bool transpose) {
  int s = static_cast<int>(sel.size());
  IntMat h = int_zero(s, s);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) h[i][j] = transpose ? cat.hom[sel[j]][sel[i]] : cat.hom[sel[i]][sel[j]];
  return to_intmat(inverse(QMat::from_int(h)));
}

// Summand multiplicities from hom counts: expand the solution of
// (hom block) * m = rhs into a sorted index list.
std::vector<int> expand_counts(const Catalog& cat, const std::vector<int>& sel, const IntVec& counts,
                               const IntVec& expect_dim, const std::string& what) {
  std::vector<int> out;
  IntVec total(cat.Q.n(), 0);
  for (size_t i = 0; i < sel.size(); ++i) {
    if (counts[i] < 0)
      throw std::logic_error("cluster_dim_vectors: negative summand multiplicity for " + what);
    for (Int c = 0; c < counts[i]; ++c) out.push_back(sel[i]);
    for (int v = 0; v < cat.Q.n(); ++v) total[v] += counts[i] * cat.dims[sel[i]][v];
  }
  if (total != expect_dim)
    throw std::logic_error("cluster_dim_vectors: summand multiplicities of " + what +
                           " do not add up to the trace dimensions");
  return out;
}

Int end_of_sum(const Catalog& cat, const std::vector<int>& summands) {
  Int e = 0;
  for (int i : summands)
    for (int j : summands) e += cat.hom[i][j];
  return e;
}

}  // namespace

ClusterSet cluster_dim_vectors(const Catalog& cat, const TiltingModule& T) {
  ClusterSet cs;
  cs.T = T;
  cs.bc = base_change(cat, T);
  cs.qb = pushforward_form(cat, cs.bc);
  cs.cls = classify_torsion(cat, T);
  int n = cat.Q.n();

  IntMat tors_inv, free_inv;  // built on first mixed record
  for (int m = 0; m < cat.size(); ++m) {
    ClusterRecord rec;
    rec.index = m;
    rec.tag = cs.cls.tags[m];
    rec.g_image = apply_base_change(cs.bc, cat.dims[m]);
    rec.abs_image = abs_vector(rec.g_image);
    rec.hom_vector.resize(n);
    rec.ext_vector.resize(n);
    for (int c = 0; c < n; ++c) {
      rec.hom_vector[c] = cat.hom[T.idx[c]][m];
      rec.ext_vector[c] = cat.ext[T.idx[c]][m];
    }
    rec.dim_torsion = trace_dims(cat, T, m);
    rec.dim_free = vec_sub(cat.dims[m], rec.dim_torsion);
    if (!is_nonnegative(rec.dim_free))
      throw std::logic_error("cluster_dim_vectors: trace exceeds the module at " + cat.names[m]);

    if (is_zero(rec.dim_torsion)) {
      rec.free_summands = {m};
    } else if (rec.dim_torsion == cat.dims[m]) {
      rec.torsion_summands = {m};
    } else {
      // Proper submodule: read both summand lists off the hom counts.
      // Hom(X, tM) = Hom(X, M) for torsion X and Hom(M/tM, Y) = Hom(M, Y)
      // for torsion-free Y, so the unimodular hom-count blocks determine
      // the multiplicities.
      if (tors_inv.empty()) {
        tors_inv = hom_block_inverse(cat, cs.cls.torsion, false);
        free_inv = hom_block_inverse(cat, cs.cls.torsion_free, true);
      }
      IntVec rhs_t, rhs_f;
      for (int i : cs.cls.torsion) rhs_t.push_back(cat.hom[i][m]);
      for (int i : cs.cls.torsion_free) rhs_f.push_back(cat.hom[m][i]);
      rec.torsion_summands = expand_counts(cat, cs.cls.torsion, mat_vec(tors_inv, rhs_t), rec.dim_torsion,
                                           cat.names[m] + " (torsion part)");
      rec.free_summands = expand_counts(cat, cs.cls.torsion_free, mat_vec(free_inv, rhs_f), rec.dim_free,
                                        cat.names[m] + " (torsion-free part)");
    }
    rec.end_torsion = end_of_sum(cat, rec.torsion_summands);
    rec.end_free = end_of_sum(cat, rec.free_summands);
    rec.qb_value = form_eval(cs.qb, rec.abs_image);

    IntVec route2 = vec_sub(apply_base_change(cs.bc, rec.dim_torsion), apply_base_change(cs.bc, rec.dim_free));
    if (route2 != rec.abs_image)
      throw std::logic_error("cluster_dim_vectors: torsion route disagrees with abs g at " + cat.names[m]);
    cs.records.push_back(std::move(rec));
  }
  return cs;
}

TorsionTriple explicit_triple(const Catalog& cat, const TiltingModule& T, int index) {
  std::vector<Representation> Ts;
  for (int t : T.idx) Ts.push_back(cat.reps[t]);
  TorsionTriple tt{torsion_submodule(Ts, cat.reps[index]), {}, {}};
  if (tt.parts.sub.total_dim() > 0) tt.torsion_summands = decompose(cat, tt.parts.sub);
  if (tt.parts.quot.total_dim() > 0) tt.free_summands = decompose(cat, tt.parts.quot);
  return tt;
}

CheckReport check_separation(const Catalog& cat, const ClusterSet& cs) {
  CheckReport rep;
  rep.property = "separation";
  int n = cat.Q.n();
  for (const ClusterRecord& r : cs.records) {
    ++rep.checked;
    if (apply_base_change(cs.bc, r.dim_torsion) != r.hom_vector)
      rep.fail(cat.names[r.index] + ": g(dim tM) differs from dim Hom(T,M) = " + vec_to_string(r.hom_vector));
    if (vec_neg(apply_base_change(cs.bc, r.dim_free)) != r.ext_vector)
      rep.fail(cat.names[r.index] + ": -g(dim M/tM) differs from dim Ext^1(T,M) = " + vec_to_string(r.ext_vector));
    for (int i = 0; i < n; ++i)
      if (r.hom_vector[i] != 0 && r.ext_vector[i] != 0) {
        rep.fail(cat.names[r.index] + ": supports of Hom(T,M) and Ext^1(T,M) meet at coordinate " +
                 std::to_string(i + 1));
        break;
      }
  }
  return rep;
}

std::set<int> predecessor_set(const Catalog& cat, const TiltingModule& T, const ARComponent& comp) {
  if (!comp.complete)
    throw std::invalid_argument("predecessor_set: the component is not completely knitted");
  std::set<int> seeds;
  for (int t : T.idx) {
    IntVec tau = mat_vec(cat.cox.phi, cat.dims[t]);
    if (!is_positive(tau)) continue;  // projective summand, no translate
    int node = comp.find_by_dim(tau);
    if (node < 0)
      throw std::logic_error("predecessor_set: translate " + vec_to_string(tau) + " missing from the component");
    seeds.insert(node);
  }
  std::set<int> out;
  for (int nd : predecessor_closure(comp, seeds)) {
    int ci = cat.index_of_dim(comp.nodes[nd].dim);
    if (ci < 0)
      throw std::logic_error("predecessor_set: component node " + vec_to_string(comp.nodes[nd].dim) +
                             " missing from the catalog");
    out.insert(ci);
  }
  return out;
}

CheckReport check_torsion_lemmas(const Catalog& cat, const ClusterSet& cs, const ARComponent& comp) {
  CheckReport rep;
  rep.property = "torsion-lemmas";
  std::set<int> pred = predecessor_set(cat, cs.T, comp);
  for (int f : cs.cls.torsion_free) {
    ++rep.checked;
    if (!pred.count(f)) rep.fail(cat.names[f] + ": torsion-free module outside the predecessor set");
  }
  for (int m : cs.cls.mixed) {
    ++rep.checked;
    if (!pred.count(m)) rep.fail(cat.names[m] + ": mixed module outside the predecessor set");
    TorsionTriple tt = explicit_triple(cat, cs.T, m);
    const ClusterRecord& r = cs.records[m];
    if (tt.parts.sub.dim_vec() != r.dim_torsion)
      rep.fail(cat.names[m] + ": explicit trace dimensions disagree with the record");
    if (tt.torsion_summands != r.torsion_summands)
      rep.fail(cat.names[m] + ": torsion summand lists disagree between routes");
    if (tt.free_summands != r.free_summands)
      rep.fail(cat.names[m] + ": torsion-free summand lists disagree between routes");
    for (int s : tt.torsion_summands)
      if (!pred.count(s)) rep.fail(cat.names[m] + ": torsion summand " + cat.names[s] + " outside the predecessor set");
    for (int s : tt.free_summands)
      if (!pred.count(s)) rep.fail(cat.names[m] + ": torsion-free summand " + cat.names[s] + " outside the predecessor set");
    if (hom_dim(tt.parts.quot, tt.parts.sub) != 0) rep.fail(cat.names[m] + ": Hom(M/tM, tM) is nonzero");
    if (ext1_dim(tt.parts.sub, tt.parts.sub) != 0) rep.fail(cat.names[m] + ": tM has self-extensions");
    if (ext1_dim(tt.parts.quot, tt.parts.quot) != 0) rep.fail(cat.names[m] + ": M/tM has self-extensions");
  }
  rep.note("predecessor set size " + std::to_string(pred.size()));
  return rep;
}

CheckReport check_endo_formula(const Catalog& cat, const ClusterSet& cs) {
  CheckReport rep;
  rep.property = "endo-formula";
  for (int m : cs.cls.mixed) {
    ++rep.checked;
    const ClusterRecord& r = cs.records[m];
    if (quadratic(cat.euler, r.dim_torsion) != r.end_torsion)
      rep.fail(cat.names[m] + ": q_A(dim tM) != dim End(tM)");
    if (quadratic(cat.euler, r.dim_free) != r.end_free)
      rep.fail(cat.names[m] + ": q_A(dim M/tM) != dim End(M/tM)");
    Int expect = 2 * (r.end_torsion + r.end_free) - 1;
    if (r.qb_value != expect)
      rep.fail(cat.names[m] + ": q_B value " + std::to_string(r.qb_value) + " differs from 2(End sums)-1 = " +
               std::to_string(expect));
    if (r.qb_value % 2 == 0 || r.qb_value < 3)
      rep.fail(cat.names[m] + ": q_B value " + std::to_string(r.qb_value) + " is not an odd integer >= 3");
    bool both_indec = r.torsion_summands.size() == 1 && r.free_summands.size() == 1;
    if ((r.qb_value == 3) != both_indec)
      rep.fail(cat.names[m] + ": q_B value 3 does not match both parts being indecomposable");
  }
  return rep;
}

CheckReport check_value_law(const Catalog& cat, const ClusterSet& cs) {
  CheckReport rep;
  rep.property = "value-law";
  for (const ClusterRecord& r : cs.records) {
    ++rep.checked;
    if (r.tag == Tag::Mixed) {
      if (r.qb_value % 2 == 0 || r.qb_value < 3)
        rep.fail(cat.names[r.index] + ": mixed module with q_B value " + std::to_string(r.qb_value));
    } else if (r.qb_value != 1) {
      rep.fail(cat.names[r.index] + ": " + tag_name(r.tag) + " module with q_B value " + std::to_string(r.qb_value));
    }
  }
  return rep;
}

CheckReport check_dim_injectivity(const Catalog& cat, const ClusterSet& cs) {
  CheckReport rep;
  rep.property = "dim-injectivity";
  std::map<IntVec, int> seen;
  for (const ClusterRecord& r : cs.records) {
    ++rep.checked;
    auto [it, fresh] = seen.insert({r.abs_image, r.index});
    if (!fresh)
      rep.fail("abs g collision: " + cat.names[it->second] + " and " + cat.names[r.index] + " both map to " +
               vec_to_string(r.abs_image));
    if (form_eval(cs.qb, r.g_image) != quadratic(cat.euler, cat.dims[r.index]))
      rep.fail(cat.names[r.index] + ": q_B(g x) != q_A(x)");
  }
  rep.note(std::to_string(seen.size()) + " distinct cluster dimension vectors");
  return rep;
}

CheckReport check_brick_proxy(const Catalog& cat, const ClusterSet& cs) {
  CheckReport rep;
  rep.property = "brick-proxy";
  for (int m : cs.cls.mixed) {
    ++rep.checked;
    const ClusterRecord& r = cs.records[m];
    if (cat.hom[m][m] != 1) rep.fail(cat.names[m] + ": mixed module is not a brick");
    Int cross = 0;
    for (int i : r.torsion_summands)
      for (int j : r.free_summands) cross += cat.hom[i][j];
    if (cross != 0) rep.fail(cat.names[m] + ": Hom(tM, M/tM) is nonzero");
  }
  rep.note("endomorphism rings are checked on the hereditary side only");
  return rep;
}

std::vector<MixedPair> mixed_pairs(const Catalog& cat, const ClusterSet& cs) {
  std::vector<MixedPair> out;
  for (int x : cs.cls.torsion_free)
    for (int y : cs.cls.torsion)
      if (cat.ext[x][y] != 0) out.push_back({x, y, cat.ext[x][y]});
  return out;
}

namespace {

PairCheckResult analyze_pair(const Catalog& cat, int x, int y) {
  PairCheckResult res;
  auto bad = [&](const std::string& msg) {
    res.ok = false;
    res.failure = "(" + cat.names[x] + ", " + cat.names[y] + "): " + msg;
  };
  if (cat.ext[x][y] != 1) {
    bad("extension space has dimension " + std::to_string(cat.ext[x][y]));
    return res;
  }
  if (cat.hom[x][y] != 0 || cat.hom[y][x] != 0 || cat.ext[y][x] != 0) {
    bad("pair is not orthogonal exceptional");
    return res;
  }
  ExtSpace es = ext_space(cat.reps[x], cat.reps[y]);
  if (es.dim() != 1) {
    bad("cocycle space dimension disagrees with the ext table");
    return res;
  }
  Representation mid = build_extension(cat.reps[x], cat.reps[y], {Rat(1)});
  std::vector<int> parts = decompose(cat, mid);
  if (parts.size() != 1) {
    bad("middle term of the non-split extension decomposes");
    return res;
  }
  int e = parts[0];
  if (cat.hom[e][e] != 1) bad("middle term is not a brick");
  if (cat.ext[x][e] != 0) bad("Ext^1(X, middle) is nonzero");
  if (cat.ext[e][y] != 0) bad("Ext^1(middle, Y) is nonzero");
  return res;
}

}  // namespace

CheckReport check_mixed_pairs(const Catalog& cat, const ClusterSet& cs,
                              std::map<std::pair<int, int>, PairCheckResult>* cache) {
  CheckReport rep;
  rep.property = "mixed-pairs";
  std::vector<MixedPair> pairs = mixed_pairs(cat, cs);
  for (const MixedPair& p : pairs) {
    ++rep.checked;
    PairCheckResult res;
    if (cache) {
      auto it = cache->find({p.x, p.y});
      if (it != cache->end()) {
        res = it->second;
      } else {
        res = analyze_pair(cat, p.x, p.y);
        (*cache)[{p.x, p.y}] = res;
      }
    } else {
      res = analyze_pair(cat, p.x, p.y);
    }
    if (!res.ok) rep.fail(res.failure);
  }
  rep.note(std::to_string(pairs.size()) + " mixed pairs");
  return rep;
}

ExchangeForm exchange_form(const Catalog& cat, const ClusterSet& cs, const ARComponent& comp) {
  ExchangeForm ef;
  std::set<int> pred = predecessor_set(cat, cs.T, comp);
  for (int f : cs.cls.torsion_free) ef.basis.push_back(f);
  ef.free_count = static_cast<int>(ef.basis.size());
  for (int g : cs.cls.torsion)
    if (pred.count(g)) ef.basis.push_back(g);
  int s = static_cast<int>(ef.basis.size());
  IntMat m = int_identity(s);
  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < s; ++j) {
      bool i_free = i < ef.free_count, j_free = j < ef.free_count;
      if (i_free == j_free)
        m[i][j] = cat.hom[ef.basis[i]][ef.basis[j]] + cat.hom[ef.basis[j]][ef.basis[i]];
      else
        m[i][j] = -cat.ext[ef.basis[i]][ef.basis[j]];
    }
  ef.form = unit_form_from_matrix(m);
  std::vector<std::string> labels;
  for (int b : ef.basis) labels.push_back(cat.names[b]);
  ef.graph = form_to_bigraph(ef.form, labels);
  return ef;
}

CheckReport check_root_correspondence(const Catalog& cat, const ClusterSet& cs, const ARComponent& comp) {
  CheckReport rep;
  rep.property = "root-correspondence";
  ExchangeForm ef = exchange_form(cat, cs, comp);
  RootSet roots;
  try {
    roots = enumerate_positive_roots(ef.form, 6);
  } catch (const RootCapExceeded&) {
    roots = enumerate_positive_roots(ef.form, 12);
  }
  std::set<IntVec> nonsimple;
  for (const IntVec& r : roots.roots)
    if (vec_sum(r) >= 2) nonsimple.insert(r);

  std::map<int, int> pos;  // catalog index -> basis slot
  for (size_t i = 0; i < ef.basis.size(); ++i) pos[ef.basis[i]] = static_cast<int>(i);

  std::set<IntVec> decoded;
  for (int m : cs.cls.mixed) {
    ++rep.checked;
    const ClusterRecord& r = cs.records[m];
    IntVec coord(ef.basis.size(), 0);
    bool ok = true;
    for (int s : r.free_summands) {
      auto it = pos.find(s);
      if (it == pos.end() || it->second >= ef.free_count) {
        rep.fail(cat.names[m] + ": torsion-free summand " + cat.names[s] + " is not a basis vertex");
        ok = false;
        break;
      }
      ++coord[it->second];
    }
    if (ok)
      for (int s : r.torsion_summands) {
        auto it = pos.find(s);
        if (it == pos.end() || it->second < ef.free_count) {
          rep.fail(cat.names[m] + ": torsion summand " + cat.names[s] + " is not a basis vertex");
          ok = false;
          break;
        }
        ++coord[it->second];
      }
    if (!ok) continue;
    if (!nonsimple.count(coord)) {
      rep.fail(cat.names[m] + ": coordinate vector " + vec_to_string(coord) + " is not a positive non-simple root");
      continue;
    }
    if (!decoded.insert(coord).second)
      rep.fail(cat.names[m] + ": coordinate vector " + vec_to_string(coord) + " already taken");
  }
  if (decoded.size() != nonsimple.size() || rep.checked != static_cast<long>(nonsimple.size()))
    rep.fail("mixed module count " + std::to_string(rep.checked) + " differs from the " +
             std::to_string(nonsimple.size()) + " positive non-simple roots");
  rep.note(std::to_string(nonsimple.size()) + " positive non-simple roots on a basis of " +
           std::to_string(ef.basis.size()));
  return rep;
}

CheckReport check_abs_fibers(const UnitForm& q, Int cap) {
  CheckReport rep;
  rep.property = "abs-fibers";
  if (!is_positive_definite(q)) {
    rep.fail("form is not positive definite");
    return rep;
  }
  RootSet rs = enumerate_all_roots(q, cap);
  rep.checked = static_cast<long>(rs.roots.size());
  FiberReport fr = abs_fiber_check(rs.roots);
  if (!fr.ok)
    rep.fail("abs collision between roots " + vec_to_string(fr.x) + " and " + vec_to_string(fr.y));
  rep.note(std::to_string(rs.roots.size()) + " roots enumerated");
  return rep;
}

Representation rep_from_name(const Quiver& q, const std::string& name) {
  auto open = name.find('(');
  if (open == std::string::npos || name.back() != ')' || open < 1)
    throw std::invalid_argument("rep_from_name: expected P(v), I(v) or S(v), got " + name);
  std::string kind = name.substr(0, open);
  std::string label = name.substr(open + 1, name.size() - open - 2);
  int v = q.vertex_index(label);
  if (v < 0) throw std::invalid_argument("rep_from_name: unknown vertex " + label);
  if (kind == "P") return projective_rep(q, v);
  if (kind == "I") return injective_rep(q, v);
  if (kind == "S") return simple_rep(q, v);
  throw std::invalid_argument("rep_from_name: unknown module family " + kind);
}

namespace {

bool is_kronecker_shape(const Quiver& q) {
  return q.n() == 2 && q.arrows.size() == 2 && q.arrows[0].src == q.arrows[1].src &&
         q.arrows[0].tgt == q.arrows[1].tgt;
}

// Regular family over the double arrow: both spaces k^m, one arrow the
// identity and the other a Jordan block J_m(lambda); "inf" swaps the roles.
Representation kronecker_regular(const Quiver& q, int m, const std::string& lambda) {
  Representation r;
  r.Q = q;
  r.dim = {m, m};
  QMat id = QMat::identity(m);
  QMat jordan(m, m);
  Rat eigen = lambda == "1" ? Rat(1) : Rat(0);
  for (int i = 0; i < m; ++i) {
    jordan.at(i, i) = eigen;
    if (i + 1 < m) jordan.at(i, i + 1) = Rat(1);
  }
  if (lambda == "inf") {
    r.mats = {jordan, id};
  } else {
    r.mats = {id, jordan};
  }
  check_rep(r);
  return r;
}

}  // namespace

RegularWitness find_regular_witness(const Quiver& q, const std::string& preproj_name,
                                    const std::string& preinj_name, Int bound) {
  EulerForm f = euler_matrix(q);
  UnitForm uq = euler_unit_form(f);
  if (is_positive_definite(uq))
    throw std::invalid_argument("find_regular_witness: the quiver is representation finite, it has no regular modules");
  if (!is_positive_semidefinite(uq))
    throw std::invalid_argument("find_regular_witness: the quiver is wild, the bounded search only covers tame quivers");
  IntMat rad = radical_basis(uq);
  if (rad.size() != 1 || !is_positive(rad[0]))
    throw std::invalid_argument("find_regular_witness: expected a tame quiver with one-dimensional positive radical");
  Coxeter cox = coxeter_matrix(f);

  Representation t0 = rep_from_name(q, preproj_name);
  Representation tinf = rep_from_name(q, preinj_name);
  if (!dim_is_preprojective(cox, t0.dim_vec()))
    throw std::invalid_argument("find_regular_witness: " + preproj_name + " is not preprojective");
  if (!dim_is_preinjective(cox, tinf.dim_vec()))
    throw std::invalid_argument("find_regular_witness: " + preinj_name + " is not preinjective");

  RegularWitness w;
  Int e01 = ext1_dim(t0, tinf), e10 = ext1_dim(tinf, t0);
  if (e01 == 0 && e10 == 0)
    w.notes.push_back("T = " + preproj_name + " + " + preinj_name + " is rigid");
  else
    w.notes.push_back("T = " + preproj_name + " + " + preinj_name + " is not a tilting module: Ext^1(" +
                      preinj_name + ", " + preproj_name + ") has dimension " + std::to_string(e10) +
                      ", Ext^1(" + preproj_name + ", " + preinj_name + ") has dimension " + std::to_string(e01));
  if (!is_kronecker_shape(q)) {
    w.inconclusive = true;
    w.notes.push_back("regular family construction is only implemented for the double-arrow quiver");
    return w;
  }

  Int step = vec_sum(rad[0]);
  for (Int m = 1; m * step <= bound; ++m) {
    for (const std::string lambda : {"0", "1", "inf"}) {
      Representation r = kronecker_regular(q, static_cast<int>(m), lambda);
      IntVec d = r.dim_vec();
      if (dim_is_preprojective(cox, d) || dim_is_preinjective(cox, d)) continue;
      if (end_dim(r) != m) continue;  // Jordan commutant sanity: local ring of dimension m
      Int h0 = hom_dim(t0, r), hinf = hom_dim(tinf, r);
      Int x0 = ext1_dim(t0, r), xinf = ext1_dim(tinf, r);
      if (h0 + hinf > 0 && x0 + xinf > 0) {
        w.found = true;
        w.dim = d;
        w.description = "regular family member at parameter " + lambda + ", tube depth " + std::to_string(m);
        w.hom_total = h0 + hinf;
        w.ext_total = x0 + xinf;
        w.notes.push_back("dim Hom(" + preproj_name + ", R) = " + std::to_string(h0) + ", dim Ext^1(" +
                          preinj_name + ", R) = " + std::to_string(xinf));
        return w;
      }
    }
  }
  w.inconclusive = true;
  w.notes.push_back("no witness within dimension bound " + std::to_string(bound));
  return w;
}

PatternMatch find_value_pattern(const Quiver& diagram, const std::vector<IntVec>& vectors,
                                const std::vector<Int>& values) {
  if (vectors.size() != values.size())
    throw std::invalid_argument("find_value_pattern: vectors and values differ in length");
  int n = diagram.n();
  std::vector<std::pair<IntVec, Int>> target;
  for (size_t i = 0; i < vectors.size(); ++i) target.push_back({vectors[i], values[i]});
  std::sort(target.begin(), target.end());

  PatternMatch pm;
  for (const Quiver& q : all_orientations(diagram)) {
    Catalog cat = build_catalog(q);
    for (const TiltingModule& T : enumerate_tilting(cat)) {
      ClusterSet cs = cluster_dim_vectors(cat, T);
      if (cs.records.size() != target.size()) continue;
      std::vector<std::pair<IntVec, Int>> got;
      for (const ClusterRecord& r : cs.records) got.push_back({r.abs_image, r.qb_value});
      std::vector<int> sigma(n);
      std::iota(sigma.begin(), sigma.end(), 0);
      do {
        std::vector<std::pair<IntVec, Int>> mapped;
        for (const auto& [vec, val] : got) {
          IntVec w(n, 0);
          for (int i = 0; i < n; ++i) w[sigma[i]] = vec[i];
          mapped.push_back({w, val});
        }
        std::sort(mapped.begin(), mapped.end());
        if (mapped == target) {
          pm.found = true;
          pm.quiver = q;
          for (int t : T.idx) pm.summands.push_back(cat.names[t]);
          pm.perm = sigma;
          return pm;
        }
      } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
  }
  return pm;
}

}  // namespace qcw

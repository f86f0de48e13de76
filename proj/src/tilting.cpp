#include "qcw/tilting.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "qcw/qmat.hpp"

namespace qcw {

namespace {

bool ext_orthogonal(const Catalog& cat, int i, int j) {
  return cat.ext[i][j] == 0 && cat.ext[j][i] == 0;
}

Int det_of_dims(const Catalog& cat, const std::vector<int>& idx) {
  IntMat rows;
  for (int i : idx) rows.push_back(cat.dims[i]);
  QMat m = QMat::from_int(rows);
  Rat d = determinant(m);
  if (!is_integer(d)) throw std::logic_error("det_of_dims: non-integral determinant");
  return to_ll(d);
}

}  // namespace

bool is_tilting(const Catalog& cat, const std::vector<int>& idx) {
  int n = cat.Q.n();
  if (static_cast<int>(idx.size()) != n) return false;
  std::vector<int> sorted = idx;
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 0; i + 1 < sorted.size(); ++i)
    if (sorted[i] == sorted[i + 1]) return false;
  for (int i : idx) {
    if (i < 0 || i >= cat.size()) return false;
    if (cat.ext[i][i] != 0) return false;
  }
  for (size_t a = 0; a < idx.size(); ++a)
    for (size_t b = a + 1; b < idx.size(); ++b)
      if (!ext_orthogonal(cat, idx[a], idx[b])) return false;
  return std::llabs(det_of_dims(cat, idx)) == 1;
}

std::vector<TiltingModule> enumerate_tilting(const Catalog& cat) {
  int n = cat.Q.n();
  std::vector<TiltingModule> out;
  std::vector<int> chosen;
  auto extend = [&](auto&& self, int from) -> void {
    if (static_cast<int>(chosen.size()) == n) {
      if (std::llabs(det_of_dims(cat, chosen)) == 1)
        out.push_back(TiltingModule{chosen});
      return;
    }
    int need = n - static_cast<int>(chosen.size());
    for (int c = from; c + need <= cat.size(); ++c) {
      if (cat.ext[c][c] != 0) continue;
      bool ok = true;
      for (int p : chosen)
        if (!ext_orthogonal(cat, p, c)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(c);
      self(self, c + 1);
      chosen.pop_back();
    }
  };
  extend(extend, 0);
  return out;
}

TiltingModule tilting_from_names(const Catalog& cat, const std::vector<std::string>& names) {
  TiltingModule T;
  for (const std::string& nm : names) {
    int i = cat.index_of_name(nm);
    if (i < 0) throw std::invalid_argument("tilting_from_names: no indecomposable named " + nm);
    T.idx.push_back(i);
  }
  if (!is_tilting(cat, T.idx)) {
    std::string all;
    for (const std::string& nm : names) all += (all.empty() ? "" : " + ") + nm;
    throw std::invalid_argument("tilting_from_names: " + all + " is not a tilting module");
  }
  return T;
}

std::string tag_name(Tag t) {
  switch (t) {
    case Tag::TorsionFree: return "torsion-free";
    case Tag::Mixed: return "mixed";
    case Tag::Torsion: return "torsion";
  }
  return "?";
}

TorsionClassification classify_torsion(const Catalog& cat, const TiltingModule& T) {
  TorsionClassification cls;
  for (int m = 0; m < cat.size(); ++m) {
    Int hom = 0, ext = 0;
    for (int t : T.idx) {
      hom += cat.hom[t][m];
      ext += cat.ext[t][m];
    }
    if (hom == 0 && ext == 0)
      throw std::logic_error("classify_torsion: Hom(T,-) and Ext^1(T,-) both vanish on " + cat.names[m]);
    Tag tag = hom == 0 ? Tag::TorsionFree : (ext == 0 ? Tag::Torsion : Tag::Mixed);
    cls.tags.push_back(tag);
    (tag == Tag::TorsionFree ? cls.torsion_free : tag == Tag::Mixed ? cls.mixed : cls.torsion).push_back(m);
  }
  return cls;
}

BaseChange base_change(const Catalog& cat, const TiltingModule& T) {
  int n = cat.Q.n();
  BaseChange bc;
  bc.g = int_zero(n, n);
  for (int r = 0; r < n; ++r) {
    const IntVec& t = cat.dims[T.idx[r]];
    for (int c = 0; c < n; ++c) {
      Int s = 0;
      for (int k = 0; k < n; ++k) s += t[k] * cat.euler.E[k][c];
      bc.g[r][c] = s;
    }
  }
  QMat ginv = inverse(QMat::from_int(bc.g));
  bc.ginv = to_intmat(ginv);  // throws if the inverse were fractional
  // Defining property: the image of dim T_i is dim Hom(T, T_i).
  for (int r = 0; r < n; ++r) {
    IntVec expect(n, 0);
    for (int c = 0; c < n; ++c) expect[c] = cat.hom[T.idx[c]][T.idx[r]];
    if (mat_vec(bc.g, cat.dims[T.idx[r]]) != expect)
      throw std::logic_error("base_change: g(dim T_i) != dim Hom(T, T_i) at summand " + cat.names[T.idx[r]]);
  }
  return bc;
}

IntVec apply_base_change(const BaseChange& bc, const IntVec& x) { return mat_vec(bc.g, x); }

UnitForm pushforward_form(const Catalog& cat, const BaseChange& bc) {
  IntMat m = int_mul(int_mul(int_transpose(bc.ginv), cat.euler.E), bc.ginv);
  return unit_form_from_matrix(m);
}

}  // namespace qcw

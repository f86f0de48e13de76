#pragma once

#include <stdexcept>
#include <vector>

#include "qcw/euler.hpp"
#include "qcw/qmat.hpp"
#include "qcw/quiver.hpp"

namespace qcw {

// Finite dimensional representation of an acyclic quiver over the
// rationals: a vector space per vertex and a matrix per arrow, acting
// target-space <- source-space on column vectors.
struct Representation {
  Quiver Q;
  std::vector<int> dim;    // per vertex
  std::vector<QMat> mats;  // per arrow: dim[tgt] x dim[src]

  IntVec dim_vec() const;
  Int total_dim() const;
};

bool same_quiver(const Quiver& a, const Quiver& b);
void check_rep(const Representation& r);  // shape sanity, throws std::logic_error

Representation zero_rep(const Quiver& q);
Representation simple_rep(const Quiver& q, int v);
// Indecomposable projective P(v): basis at w = paths v ~> w, arrows act by
// path composition.
Representation projective_rep(const Quiver& q, int v);
// Indecomposable injective I(v): dual of the paths into v.
Representation injective_rep(const Quiver& q, int v);
Representation direct_sum(const Representation& a, const Representation& b);

// Intertwiner space Hom(X, Y): kernel of the boundary map
//   delta : (+)_v Hom(X_v, Y_v) -> (+)_a Hom(X_s(a), Y_t(a)),
//   (f_v) |-> (f_t X_a - Y_a f_s).
// Flattening convention: vertex blocks in vertex order, arrow blocks in
// arrow order, each matrix row-major.
QMat hom_boundary(const Representation& X, const Representation& Y);
QMat hom_basis(const Representation& X, const Representation& Y);  // columns = flattened maps
int hom_dim(const Representation& X, const Representation& Y);
int end_dim(const Representation& X);
// dim coker(delta); for the (hereditary) path algebra this is
// hom_dim(X,Y) - <dim X, dim Y>.
int ext1_dim(const Representation& X, const Representation& Y);
std::vector<QMat> unflatten_hom(const Representation& X, const Representation& Y, const QMat& flat, int col);

// Submodule given by per-vertex subspaces (columns), with the quotient and
// the structure maps: incl (M <- sub), proj (quot <- M) and lift
// (M <- quot), a linear section with proj * lift = id.
struct SubQuot {
  Representation sub, quot;
  std::vector<QMat> incl, proj, lift;
};
SubQuot sub_quotient(const Representation& M, std::vector<QMat> subspace_cols);

// Trace of add(T) in M: the largest submodule generated by all images of
// maps from the summands of T.
SubQuot torsion_submodule(const std::vector<Representation>& T_summands, const Representation& M);

struct RootNotConstructible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Indecomposable representation with the given positive real root as
// dimension vector, built by the sink-reflection schedule: reflect the
// dimension vector down to a simple root, then unwind with source
// reflection functors. Throws RootNotConstructible when the schedule does
// not reach a simple root (e.g. tau-periodic regular roots).
Representation build_root_rep(const Quiver& q, const IntVec& root);

// Ext^1(X, Y) = coker(delta) presented on a deterministic basis: the
// elementary cocycles e_r at the non-pivot rows of the column echelon form
// of delta.
struct ExtSpace {
  QMat delta;
  std::vector<int> basis_rows;
  int dim() const { return static_cast<int>(basis_rows.size()); }
};
ExtSpace ext_space(const Representation& X, const Representation& Y);

// Class of the canonical sequence 0 -> tM -> M -> M/tM -> 0 in
// Ext^1(M/tM, tM), as coordinates in the ExtSpace basis.
struct ExtClassRep {
  Representation sub, quot;
  std::vector<Rat> coords;
};
ExtClassRep ext_class(const std::vector<Representation>& T_summands, const Representation& M);

// Middle term of the extension of X by Y with the given class coordinates:
// E_v = Y_v (+) X_v, E_a = [[Y_a, eps_a], [0, X_a]].
Representation build_extension(const Representation& X, const Representation& Y, const std::vector<Rat>& coords);

}  // namespace qcw

#pragma once

#include "qcw/intvec.hpp"
#include "qcw/quiver.hpp"

namespace qcw {

// Euler form of the path algebra: <x,y> = x^T E y with E = I - C where
// C[i][j] counts arrows i -> j. For hereditary algebras
// <dim M, dim N> = hom(M,N) - ext1(M,N).
struct EulerForm {
  IntMat E;
  IntMat arrow_count;
  int n() const { return static_cast<int>(E.size()); }
};

EulerForm euler_matrix(const Quiver& q);
Int bilinear(const EulerForm& f, const IntVec& x, const IntVec& y);
Int quadratic(const EulerForm& f, const IntVec& x);
// Symmetrized pairing (x|y) = <x,y> + <y,x> = q(x+y) - q(x) - q(y).
Int sym_pair(const EulerForm& f, const IntVec& x, const IntVec& y);

// Coxeter transformation Phi = -E^{-T}... stored with its inverse; both are
// integral because E is unimodular for an acyclic quiver. Satisfies
// <x,y> = -<y, Phi x> and dim tau M = Phi dim M for non-projective
// indecomposable M.
struct Coxeter {
  IntMat phi;
  IntMat phi_inv;
};

Coxeter coxeter_matrix(const EulerForm& f);

// E^{-1}; entry [i][j] is the number of paths i ~> j.
IntMat euler_inverse(const EulerForm& f);

}  // namespace qcw

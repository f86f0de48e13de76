#include "qcw/euler.hpp"

#include "qcw/qmat.hpp"

namespace qcw {

EulerForm euler_matrix(const Quiver& q) {
  EulerForm f;
  f.arrow_count = int_zero(q.n(), q.n());
  for (const Arrow& a : q.arrows) ++f.arrow_count[a.src][a.tgt];
  f.E = int_identity(q.n());
  for (int i = 0; i < q.n(); ++i)
    for (int j = 0; j < q.n(); ++j) f.E[i][j] -= f.arrow_count[i][j];
  return f;
}

Int bilinear(const EulerForm& f, const IntVec& x, const IntVec& y) { return dot(x, mat_vec(f.E, y)); }

Int quadratic(const EulerForm& f, const IntVec& x) { return bilinear(f, x, x); }

Int sym_pair(const EulerForm& f, const IntVec& x, const IntVec& y) {
  return bilinear(f, x, y) + bilinear(f, y, x);
}

IntMat euler_inverse(const EulerForm& f) { return to_intmat(inverse(QMat::from_int(f.E))); }

Coxeter coxeter_matrix(const EulerForm& f) {
  QMat e = QMat::from_int(f.E);
  QMat einv = inverse(e);
  QMat phi = Rat(-1) * (einv * transpose(e));
  QMat phi_inv = Rat(-1) * (inverse(transpose(e)) * e);
  return {to_intmat(phi), to_intmat(phi_inv)};
}

}  // namespace qcw

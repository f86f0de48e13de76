#pragma once

#include <string>
#include <vector>

#include "qcw/euler.hpp"
#include "qcw/forms.hpp"
#include "qcw/rep.hpp"

namespace qcw {

// Complete list of indecomposable representations of a representation
// finite (Dynkin) quiver, one per positive root, with cached hom/ext data.
// Order: ascending (total dimension, lexicographic dimension vector).
struct Catalog {
  Quiver Q;
  EulerForm euler;
  Coxeter cox;
  std::vector<IntVec> dims;
  std::vector<std::string> names;
  std::vector<Representation> reps;
  IntMat hom, ext;                  // [i][j] = hom_dim / ext1_dim (reps[i], reps[j])
  std::vector<std::vector<QMat>> hom_bases;

  int size() const { return static_cast<int>(dims.size()); }
  int index_of_dim(const IntVec& d) const;  // -1 if absent
  int index_of_name(const std::string& n) const;
};

// Throws std::invalid_argument if the Euler form is not positive definite
// (the quiver is not representation finite).
Catalog build_catalog(const Quiver& q);

// Direct summand decomposition by brick peeling: find a catalog member X
// with maps f: X -> M, g: M -> X composing to a nonzero scalar, split off
// im(fg), recurse on the kernel. Returns sorted catalog indices with
// multiplicity. Throws std::runtime_error if peeling gets stuck.
std::vector<int> decompose(const Catalog& cat, const Representation& M);

bool is_isomorphic(const Catalog& cat, const Representation& A, const Representation& B);

}  // namespace qcw

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcw/euler.hpp"
#include "qcw/intvec.hpp"

namespace qcw {

// Integral quadratic form q(x) = x^T M x with unit diagonal. M need not be
// symmetric (the Euler matrix is not); only M + M^T matters for values.
struct UnitForm {
  IntMat M;
  int n() const { return static_cast<int>(M.size()); }
};

UnitForm unit_form_from_matrix(IntMat m);  // validates unit diagonal
UnitForm euler_unit_form(const EulerForm& f);
Int form_eval(const UnitForm& q, const IntVec& x);
// Polarization (x|y) = q(x+y) - q(x) - q(y).
Int form_polar(const UnitForm& q, const IntVec& x, const IntVec& y);

bool is_positive_definite(const UnitForm& q);
bool is_positive_semidefinite(const UnitForm& q);
// Basis of the radical {x : (x|-) = 0} of the symmetrized form.
IntMat radical_basis(const UnitForm& q);

struct FormNotWeaklyPositive : std::runtime_error {
  IntVec witness;  // positive vector with q <= 0
  FormNotWeaklyPositive(const std::string& w, IntVec x) : std::runtime_error(w), witness(std::move(x)) {}
};
struct RootCapExceeded : std::runtime_error {
  IntVec witness;  // root with a coordinate beyond the cap
  RootCapExceeded(const std::string& w, IntVec x) : std::runtime_error(w), witness(std::move(x)) {}
};

struct RootSet {
  std::vector<IntVec> roots;  // sorted lexicographically
  Int cap = 0;
};

// All positive roots (x > 0, q(x) = 1), found by a layered breadth-first
// search upward from the simple roots: layer L+1 candidates are
// root-at-layer-L plus a unit vector. For a weakly positive form every
// positive root descends to a simple root through positive roots, so the
// first empty layer certifies completeness. The cap bounds coordinates as a
// guard: a rejected beyond-cap root raises RootCapExceeded, and a touched
// positive vector with q(x) <= 0 raises FormNotWeaklyPositive.
RootSet enumerate_positive_roots(const UnitForm& q, Int cap = 6);

// All roots of either sign of a positive definite form (same search run in
// the signed lattice from the +-simple roots). Positive definiteness makes
// the root set finite, so the cap is only a safety net.
RootSet enumerate_all_roots(const UnitForm& q, Int cap = 1000000);

IntVec abs_vector(const IntVec& x);
IntVec apply_linear(const IntMat& a, const IntVec& x);

// Scans the root list for x != +-y with abs x = abs y. ok == true means no
// such pair; otherwise x,y hold a counterexample.
struct FiberReport {
  bool ok = true;
  IntVec x, y;
};
FiberReport abs_fiber_check(const std::vector<IntVec>& roots);

// Bigraph of a unit form: vertices plus solid edges (negative symmetrized
// cross coefficient) and dotted edges (positive), with multiplicities.
struct Bigraph {
  std::vector<std::string> labels;
  IntMat solid, dotted;  // symmetric, zero diagonal
  int n() const { return static_cast<int>(labels.size()); }
};

Bigraph form_to_bigraph(const UnitForm& q, std::vector<std::string> labels);
UnitForm bigraph_to_form(const Bigraph& b);

}  // namespace qcw

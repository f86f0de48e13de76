#pragma once

#include <string>
#include <vector>

#include "qcw/catalog.hpp"
#include "qcw/forms.hpp"
#include "qcw/intvec.hpp"

namespace qcw {

// Basic tilting module T = T_1 (+) ... (+) T_n given by the catalog
// indices of its pairwise non-isomorphic indecomposable summands. The
// summand order fixes the basis of the target Grothendieck group for the
// base change map below.
struct TiltingModule {
  std::vector<int> idx;
  int rank() const { return static_cast<int>(idx.size()); }
};

// n pairwise distinct summands with Ext^1 vanishing in both directions on
// every pair. For a hereditary algebra this forces the dimension vectors to
// be a basis of the Grothendieck group; is_tilting checks |det| = 1 anyway.
bool is_tilting(const Catalog& cat, const std::vector<int>& idx);

// Every basic tilting module, by backtracking over the catalog in index
// order. Summand lists come out sorted.
std::vector<TiltingModule> enumerate_tilting(const Catalog& cat);

// Construct a tilting module from summand names, e.g. {"P(1)", "I(3)"},
// keeping the given order. Throws std::invalid_argument on unknown names or
// when the result is not tilting.
TiltingModule tilting_from_names(const Catalog& cat, const std::vector<std::string>& names);

// Torsion pair of a tilting module, as a tag per indecomposable:
//   TorsionFree: Hom(T,M) = 0 (so Ext^1(T,M) != 0),
//   Torsion:     Ext^1(T,M) = 0 (and Hom(T,M) != 0),
//   Mixed:       both Hom(T,M) and Ext^1(T,M) nonzero.
enum class Tag { TorsionFree, Mixed, Torsion };

std::string tag_name(Tag t);

struct TorsionClassification {
  std::vector<Tag> tags;             // per catalog index
  std::vector<int> torsion_free;     // catalog indices, ascending
  std::vector<int> mixed;
  std::vector<int> torsion;
};

TorsionClassification classify_torsion(const Catalog& cat, const TiltingModule& T);

// Base change g : K_0(A) -> K_0(B), B = End(T), determined by
// g(dim T_i) = dim Hom(T, T_i). On all of K_0 this is x |-> (<dim T_i, x>)_i,
// so the matrix rows are (dim T_i)^T E. Unimodular; the integral inverse is
// kept alongside.
struct BaseChange {
  IntMat g;
  IntMat ginv;
};

BaseChange base_change(const Catalog& cat, const TiltingModule& T);

IntVec apply_base_change(const BaseChange& bc, const IntVec& x);

// Euler form of B pushed through g: matrix g^{-T} E g^{-1}, so that
// q_B(g(x)) = q_A(x). Integral with unit diagonal.
UnitForm pushforward_form(const Catalog& cat, const BaseChange& bc);

}  // namespace qcw

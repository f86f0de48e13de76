#pragma once

#include <string>
#include <vector>

namespace qcw {

// Integer vectors and matrices carry the K-theoretic data: dimension
// vectors, Euler/Coxeter matrices, unit forms and base-change maps.
using Int = long long;
using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;  // row-major, rectangular

IntMat int_identity(int n);
IntMat int_zero(int rows, int cols);
IntMat int_transpose(const IntMat& m);
IntMat int_mul(const IntMat& a, const IntMat& b);
IntVec mat_vec(const IntMat& m, const IntVec& x);
Int dot(const IntVec& a, const IntVec& b);

IntVec vec_add(const IntVec& a, const IntVec& b);
IntVec vec_sub(const IntVec& a, const IntVec& b);
IntVec vec_neg(const IntVec& a);
Int vec_sum(const IntVec& a);
bool is_zero(const IntVec& a);
// All coordinates >= 0 and at least one > 0.
bool is_positive(const IntVec& a);
bool is_nonnegative(const IntVec& a);

// "(1, 0, 2)"
std::string vec_to_string(const IntVec& v);
std::string mat_to_string(const IntMat& m);

}  // namespace qcw

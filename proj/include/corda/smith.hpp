#pragma once
#include <vector>

#include "corda/numeric.hpp"

namespace corda {

using IMat = std::vector<std::vector<Integer>>;

IMat identity_matrix(size_t n);
IMat mat_mul(const IMat& a, const IMat& b);
IMat mat_transpose(const IMat& m);
std::vector<Integer> mat_vec(const IMat& a, const std::vector<Integer>& x);
Integer mat_det(IMat a); // Bareiss, exact

// U * M * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... >= 0.
struct SmithResult {
  IMat u;                    // rows x rows
  IMat v;                    // cols x cols
  std::vector<Integer> diag; // length min(rows, cols)
  size_t rows = 0;
  size_t cols = 0;
  size_t rank = 0; // nonzero diagonal entries
};

SmithResult smith_normal_form(IMat m);

// Invariant factors > 1 of coker(M : Z^cols -> Z^rows) followed by one 0 per
// free summand.
std::vector<Integer> cokernel_invariants(const IMat& m);

} // namespace corda

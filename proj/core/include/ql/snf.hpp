#pragma once

#include "ql/linalg.hpp"

namespace ql {

// Smith normal form with unimodular transforms: left * M * right = diag.
// Diagonal entries are nonnegative, satisfy d1 | d2 | ..., zeros last.
struct SmithForm {
  std::vector<Int> diagonal;
  IntMat left, right;
  IntMat right_inv;  // cached; right * right_inv = identity

  int rank() const {
    int r = 0;
    for (const auto& d : diagonal)
      if (d != 0) ++r;
    return r;
  }
  // Invariant factors > 1 (the cyclic orders of coker M for square M).
  std::vector<Int> invariant_factors() const {
    std::vector<Int> f;
    for (const auto& d : diagonal)
      if (d > 1) f.push_back(d);
    return f;
  }
};

SmithForm smith_normal_form(const IntMat& m);

// Row-style Hermite basis of the subgroup of Z^n generated by the rows.
// Result has full row rank.
IntMat hnf_row_basis(const IntMat& rows);

// Basis (rows) of the saturation (rowspace_Q(m) ∩ Z^n) of the subgroup
// spanned by the rows of m.
IntMat saturation_basis(const IntMat& m);

}  // namespace ql

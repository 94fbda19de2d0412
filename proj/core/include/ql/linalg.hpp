#pragma once

// Exact dense linear algebra: determinants, rational elimination, solving.

#include <optional>

#include "ql/mat.hpp"

namespace ql {

// Determinant of a square integer matrix (fraction-free Bareiss).
Int det(const IntMat& m);

// Determinant over the rationals (Gaussian elimination).
Rat det(const RatMat& m);

// Rank over Q.
int rank(const RatMat& m);

// Inverse of a nonsingular rational matrix; throws std::domain_error if singular.
RatMat inverse(const RatMat& m);

// Solves x^T A = b^T for a row vector x (A square nonsingular).
RatVec solve_left(const RatMat& a, const RatVec& b);

// Solves x^T A = b^T and keeps the solution only if integral.
std::optional<IntVec> solve_left_integral(const RatMat& a, const RatVec& b);

// Rank of a 0/1 matrix over F2 (used for mod-2 independence checks).
int rank_mod2(const std::vector<std::vector<int>>& rows);

}  // namespace ql

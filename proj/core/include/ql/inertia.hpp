#pragma once

#include "ql/lattice.hpp"

namespace ql {

struct Inertia {
  int positive = 0, negative = 0, null = 0;
};

// Exact inertia of a symmetric rational matrix: symmetric elimination with
// rational pivots, symmetric swaps, and 2x2 hyperbolic blocks when every
// remaining diagonal entry vanishes.
Inertia inertia(const RatMat& m);

// (positive index, negative index); throws std::domain_error on a
// degenerate lattice.
std::pair<int, int> signature(const GramLattice& l);

bool is_negative_definite(const GramLattice& l);

}  // namespace ql

#pragma once

#include "ql/inertia.hpp"

namespace ql {

// The complete finite list of x with x.x = s in a negative definite lattice,
// in deterministic lexicographic order. Enumeration by completed squares
// with exact rational bounds; throws std::domain_error unless the lattice is
// negative definite and s < 0.
std::vector<IntVec> vectors_of_square(const GramLattice& l, const Int& s);

// Roots are the vectors of square -2.
inline std::vector<IntVec> roots(const GramLattice& l) { return vectors_of_square(l, Int(-2)); }

}  // namespace ql

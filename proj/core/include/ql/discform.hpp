#pragma once

// Discriminant groups L∨/L with their finite quadratic forms q : x -> x^2
// mod 2Z and pairing b : (x, y) -> x.y mod 1.

#include "ql/snf.hpp"

namespace ql {

struct DiscriminantForm {
  // Cyclic orders d1 | d2 | ... (> 1) of the invariant-factor decomposition.
  std::vector<Int> orders;
  // Generators of the cyclic factors as dual vectors in L-basis coordinates.
  std::vector<RatVec> generators;
  // q on generators (mod 2, in [0,2)) and b on generator pairs (mod 1, in [0,1)).
  RatVec q_gen;
  RatMat b_gen;

  Int order() const {
    Int n = 1;
    for (const auto& d : orders) n *= d;
    return n;
  }

  // Elements are coordinate tuples x with 0 <= x[i] < orders[i].
  Rat q(const std::vector<long>& x) const;                            // mod 2
  Rat b(const std::vector<long>& x, const std::vector<long>& y) const;  // mod 1
  long element_order(const std::vector<long>& x) const;

  // All group elements in mixed-radix order; throws if order() > cap.
  std::vector<std::vector<long>> elements(long cap = 4096) const;
};

// Throws std::domain_error on a degenerate lattice.
DiscriminantForm discriminant_form(const GramLattice& l);

// True iff a group isomorphism matching q exists; generator-image search
// with pruning on element orders, q values and pairings. Throws
// std::domain_error when either group order exceeds 4096.
bool finite_quadratic_forms_isomorphic(const DiscriminantForm& a, const DiscriminantForm& b);

}  // namespace ql

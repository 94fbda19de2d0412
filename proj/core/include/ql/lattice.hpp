#pragma once

// Integral lattices presented by a symmetric Gram matrix in a fixed basis.

#include "ql/linalg.hpp"

namespace ql {

class GramLattice {
 public:
  GramLattice() = default;
  // Throws std::invalid_argument if gram is not square symmetric.
  explicit GramLattice(IntMat gram);

  int rank() const { return gram_.rows(); }
  const IntMat& gram() const { return gram_; }

  bool even() const;           // all diagonal entries even
  Int determinant() const;     // det of the Gram matrix (rank 0 -> 1)
  bool nondegenerate() const { return determinant() != 0; }

  bool operator==(const GramLattice& o) const { return gram_ == o.gram_; }

 private:
  IntMat gram_;
};

// x . y with respect to L; throws on length mismatch.
Int inner(const GramLattice& l, const IntVec& x, const IntVec& y);
Rat inner(const GramLattice& l, const RatVec& x, const RatVec& y);
inline Int square(const GramLattice& l, const IntVec& x) { return inner(l, x, x); }
inline Rat square(const GramLattice& l, const RatVec& x) { return inner(l, x, x); }

// The form multiplied by d; throws on d = 0.
GramLattice rescale(const GramLattice& l, const Int& d);

// Block-diagonal sum.
GramLattice direct_sum(const GramLattice& a, const GramLattice& b);
GramLattice direct_sum(const std::vector<GramLattice>& parts);

// Standard lattices. Root lattices use the negative-definite convention
// (roots have square -2, adjacent simple roots pair to +1).
namespace lattices {
GramLattice A(int p);           // p >= 1
GramLattice D(int q);           // q >= 4
GramLattice E(int n);           // n in {6, 7, 8}
GramLattice U();                // hyperbolic plane [[0,1],[1,0]]
GramLattice rank1(const Int& n);
}  // namespace lattices

// Restriction of the form to a set of row vectors (Gram of b * G * b^T).
IntMat gram_of(const GramLattice& l, const IntMat& basis_rows);

}  // namespace ql

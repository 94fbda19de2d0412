#pragma once

// The rank-22 period lattice of nonsingular real quartics whose real part is
// two nested spheres: concrete model with involution, polarization and
// matched eigenlattice bases, the fourteen walls of the fundamental
// polyhedron, wall classification, the Coxeter scheme and the sphere classes.

#include <array>
#include <map>
#include <optional>

#include "ql/discform.hpp"
#include "ql/enumerate.hpp"
#include "ql/reflect.hpp"

namespace ql {

class PeriodLattice {
 public:
  // The concrete model: L = E8 ⊕ E8 ⊕ U ⊕ U ⊕ U with the involution that
  // swaps the two E8 blocks, fixes the first U and acts as u1 -> -u2,
  // u2 -> -u1 on the last two. Invariants are asserted at construction.
  static PeriodLattice build();

  const GramLattice& ambient() const { return ambient_; }      // rank 22
  const IntMat& involution() const { return involution_; }     // 22x22
  const IntVec& h() const { return h_; }                       // square 4

  // Rows: e1..e8, v1, v2, u1, u2 in L-coordinates; Gram = E8(2)+2A1+U.
  const IntMat& plus_basis() const { return plus_basis_; }
  // Rows: e'1..e'8, v'1, v'2 in L-coordinates; Gram = E8(2)+2A1(-1).
  const IntMat& minus_basis() const { return minus_basis_; }
  const GramLattice& plus_lattice() const { return plus_; }    // rank 12
  const GramLattice& minus_lattice() const { return minus_; }  // rank 10

  IntVec plus_to_ambient(const IntVec& coords) const;
  IntVec minus_to_ambient(const IntVec& coords) const;
  IntVec apply_involution(const IntVec& ambient_vec) const;

  bool in_plus_part(const IntVec& ambient_vec) const;   // c(x) = x
  bool in_minus_part(const IntVec& ambient_vec) const;  // c(x) = -x
  // Plus-coordinates of an invariant ambient vector; nullopt if not in L^c_+.
  std::optional<IntVec> ambient_to_plus(const IntVec& ambient_vec) const;

  bool congruent_mod_2(const IntVec& a, const IntVec& b) const;  // a = b mod 2L

 private:
  PeriodLattice() = default;
  GramLattice ambient_, plus_, minus_;
  IntMat involution_, plus_basis_, minus_basis_;
  IntVec h_;
};

// The fourteen wall vectors e0..e13 in plus-lattice coordinates
// (e1..e8 are the E8(2) basis itself). Index i holds e_i, 0 <= i <= 13.
std::array<IntVec, 14> wall_vectors(const PeriodLattice& p);

enum class WallKind { S2, S4H, S4, Undetermined };

struct WallType {
  WallKind kind = WallKind::Undetermined;
  // For S4: a witness t' in minus-basis coordinates with t'^2 = -4,
  // t'.h = 0 and t' = e mod 2L, plus the derived root r' = (e + t')/2.
  std::optional<IntVec> witness_minus;
  std::optional<IntVec> root_ambient;
  int search_bound = 0;
};

// Classifies e (plus coordinates): root walls, walls congruent to h mod 2L,
// and decomposable square -4 walls via a bounded witness search. Undetermined
// means "no case applies within the bound", not a proven negative.
WallType classify_wall(const PeriodLattice& p, const IntVec& e, int search_bound);

enum class EdgeKind { None, Single, Double, Other };

struct CoxeterEdge {
  int i = 0, j = 0;
  EdgeKind kind = EdgeKind::None;
  Rat cos2;  // (a.b)^2 / (a^2 b^2)
  Int product;
};

// Pairwise angles between mirror hyperplanes: product 0 -> no edge,
// cos^2 = 1/4 -> single edge, cos^2 = 1/2 -> double edge, anything else is
// reported verbatim as Other. Throws if some vector has nonnegative square.
std::vector<CoxeterEdge> coxeter_scheme(const GramLattice& l, const std::vector<IntVec>& vecs);

// Classes of the inner and outer sphere: (e11, e11 + e9); asserts that the
// outer class is the reflection of the inner one by e9.
std::pair<IntVec, IntVec> sphere_classes(const PeriodLattice& p);

enum class CycleForm { Inner, Both, Outer, Unrecognized };

// Position of a root r in L^c_+ relative to the two sphere classes.
CycleForm vanishing_cycle_form(const PeriodLattice& p, const IntVec& r);

struct ValencyReport {
  std::vector<IntVec> vertices;  // plus coordinates
  int valency_inner = 0, valency_outer = 0;
  bool e9_edge_absent = false;  // e9 is not a simple-edge neighbor of e11
  bool pass = false;            // both valencies exceed 2
};

// Certifies that the sphere classes have simple-edge valency > 2 in the
// Coxeter scheme: builds the graph on the fourteen walls, the outer sphere
// class and a bounded orbit of extra root walls, keeping single edges only.
ValencyReport simple_edge_valency_check(const PeriodLattice& p);

}  // namespace ql

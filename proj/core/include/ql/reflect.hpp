#pragma once

// Reflections x -> x - 2(x.a)a/a^2 and bounded reflection orbits with
// certificate words.

#include "ql/lattice.hpp"

namespace ql {

// A mirror must have a^2 in {±1, ±2}, or a^2 = ±4 with a.y even for every
// basis vector y (so that the reflection stays integral).
bool is_valid_mirror(const GramLattice& l, const IntVec& a);

// Throws std::domain_error if a is not a valid mirror.
IntVec reflect(const GramLattice& l, const IntVec& a, const IntVec& x);

// Mirrors applied left to right.
struct ReflectionWord {
  std::vector<IntVec> mirrors;
};

IntVec apply_word(const GramLattice& l, const ReflectionWord& w, const IntVec& seed);

bool verify_word(const GramLattice& l, const IntVec& seed, const ReflectionWord& w,
                 const IntVec& target);

// All images of the seeds under at most `depth` reflections by the given
// generators, each with a witnessing word. Orbit elements are normalized up
// to sign (first nonzero coordinate positive); output sorted by vector.
std::vector<std::pair<IntVec, ReflectionWord>> orbit_bounded(
    const GramLattice& l, const std::vector<IntVec>& generators,
    const std::vector<IntVec>& seeds, int depth);

}  // namespace ql

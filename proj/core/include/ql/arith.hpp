#pragma once

// Exact arithmetic primitives shared by the whole library. All lattice and
// pencil computations run on GMP integers/rationals; nothing here ever
// touches floating point.

#include <gmpxx.h>

#include <string>
#include <vector>

namespace ql {

using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// floor(sqrt(v)), v >= 0.
Int isqrt_floor(const Int& v);

// floor(sqrt(r)) over nonnegative rationals.
Int sqrt_floor(const Rat& r);

// Largest integer k with k <= x (exact rational floor) and smallest k >= x.
Int floor_rat(const Rat& x);
Int ceil_rat(const Rat& x);

// Canonical representative of r modulo m (m > 0), in [0, m).
Rat mod_rat(const Rat& r, const Rat& m);

// True iff r is an integer.
inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// Parses "p/q" or "p"; q must be nonzero. Throws std::invalid_argument.
Rat rat_from_string(const std::string& s);

// Canonical form "p/q" with q >= 1 and gcd(p, q) = 1.
std::string rat_to_string(const Rat& r);

RatVec to_rat(const IntVec& v);

}  // namespace ql

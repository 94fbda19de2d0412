#include "ql/reflect.hpp"

#include <algorithm>
#include <map>

namespace ql {

bool is_valid_mirror(const GramLattice& l, const IntVec& a) {
  Int s = square(l, a);
  if (s == 1 || s == -1 || s == 2 || s == -2) return true;
  if (s == 4 || s == -4) {
    // a = 0 mod 2L∨: a pairs evenly with every basis vector.
    IntVec ga = times_col(l.gram(), a);
    for (const auto& v : ga)
      if (v % 2 != 0) return false;
    return true;
  }
  return false;
}

IntVec reflect(const GramLattice& l, const IntVec& a, const IntVec& x) {
  if (!is_valid_mirror(l, a))
    throw std::domain_error("reflect: vector does not define an integral reflection");
  Int s = square(l, a);
  Int p = inner(l, x, a);
  // x - (2 p / s) a; the mirror condition makes the quotient integral.
  Int num = 2 * p;
  Int q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), s.get_mpz_t());
  IntVec y = x;
  for (size_t i = 0; i < y.size(); ++i) y[i] -= q * a[i];
  return y;
}

IntVec apply_word(const GramLattice& l, const ReflectionWord& w, const IntVec& seed) {
  IntVec x = seed;
  for (const auto& m : w.mirrors) x = reflect(l, m, x);
  return x;
}

bool verify_word(const GramLattice& l, const IntVec& seed, const ReflectionWord& w,
                 const IntVec& target) {
  return apply_word(l, w, seed) == target;
}

namespace {

IntVec sign_normalized(const IntVec& v) {
  for (const auto& c : v) {
    if (c > 0) return v;
    if (c < 0) {
      IntVec n(v.size());
      for (size_t i = 0; i < v.size(); ++i) n[i] = -v[i];
      return n;
    }
  }
  return v;
}

}  // namespace

std::vector<std::pair<IntVec, ReflectionWord>> orbit_bounded(
    const GramLattice& l, const std::vector<IntVec>& generators,
    const std::vector<IntVec>& seeds, int depth) {
  for (const auto& g : generators)
    if (!is_valid_mirror(l, g)) throw std::domain_error("orbit_bounded: invalid mirror");

  std::map<IntVec, ReflectionWord> seen;  // keyed on sign-normalized vector
  std::vector<std::pair<IntVec, ReflectionWord>> frontier;
  for (const auto& s : seeds) {
    IntVec key = sign_normalized(s);
    if (seen.emplace(key, ReflectionWord{}).second) frontier.push_back({key, {}});
  }
  for (int d = 0; d < depth; ++d) {
    std::vector<std::pair<IntVec, ReflectionWord>> next;
    for (const auto& [v, word] : frontier)
      for (const auto& g : generators) {
        IntVec img = sign_normalized(reflect(l, g, v));
        if (seen.count(img)) continue;
        ReflectionWord w = word;
        w.mirrors.push_back(g);
        seen.emplace(img, w);
        next.push_back({img, std::move(w)});
      }
    frontier = std::move(next);
  }
  std::vector<std::pair<IntVec, ReflectionWord>> out(seen.begin(), seen.end());
  return out;
}

}  // namespace ql

#include "ql/enumerate.hpp"

#include <algorithm>

namespace ql {

namespace {

// Completed-squares data for a positive definite rational form:
// x^T A x = sum_i d_i (x_i + sum_{j>i} u_ij x_j)^2 with every d_i > 0.
struct CompletedSquares {
  int n;
  std::vector<Rat> d;
  RatMat u;

  explicit CompletedSquares(const RatMat& a) : n(a.rows()), d(a.rows()), u(a.rows(), a.rows()) {
    RatMat m = a;
    for (int k = 0; k < n; ++k) {
      if (m(k, k) <= 0)
        throw std::domain_error("vectors_of_square: form is not definite");
      d[k] = m(k, k);
      for (int j = k + 1; j < n; ++j) u(k, j) = m(k, j) / m(k, k);
      for (int i = k + 1; i < n; ++i)
        for (int j = k + 1; j < n; ++j) m(i, j) -= m(i, k) * m(k, j) / m(k, k);
    }
  }
};

void recurse(const CompletedSquares& cs, const Rat& target, int level, Rat used,
             IntVec& x, std::vector<IntVec>& out) {
  if (level < 0) {
    if (used == target) out.push_back(x);
    return;
  }
  Rat c = 0;
  for (int j = level + 1; j < cs.n; ++j)
    if (x[j] != 0) c += cs.u(level, j) * Rat(x[j]);
  Rat budget = (target - used) / cs.d[level];
  if (budget < 0) return;
  Int r = sqrt_floor(budget);
  // Integer range for x with (x + c)^2 <= budget.
  Int lo = ceil_rat(Rat(-r) - c);
  Int hi = floor_rat(Rat(r) - c);
  while ((Rat(lo - 1) + c) * (Rat(lo - 1) + c) <= budget) --lo;
  while ((Rat(lo) + c) * (Rat(lo) + c) > budget) ++lo;
  while ((Rat(hi + 1) + c) * (Rat(hi + 1) + c) <= budget) ++hi;
  while (hi >= lo && (Rat(hi) + c) * (Rat(hi) + c) > budget) --hi;
  for (Int v = lo; v <= hi; ++v) {
    x[level] = v;
    Rat term = (Rat(v) + c) * (Rat(v) + c) * cs.d[level];
    recurse(cs, target, level - 1, used + term, x, out);
  }
  x[level] = 0;
}

}  // namespace

std::vector<IntVec> vectors_of_square(const GramLattice& l, const Int& s) {
  if (s >= 0) throw std::domain_error("vectors_of_square: need s < 0");
  if (!is_negative_definite(l))
    throw std::domain_error("vectors_of_square: lattice must be negative definite");
  const int n = l.rank();
  if (n == 0) return {};

  RatMat a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = Rat(-l.gram()(i, j));
  CompletedSquares cs(a);

  std::vector<IntVec> out;
  IntVec x(n, Int(0));
  recurse(cs, Rat(-s), n - 1, Rat(0), x, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ql

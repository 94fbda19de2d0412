#include "ql/lattice.hpp"

namespace ql {

GramLattice::GramLattice(IntMat gram) : gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols())
    throw std::invalid_argument("GramLattice: matrix not square");
  for (int i = 0; i < gram_.rows(); ++i)
    for (int j = i + 1; j < gram_.cols(); ++j)
      if (gram_(i, j) != gram_(j, i))
        throw std::invalid_argument("GramLattice: matrix not symmetric");
}

bool GramLattice::even() const {
  for (int i = 0; i < rank(); ++i)
    if (gram_(i, i) % 2 != 0) return false;
  return true;
}

Int GramLattice::determinant() const { return det(gram_); }

Int inner(const GramLattice& l, const IntVec& x, const IntVec& y) {
  if (int(x.size()) != l.rank() || int(y.size()) != l.rank())
    throw std::invalid_argument("inner: vector length does not match rank");
  return pair_with(l.gram(), x, y);
}

Rat inner(const GramLattice& l, const RatVec& x, const RatVec& y) {
  if (int(x.size()) != l.rank() || int(y.size()) != l.rank())
    throw std::invalid_argument("inner: vector length does not match rank");
  RatMat g = to_rat(l.gram());
  return pair_with(g, x, y);
}

GramLattice rescale(const GramLattice& l, const Int& d) {
  if (d == 0) throw std::invalid_argument("rescale: d must be nonzero");
  IntMat g = l.gram();
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j) g(i, j) *= d;
  return GramLattice(g);
}

GramLattice direct_sum(const GramLattice& a, const GramLattice& b) {
  IntMat g(a.rank() + b.rank(), a.rank() + b.rank());
  for (int i = 0; i < a.rank(); ++i)
    for (int j = 0; j < a.rank(); ++j) g(i, j) = a.gram()(i, j);
  for (int i = 0; i < b.rank(); ++i)
    for (int j = 0; j < b.rank(); ++j) g(a.rank() + i, a.rank() + j) = b.gram()(i, j);
  return GramLattice(g);
}

GramLattice direct_sum(const std::vector<GramLattice>& parts) {
  GramLattice acc{IntMat(0, 0)};
  for (const auto& p : parts) acc = direct_sum(acc, p);
  return acc;
}

namespace lattices {

// Simple-root Gram matrix of a Dynkin graph: diagonal -2, +1 on edges.
static GramLattice from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  IntMat g(n, n);
  for (int i = 0; i < n; ++i) g(i, i) = -2;
  for (auto [a, b] : edges) {
    g(a, b) = 1;
    g(b, a) = 1;
  }
  return GramLattice(g);
}

GramLattice A(int p) {
  if (p < 1) throw std::invalid_argument("lattices::A: need p >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < p; ++i) e.push_back({i, i + 1});
  return from_edges(p, e);
}

GramLattice D(int q) {
  if (q < 4) throw std::invalid_argument("lattices::D: need q >= 4");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < q - 1; ++i) e.push_back({i, i + 1});
  e.push_back({q - 3, q - 1});
  return from_edges(q, e);
}

GramLattice E(int n) {
  if (n < 6 || n > 8) throw std::invalid_argument("lattices::E: need n in {6,7,8}");
  // Chain 0-1-2-4-5-...-(n-1) with node 3 attached to node 2. For E8 these
  // are e1..e8 with e4 on the branch, matching the labels used throughout.
  std::vector<std::pair<int, int>> e = {{0, 1}, {1, 2}, {2, 3}};
  e.push_back({2, 4});
  for (int i = 4; i + 1 < n; ++i) e.push_back({i, i + 1});
  return from_edges(n, e);
}

GramLattice U() {
  IntMat g(2, 2);
  g(0, 1) = 1;
  g(1, 0) = 1;
  return GramLattice(g);
}

GramLattice rank1(const Int& n) {
  IntMat g(1, 1);
  g(0, 0) = n;
  return GramLattice(g);
}

}  // namespace lattices

IntMat gram_of(const GramLattice& l, const IntMat& basis_rows) {
  if (basis_rows.cols() != l.rank())
    throw std::invalid_argument("gram_of: basis vectors do not match rank");
  return mul(mul(basis_rows, l.gram()), transpose(basis_rows));
}

}  // namespace ql

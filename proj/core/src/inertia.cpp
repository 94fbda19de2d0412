#include "ql/inertia.hpp"

namespace ql {

Inertia inertia(const RatMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inertia: matrix not square");
  const int n = m.rows();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (m(i, j) != m(j, i)) throw std::invalid_argument("inertia: matrix not symmetric");

  RatMat a = m;
  std::vector<int> live(n);
  for (int i = 0; i < n; ++i) live[i] = i;
  Inertia res;

  auto schur_1x1 = [&](int p) {
    // Eliminate index p against diagonal pivot a(p,p).
    Rat d = a(p, p);
    (d > 0 ? res.positive : res.negative)++;
    std::vector<int> rest;
    for (int i : live)
      if (i != p) rest.push_back(i);
    for (size_t x = 0; x < rest.size(); ++x)
      for (size_t y = x; y < rest.size(); ++y) {
        int i = rest[x], j = rest[y];
        Rat v = a(i, j) - a(i, p) * a(j, p) / d;
        a(i, j) = v;
        a(j, i) = v;
      }
    live = rest;
  };

  auto schur_2x2 = [&](int p, int q) {
    // Pivot block [[0, b], [b, 0]] contributes one positive and one negative.
    Rat b = a(p, q);
    res.positive++;
    res.negative++;
    std::vector<int> rest;
    for (int i : live)
      if (i != p && i != q) rest.push_back(i);
    for (size_t x = 0; x < rest.size(); ++x)
      for (size_t y = x; y < rest.size(); ++y) {
        int i = rest[x], j = rest[y];
        Rat v = a(i, j) - (a(i, p) * a(j, q) + a(i, q) * a(j, p)) / b;
        a(i, j) = v;
        a(j, i) = v;
      }
    live = rest;
  };

  while (!live.empty()) {
    int p = -1;
    for (int i : live)
      if (a(i, i) != 0) { p = i; break; }
    if (p >= 0) {
      schur_1x1(p);
      continue;
    }
    // All remaining diagonal entries vanish; look for an off-diagonal entry.
    int q = -1;
    for (size_t x = 0; x < live.size() && q < 0; ++x)
      for (size_t y = x + 1; y < live.size() && q < 0; ++y)
        if (a(live[x], live[y]) != 0) {
          p = live[x];
          q = live[y];
        }
    if (q < 0) {
      res.null += int(live.size());  // zero block
      break;
    }
    schur_2x2(p, q);
  }
  return res;
}

std::pair<int, int> signature(const GramLattice& l) {
  Inertia in = inertia(to_rat(l.gram()));
  if (in.null != 0) throw std::domain_error("signature: degenerate lattice");
  return {in.positive, in.negative};
}

bool is_negative_definite(const GramLattice& l) {
  Inertia in = inertia(to_rat(l.gram()));
  return in.positive == 0 && in.null == 0;
}

}  // namespace ql

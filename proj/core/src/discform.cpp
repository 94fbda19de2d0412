#include "ql/discform.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ql {

Rat DiscriminantForm::q(const std::vector<long>& x) const {
  // q(sum x_i g_i) = sum x_i^2 q(g_i) + 2 sum_{i<j} x_i x_j b(g_i, g_j) mod 2.
  Rat acc = 0;
  const int s = int(orders.size());
  for (int i = 0; i < s; ++i) {
    if (x[i] == 0) continue;
    acc += Rat(x[i]) * Rat(x[i]) * q_gen[i];
    for (int j = i + 1; j < s; ++j)
      if (x[j] != 0) acc += 2 * Rat(x[i]) * Rat(x[j]) * b_gen(i, j);
  }
  return mod_rat(acc, 2);
}

Rat DiscriminantForm::b(const std::vector<long>& x, const std::vector<long>& y) const {
  Rat acc = 0;
  const int s = int(orders.size());
  for (int i = 0; i < s; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < s; ++j) {
      if (y[j] == 0) continue;
      Rat bij = (i == j) ? mod_rat(q_gen[i] / 2, 1) : b_gen(i, j);
      acc += Rat(x[i]) * Rat(y[j]) * bij;
    }
  }
  return mod_rat(acc, 1);
}

long DiscriminantForm::element_order(const std::vector<long>& x) const {
  long ord = 1;
  for (size_t i = 0; i < orders.size(); ++i) {
    if (x[i] == 0) continue;
    long d = orders[i].get_si();
    long o = d / std::gcd(d, x[i]);
    ord = std::lcm(ord, o);
  }
  return ord;
}

std::vector<std::vector<long>> DiscriminantForm::elements(long cap) const {
  if (order() > cap) throw std::domain_error("DiscriminantForm::elements: group too large");
  std::vector<std::vector<long>> out;
  std::vector<long> cur(orders.size(), 0);
  const long n = order().get_si();
  out.reserve(n);
  for (long k = 0; k < n; ++k) {
    out.push_back(cur);
    for (size_t i = 0; i < orders.size(); ++i) {
      if (++cur[i] < orders[i].get_si()) break;
      cur[i] = 0;
    }
  }
  return out;
}

DiscriminantForm discriminant_form(const GramLattice& l) {
  if (!l.nondegenerate()) throw std::domain_error("discriminant_form: degenerate lattice");
  const int n = l.rank();
  // L∨/L = coker(G); with left*G*right = D the class of column i of right,
  // divided by d_i, generates the i-th cyclic factor: G * (right_i / d_i) =
  // left^-1 * e_i, a primitive vector, so the class has exact order d_i.
  SmithForm f = smith_normal_form(l.gram());
  RatMat ginv = inverse(to_rat(l.gram()));

  DiscriminantForm d;
  for (int i = 0; i < n; ++i) {
    if (f.diagonal[i] <= 1) continue;
    d.orders.push_back(f.diagonal[i]);
    RatVec g(n, Rat(0));
    for (int r = 0; r < n; ++r) g[r] = Rat(f.right(r, i), f.diagonal[i]);
    d.generators.push_back(std::move(g));
  }
  const int s = int(d.orders.size());
  d.q_gen.resize(s);
  d.b_gen = RatMat(s, s);
  for (int i = 0; i < s; ++i) {
    d.q_gen[i] = mod_rat(inner(l, d.generators[i], d.generators[i]), 2);
    for (int j = 0; j < s; ++j)
      d.b_gen(i, j) = mod_rat(inner(l, d.generators[i], d.generators[j]), 1);
  }
  return d;
}

namespace {

// Flat view of a discriminant form of order <= 4096: element index <->
// mixed-radix coordinates, with q, order and addition precomputed or cheap.
struct FlatForm {
  std::vector<long> radix;
  std::vector<std::vector<long>> elems;
  std::vector<Rat> qv;
  std::vector<long> ordv;
  long n = 0;

  explicit FlatForm(const DiscriminantForm& d) {
    for (const auto& o : d.orders) radix.push_back(o.get_si());
    elems = d.elements();
    n = long(elems.size());
    qv.reserve(n);
    ordv.reserve(n);
    for (const auto& e : elems) {
      qv.push_back(d.q(e));
      ordv.push_back(d.element_order(e));
    }
  }

  long add(long a, long b) const {
    long idx = 0, mult = 1;
    for (size_t i = 0; i < radix.size(); ++i) {
      long c = (elems[a][i] + elems[b][i]) % radix[i];
      idx += c * mult;
      mult *= radix[i];
    }
    return idx;
  }
  long scale(long a, long k) const {
    long idx = 0, mult = 1;
    for (size_t i = 0; i < radix.size(); ++i) {
      long c = (elems[a][i] * k) % radix[i];
      idx += c * mult;
      mult *= radix[i];
    }
    return idx;
  }
  // b(x, y) = (q(x + y) - q(x) - q(y)) / 2 mod 1.
  Rat pairing(long a, long b_) const {
    return mod_rat((qv[add(a, b_)] - qv[a] - qv[b_]) / 2, 1);
  }
};

bool extend(const FlatForm& A, const FlatForm& B, const std::vector<long>& src_gens,
            size_t level, std::vector<long>& images, std::vector<char>& span) {
  if (level == src_gens.size()) return true;
  const long g = src_gens[level];
  const long want_order = A.ordv[g];
  const Rat want_q = A.qv[g];

  for (long y = 0; y < B.n; ++y) {
    if (B.ordv[y] != want_order || B.qv[y] != want_q) continue;
    // <y> must meet the current span trivially; it suffices to keep
    // (order/p) * y out of the span for every prime p | order.
    bool indep = true;
    for (long p = 2; p * p <= want_order && indep; ++p)
      if (want_order % p == 0 && span[B.scale(y, want_order / p)]) indep = false;
    if (indep && want_order > 1) {
      long p = want_order;  // residual prime factor
      for (long q = 2; q * q <= p; ++q)
        while (p % q == 0) p /= q;
      if (p > 1 && span[B.scale(y, want_order / p)]) indep = false;
    }
    if (!indep) continue;
    bool ok = true;
    for (size_t j = 0; j < level && ok; ++j)
      if (B.pairing(y, images[j]) != A.pairing(g, src_gens[j])) ok = false;
    if (!ok) continue;

    images.push_back(y);
    std::vector<char> snapshot = span;
    for (long s = 0; s < B.n; ++s) {
      if (!snapshot[s]) continue;
      long acc = s;
      for (long k = 1; k < want_order; ++k) {
        acc = B.add(acc, y);
        span[acc] = 1;
      }
    }
    if (extend(A, B, src_gens, level + 1, images, span)) return true;
    span = std::move(snapshot);
    images.pop_back();
  }
  return false;
}

}  // namespace

bool finite_quadratic_forms_isomorphic(const DiscriminantForm& a, const DiscriminantForm& b) {
  if (a.order() > 4096 || b.order() > 4096)
    throw std::domain_error(
        "finite_quadratic_forms_isomorphic: group order exceeds the brute-force cap 4096");
  if (a.orders != b.orders) return false;
  if (a.orders.empty()) return true;

  FlatForm A(a), B(b);
  // Multiset of (order, q) must match.
  std::map<std::pair<long, Rat>, long> ha, hb;
  for (long i = 0; i < A.n; ++i) ha[{A.ordv[i], A.qv[i]}]++;
  for (long i = 0; i < B.n; ++i) hb[{B.ordv[i], B.qv[i]}]++;
  if (ha != hb) return false;

  // Source generators: unit vectors of the invariant-factor decomposition.
  std::vector<long> src;
  long mult = 1;
  for (const auto& o : a.orders) {
    src.push_back(mult);
    mult *= o.get_si();
  }
  // Match generators of large order first; their images are scarcer.
  std::sort(src.begin(), src.end(),
            [&](long x, long y) { return A.ordv[x] > A.ordv[y]; });

  std::vector<long> images;
  std::vector<char> span(B.n, 0);
  span[0] = 1;
  return extend(A, B, src, 0, images, span);
}

}  // namespace ql

#include "ql/k3.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace ql {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::logic_error(std::string("PeriodLattice: ") + msg);
}

IntVec unit(int n, int i) {
  IntVec v(n, Int(0));
  v[i] = 1;
  return v;
}

IntVec add(const IntVec& a, const IntVec& b) {
  IntVec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

IntVec neg(const IntVec& a) {
  IntVec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
  return c;
}

}  // namespace

PeriodLattice PeriodLattice::build() {
  PeriodLattice p;
  const GramLattice e8 = lattices::E(8);
  p.ambient_ = direct_sum({e8, e8, lattices::U(), lattices::U(), lattices::U()});

  // Involution: swap the E8 blocks, fix the first U, u1 -> -u2 on the rest.
  IntMat c(22, 22);
  for (int i = 0; i < 8; ++i) {
    c(8 + i, i) = 1;
    c(i, 8 + i) = 1;
  }
  c(16, 16) = 1;
  c(17, 17) = 1;
  c(19, 18) = -1;
  c(18, 19) = -1;
  c(21, 20) = -1;
  c(20, 21) = -1;
  p.involution_ = c;

  p.plus_basis_ = IntMat(12, 22);
  for (int i = 0; i < 8; ++i) {  // e_i = (f_i, f_i, 0, 0, 0)
    p.plus_basis_(i, i) = 1;
    p.plus_basis_(i, 8 + i) = 1;
  }
  p.plus_basis_(8, 18) = 1;   // v1 = u1 - u2 in the second U
  p.plus_basis_(8, 19) = -1;
  p.plus_basis_(9, 20) = 1;   // v2 = u1 - u2 in the third U
  p.plus_basis_(9, 21) = -1;
  p.plus_basis_(10, 16) = 1;  // u1, u2 of the first U
  p.plus_basis_(11, 17) = 1;

  p.minus_basis_ = IntMat(10, 22);
  for (int i = 0; i < 8; ++i) {  // e'_i = (f_i, -f_i, 0, 0, 0)
    p.minus_basis_(i, i) = 1;
    p.minus_basis_(i, 8 + i) = -1;
  }
  p.minus_basis_(8, 18) = 1;  // v'1 = u1 + u2 in the second U
  p.minus_basis_(8, 19) = 1;
  p.minus_basis_(9, 20) = 1;  // v'2 = u1 + u2 in the third U
  p.minus_basis_(9, 21) = 1;

  p.h_ = add(p.minus_basis_.row(8), p.minus_basis_.row(9));  // h = v'1 + v'2

  p.plus_ = GramLattice(gram_of(p.ambient_, p.plus_basis_));
  p.minus_ = GramLattice(gram_of(p.ambient_, p.minus_basis_));

  // Invariants of the model.
  require(mul(c, c) == IntMat::identity(22), "involution is not an involution");
  require(mul(mul(transpose(c), p.ambient_.gram()), c) == p.ambient_.gram(),
          "involution is not an isometry");
  {
    const GramLattice a1 = lattices::A(1);
    require(p.plus_ == direct_sum({rescale(e8, 2), a1, a1, lattices::U()}),
            "plus eigenlattice Gram mismatch");
    require(p.minus_ == direct_sum({rescale(e8, 2), rescale(a1, -1), rescale(a1, -1)}),
            "minus eigenlattice Gram mismatch");
  }
  for (int i = 0; i < 10; ++i) {  // matched pairs sum into 2L
    IntVec s = add(p.plus_basis_.row(i), p.minus_basis_.row(i));
    for (const auto& x : s) require(x % 2 == 0, "matched pair not divisible by 2");
  }
  require(square(p.ambient_, p.h_) == 4, "h^2 != 4");
  require(p.apply_involution(p.h_) == neg(p.h_), "c(h) != -h");
  require(p.congruent_mod_2(p.h_, add(p.plus_basis_.row(8), p.plus_basis_.row(9))),
          "h != v1 + v2 mod 2L");
  {
    auto sig = signature(p.plus_);
    require(sig.first == 1, "plus eigenlattice is not hyperbolic");
    sig = signature(p.ambient_);
    require(sig.first == 3 && sig.second == 19, "ambient signature is not (3,19)");
  }
  for (int i = 0; i < 12; ++i)
    require(p.in_plus_part(p.plus_basis_.row(i)), "plus basis not invariant");
  for (int i = 0; i < 10; ++i)
    require(p.in_minus_part(p.minus_basis_.row(i)), "minus basis not anti-invariant");
  return p;
}

IntVec PeriodLattice::plus_to_ambient(const IntVec& coords) const {
  return row_times(coords, plus_basis_);
}

IntVec PeriodLattice::minus_to_ambient(const IntVec& coords) const {
  return row_times(coords, minus_basis_);
}

IntVec PeriodLattice::apply_involution(const IntVec& v) const {
  return times_col(involution_, v);
}

bool PeriodLattice::in_plus_part(const IntVec& v) const { return apply_involution(v) == v; }

bool PeriodLattice::in_minus_part(const IntVec& v) const {
  return apply_involution(v) == neg(v);
}

std::optional<IntVec> PeriodLattice::ambient_to_plus(const IntVec& v) const {
  if (!in_plus_part(v)) return std::nullopt;
  // Solve c . plus_basis = v; the model makes the coordinates immediate:
  // E8 part from the first block, v_i and u_i from the U blocks.
  IntVec c(12, Int(0));
  for (int i = 0; i < 8; ++i) c[i] = v[i];
  c[8] = v[18];
  c[9] = v[20];
  c[10] = v[16];
  c[11] = v[17];
  if (plus_to_ambient(c) != v) return std::nullopt;
  return c;
}

bool PeriodLattice::congruent_mod_2(const IntVec& a, const IntVec& b) const {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if ((a[i] - b[i]) % 2 != 0) return false;
  return true;
}

std::array<IntVec, 14> wall_vectors(const PeriodLattice&) {
  // Plus-basis coordinate order: e1..e8, v1, v2, u1, u2.
  auto vec = [](std::initializer_list<int> ilist) {
    IntVec v;
    for (int x : ilist) v.push_back(x);
    return v;
  };
  std::array<IntVec, 14> e;
  e[0] = vec({0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1});    // u1 - u2
  for (int i = 1; i <= 8; ++i) {
    e[i] = IntVec(12, Int(0));
    e[i][i - 1] = 1;
  }
  e[9] = vec({0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0});    // v1 - v2
  e[10] = vec({0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0});    // v2
  e[11] = vec({0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1});   // u2 - v1
  // e12 = 2 u2 + e8*, e13 = 2(u1 + u2) - v1 - v2 + e1*, with e1*, e8* the
  // dual-weight combinations of e1..e8.
  e[12] = vec({-2, -4, -6, -3, -5, -4, -3, -2, 0, 0, 0, 2});
  e[13] = vec({-4, -7, -10, -5, -8, -6, -4, -2, -1, -1, 2, 2});
  return e;
}

namespace {

// Cached complete lists of square-s vectors of E8(2); shared across calls.
const std::vector<IntVec>& e82_vectors_of_square(const Int& s) {
  static std::mutex mu;
  static std::map<Int, std::vector<IntVec>> cache;
  static const GramLattice e82 = rescale(lattices::E(8), 2);
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(s);
  if (it == cache.end()) it = cache.emplace(s, vectors_of_square(e82, s)).first;
  return it->second;
}

// Parity x mod 2 of the solution of sum x_i * minus_i = target mod 2L, if any.
std::optional<std::vector<int>> minus_parity_for(const PeriodLattice& p, const IntVec& target) {
  // 22 equations over F2 in 10 unknowns; the minus basis has full rank mod 2.
  std::vector<std::vector<int>> rows(10, std::vector<int>(23, 0));
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 22; ++j) rows[i][j] = int(mpz_odd_p(p.minus_basis()(i, j).get_mpz_t()));
  // Transpose into equations: columns = unknowns.
  std::vector<std::vector<int>> eq(22, std::vector<int>(11, 0));
  for (int j = 0; j < 22; ++j) {
    for (int i = 0; i < 10; ++i) eq[j][i] = rows[i][j];
    eq[j][10] = int(mpz_odd_p(target[j].get_mpz_t()));
  }
  int r = 0;
  for (int c = 0; c < 10 && r < 22; ++c) {
    int piv = -1;
    for (int i = r; i < 22; ++i)
      if (eq[i][c]) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(eq[r], eq[piv]);
    for (int i = 0; i < 22; ++i)
      if (i != r && eq[i][c])
        for (int k = c; k <= 10; ++k) eq[i][k] ^= eq[r][k];
    ++r;
  }
  for (int i = r; i < 22; ++i)
    if (eq[i][10]) return std::nullopt;  // inconsistent: no congruent vector
  std::vector<int> parity(10, 0);
  for (int i = 0; i < r; ++i) {
    int lead = -1;
    for (int c = 0; c < 10; ++c)
      if (eq[i][c]) { lead = c; break; }
    if (lead >= 0) parity[lead] = eq[i][10];
  }
  return parity;
}

}  // namespace

WallType classify_wall(const PeriodLattice& p, const IntVec& e, int search_bound) {
  if (int(e.size()) != 12) throw std::invalid_argument("classify_wall: expected plus coordinates");
  WallType w;
  w.search_bound = search_bound;
  const Int s = square(p.plus_lattice(), e);
  if (s == -2) {
    w.kind = WallKind::S2;
    return w;
  }
  if (s != -4) return w;

  const IntVec e_amb = p.plus_to_ambient(e);
  if (p.congruent_mod_2(e_amb, p.h())) {
    w.kind = WallKind::S4H;
    return w;
  }

  auto parity = minus_parity_for(p, e_amb);
  if (!parity) return w;
  // t'.h = 2(y1 + y2) forces y2 = -y1, so the two A1(-1) parities must agree.
  if ((*parity)[8] != (*parity)[9]) return w;

  for (int y = (*parity)[8]; y <= search_bound; y += 2) {
    const Int target_e8 = Int(-4) - Int(4) * y * y;  // -4 = x^2 + 2y^2 + 2y^2
    for (int ysign = 0; ysign < (y == 0 ? 1 : 2); ++ysign) {
      const Int y1 = (ysign == 0) ? Int(y) : Int(-y);
      for (const auto& x : e82_vectors_of_square(target_e8)) {
        bool ok = true;
        for (int i = 0; i < 8 && ok; ++i) {
          if (abs(x[i]) > search_bound) ok = false;
          if (ok && int(mpz_odd_p(x[i].get_mpz_t())) != (*parity)[i]) ok = false;
        }
        if (!ok) continue;
        IntVec t(10);
        for (int i = 0; i < 8; ++i) t[i] = x[i];
        t[8] = y1;
        t[9] = -y1;
        // Honest re-verification of the witness conditions.
        const IntVec t_amb = p.minus_to_ambient(t);
        if (square(p.ambient(), t_amb) != -4) continue;
        if (inner(p.ambient(), t_amb, p.h()) != 0) continue;
        if (!p.congruent_mod_2(t_amb, e_amb)) continue;
        IntVec root(22);
        for (int i = 0; i < 22; ++i) root[i] = (e_amb[i] + t_amb[i]) / 2;
        if (square(p.ambient(), root) != -2) continue;
        if (inner(p.ambient(), root, p.h()) != 0) continue;
        const IntVec r2 = neg(p.apply_involution(root));  // r'' = -c(r')
        IntVec diff(22);
        for (int i = 0; i < 22; ++i) diff[i] = root[i] - r2[i];
        if (diff != e_amb) continue;
        if (inner(p.ambient(), root, r2) != 0) continue;
        w.kind = WallKind::S4;
        w.witness_minus = t;
        w.root_ambient = root;
        return w;
      }
    }
  }
  return w;
}

std::vector<CoxeterEdge> coxeter_scheme(const GramLattice& l, const std::vector<IntVec>& vecs) {
  std::vector<Int> sq;
  for (const auto& v : vecs) {
    Int s = square(l, v);
    if (s >= 0) throw std::domain_error("coxeter_scheme: vector of nonnegative square");
    sq.push_back(s);
  }
  std::vector<CoxeterEdge> out;
  for (size_t i = 0; i < vecs.size(); ++i)
    for (size_t j = i + 1; j < vecs.size(); ++j) {
      CoxeterEdge e;
      e.i = int(i);
      e.j = int(j);
      e.product = inner(l, vecs[i], vecs[j]);
      if (e.product == 0) {
        e.kind = EdgeKind::None;
        e.cos2 = 0;
      } else {
        e.cos2 = Rat(e.product * e.product) / Rat(sq[i] * sq[j]);
        if (e.cos2 == Rat(1, 4))
          e.kind = EdgeKind::Single;
        else if (e.cos2 == Rat(1, 2))
          e.kind = EdgeKind::Double;
        else
          e.kind = EdgeKind::Other;
      }
      out.push_back(std::move(e));
    }
  return out;
}

std::pair<IntVec, IntVec> sphere_classes(const PeriodLattice& p) {
  const auto e = wall_vectors(p);
  const IntVec sp_in = e[11];
  const IntVec sp_out = reflect(p.plus_lattice(), e[9], sp_in);
  if (sp_out != add(e[11], e[9]))
    throw std::logic_error("sphere_classes: reflection by e9 disagrees with e11 + e9");
  return {sp_in, sp_out};
}

CycleForm vanishing_cycle_form(const PeriodLattice& p, const IntVec& r) {
  if (int(r.size()) != 12)
    throw std::invalid_argument("vanishing_cycle_form: expected plus coordinates");
  if (square(p.plus_lattice(), r) != -2)
    throw std::domain_error("vanishing_cycle_form: vector is not a root");
  const auto [sp_in, sp_out] = sphere_classes(p);
  if (r == sp_in) return CycleForm::Inner;
  const Int a = inner(p.plus_lattice(), r, sp_in);
  const Int b = inner(p.plus_lattice(), r, sp_out);
  if (a == 1 && b == 1) return CycleForm::Both;
  if (a == 0 && b == 2) return CycleForm::Outer;
  return CycleForm::Unrecognized;
}

ValencyReport simple_edge_valency_check(const PeriodLattice& p) {
  const auto e = wall_vectors(p);
  const auto [sp_in, sp_out] = sphere_classes(p);

  ValencyReport rep;
  std::vector<IntVec> verts(e.begin(), e.end());
  verts.push_back(sp_out);
  // Extra root walls: bounded reflection images of e0 and e10 across the
  // ten decomposable walls. The valencies found on this finite vertex set
  // are lower bounds for the full (infinite) scheme.
  std::vector<IntVec> gens;
  for (int i = 1; i <= 8; ++i) gens.push_back(e[i]);
  gens.push_back(e[12]);
  gens.push_back(e[13]);
  for (const auto& [v, word] : orbit_bounded(p.plus_lattice(), gens, {e[0], e[10]}, 2)) {
    if (std::find(verts.begin(), verts.end(), v) == verts.end()) verts.push_back(v);
  }
  rep.vertices = verts;

  const auto edges = coxeter_scheme(p.plus_lattice(), verts);
  auto index_of = [&](const IntVec& v) {
    return int(std::find(verts.begin(), verts.end(), v) - verts.begin());
  };
  const int in_idx = index_of(sp_in), out_idx = index_of(sp_out);
  const int e9_idx = index_of(e[9]);
  for (const auto& ed : edges) {
    if (ed.kind == EdgeKind::Single) {
      if (ed.i == in_idx || ed.j == in_idx) rep.valency_inner++;
      if (ed.i == out_idx || ed.j == out_idx) rep.valency_outer++;
    }
    if ((ed.i == in_idx && ed.j == e9_idx) || (ed.i == e9_idx && ed.j == in_idx))
      rep.e9_edge_absent = ed.kind != EdgeKind::Single;
  }
  rep.pass = rep.valency_inner > 2 && rep.valency_outer > 2 && rep.e9_edge_absent;
  return rep;
}

}  // namespace ql

#include "ql/snf.hpp"

#include <cstdlib>

namespace ql {

namespace {

struct Worker {
  IntMat a, left, right, right_inv;

  explicit Worker(const IntMat& m)
      : a(m),
        left(IntMat::identity(m.rows())),
        right(IntMat::identity(m.cols())),
        right_inv(IntMat::identity(m.cols())) {}

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
    for (int c = 0; c < left.cols(); ++c) std::swap(left(i, c), left(j, c));
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
    for (int r = 0; r < right.rows(); ++r) std::swap(right(r, i), right(r, j));
    for (int c = 0; c < right_inv.cols(); ++c) std::swap(right_inv(i, c), right_inv(j, c));
  }
  void negate_row(int i) {
    for (int c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
    for (int c = 0; c < left.cols(); ++c) left(i, c) = -left(i, c);
  }
  // row_i -= q * row_j
  void add_row(int i, int j, const Int& q) {
    if (q == 0) return;
    for (int c = 0; c < a.cols(); ++c) a(i, c) -= q * a(j, c);
    for (int c = 0; c < left.cols(); ++c) left(i, c) -= q * left(j, c);
  }
  // col_i -= q * col_j; right_inv picks up the inverse row operation
  void add_col(int i, int j, const Int& q) {
    if (q == 0) return;
    for (int r = 0; r < a.rows(); ++r) a(r, i) -= q * a(r, j);
    for (int r = 0; r < right.rows(); ++r) right(r, i) -= q * right(r, j);
    for (int c = 0; c < right_inv.cols(); ++c) right_inv(j, c) += q * right_inv(i, c);
  }
};

Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMat& m) {
  const int rows = m.rows(), cols = m.cols();
  const int steps = std::min(rows, cols);
  Worker w(m);

  for (int t = 0; t < steps; ++t) {
    // Pivot: entry of least absolute value in the remaining block.
    int pi = -1, pj = -1;
    Int best;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j) {
        if (w.a(i, j) == 0) continue;
        Int v = abs(w.a(i, j));
        if (pi < 0 || v < best) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;  // remaining block is zero
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);

    for (;;) {
      // Clear column t below the pivot.
      bool dirty = false;
      for (int i = t + 1; i < rows; ++i) {
        if (w.a(i, t) == 0) continue;
        Int q = fdiv(w.a(i, t), w.a(t, t));
        w.add_row(i, t, q);
        if (w.a(i, t) != 0) {
          w.swap_rows(t, i);  // smaller remainder becomes the pivot
          dirty = true;
        }
      }
      if (dirty) continue;
      // Clear row t right of the pivot.
      for (int j = t + 1; j < cols; ++j) {
        if (w.a(t, j) == 0) continue;
        Int q = fdiv(w.a(t, j), w.a(t, t));
        w.add_col(j, t, q);
        if (w.a(t, j) != 0) {
          w.swap_cols(t, j);
          dirty = true;
        }
      }
      if (dirty) continue;
      // Divisibility: the pivot must divide every remaining entry.
      bool fixed = false;
      for (int i = t + 1; i < rows && !fixed; ++i)
        for (int j = t + 1; j < cols && !fixed; ++j)
          if (w.a(i, j) % w.a(t, t) != 0) {
            w.add_row(t, i, Int(-1));  // row_t += row_i, then restart
            fixed = true;
          }
      if (!fixed) break;
    }
    if (w.a(t, t) < 0) w.negate_row(t);
  }

  SmithForm f;
  f.diagonal.resize(steps);
  for (int t = 0; t < steps; ++t) f.diagonal[t] = w.a(t, t);
  f.left = std::move(w.left);
  f.right = std::move(w.right);
  f.right_inv = std::move(w.right_inv);
  return f;
}

IntMat hnf_row_basis(const IntMat& rows) {
  IntMat a = rows;
  const int m = a.rows(), n = a.cols();
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    // Euclid on column c among rows r..m-1.
    for (;;) {
      int p = -1;
      for (int i = r; i < m; ++i)
        if (a(i, c) != 0 && (p < 0 || abs(a(i, c)) < abs(a(p, c)))) p = i;
      if (p < 0) break;
      if (p != r)
        for (int j = 0; j < n; ++j) std::swap(a(r, j), a(p, j));
      bool done = true;
      for (int i = r + 1; i < m; ++i) {
        if (a(i, c) == 0) continue;
        Int q = fdiv(a(i, c), a(r, c));
        for (int j = 0; j < n; ++j) a(i, j) -= q * a(r, j);
        if (a(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (a(r, c) == 0) continue;
    if (a(r, c) < 0)
      for (int j = 0; j < n; ++j) a(r, j) = -a(r, j);
    // Reduce the rows above.
    for (int i = 0; i < r; ++i) {
      Int q = fdiv(a(i, c), a(r, c));
      if (q != 0)
        for (int j = 0; j < n; ++j) a(i, j) -= q * a(r, j);
    }
    ++r;
  }
  IntMat basis(r, n);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < n; ++j) basis(i, j) = a(i, j);
  return basis;
}

IntMat saturation_basis(const IntMat& m) {
  // With left * m * right = D, the first r rows of right_inv span the
  // saturation: m = left^-1 D right_inv, so rowspace_Q(m) is spanned by the
  // first r rows of right_inv, which extend to a basis of Z^n.
  SmithForm f = smith_normal_form(m);
  const int r = f.rank();
  IntMat basis(r, m.cols());
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < m.cols(); ++j) basis(i, j) = f.right_inv(i, j);
  return basis;
}

}  // namespace ql

#include "ql/linalg.hpp"

namespace ql {

RatMat to_rat(const IntMat& m) {
  RatMat r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

bool is_integral(const RatMat& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!is_integer(m(i, j))) return false;
  return true;
}

bool is_integral(const RatVec& v) {
  for (const auto& x : v)
    if (!is_integer(x)) return false;
  return true;
}

IntMat to_int(const RatMat& m) {
  IntMat r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      if (!is_integer(m(i, j))) throw std::domain_error("to_int: entry not integral");
      r(i, j) = m(i, j).get_num();
    }
  return r;
}

IntVec to_int(const RatVec& v) {
  IntVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    if (!is_integer(v[i])) throw std::domain_error("to_int: entry not integral");
    r[i] = v[i].get_num();
  }
  return r;
}

Int det(const IntMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
  const int n = m.rows();
  if (n == 0) return 1;
  IntMat a = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

Rat det(const RatMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
  const int n = m.rows();
  RatMat a = m;
  Rat d = 1;
  for (int k = 0; k < n; ++k) {
    int p = -1;
    for (int i = k; i < n; ++i)
      if (a(i, k) != 0) { p = i; break; }
    if (p < 0) return 0;
    if (p != k) {
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      d = -d;
    }
    d *= a(k, k);
    Rat inv = 1 / a(k, k);
    for (int i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rat f = a(i, k) * inv;
      for (int j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return d;
}

int rank(const RatMat& m) {
  RatMat a = m;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int p = -1;
    for (int i = r; i < a.rows(); ++i)
      if (a(i, c) != 0) { p = i; break; }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(p, j));
    Rat inv = 1 / a(r, c);
    for (int i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      Rat f = a(i, c) * inv;
      for (int j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

RatMat inverse(const RatMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
  const int n = m.rows();
  RatMat a = m;
  RatMat inv = RatMat::identity(n);
  for (int k = 0; k < n; ++k) {
    int p = -1;
    for (int i = k; i < n; ++i)
      if (a(i, k) != 0) { p = i; break; }
    if (p < 0) throw std::domain_error("inverse: singular matrix");
    if (p != k)
      for (int j = 0; j < n; ++j) {
        std::swap(a(k, j), a(p, j));
        std::swap(inv(k, j), inv(p, j));
      }
    Rat piv = 1 / a(k, k);
    for (int j = 0; j < n; ++j) {
      a(k, j) *= piv;
      inv(k, j) *= piv;
    }
    for (int i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      Rat f = a(i, k);
      for (int j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

RatVec solve_left(const RatMat& a, const RatVec& b) {
  return row_times(b, inverse(a));
}

std::optional<IntVec> solve_left_integral(const RatMat& a, const RatVec& b) {
  RatVec x = solve_left(a, b);
  if (!is_integral(x)) return std::nullopt;
  return to_int(x);
}

int rank_mod2(const std::vector<std::vector<int>>& rows) {
  std::vector<std::vector<int>> a;
  for (const auto& r : rows) {
    std::vector<int> v(r.size());
    for (size_t j = 0; j < r.size(); ++j) v[j] = ((r[j] % 2) + 2) % 2;
    a.push_back(std::move(v));
  }
  int rank = 0;
  const int cols = a.empty() ? 0 : int(a[0].size());
  for (int c = 0; c < cols && rank < int(a.size()); ++c) {
    int p = -1;
    for (int i = rank; i < int(a.size()); ++i)
      if (a[i][c]) { p = i; break; }
    if (p < 0) continue;
    std::swap(a[rank], a[p]);
    for (int i = 0; i < int(a.size()); ++i)
      if (i != rank && a[i][c])
        for (int j = c; j < cols; ++j) a[i][j] ^= a[rank][j];
    ++rank;
  }
  return rank;
}

}  // namespace ql

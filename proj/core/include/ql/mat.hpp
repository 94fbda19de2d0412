#pragma once

#include <stdexcept>
#include <vector>

#include "ql/arith.hpp"

namespace ql {

// Dense row-major matrix over an exact coefficient type.
template <class T>
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}
  Mat(int rows, int cols, std::vector<T> data)
      : rows_(rows), cols_(cols), a_(std::move(data)) {
    if (a_.size() != size_t(rows) * cols) throw std::invalid_argument("Mat: bad data size");
  }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  std::vector<T> row(int i) const {
    return std::vector<T>(a_.begin() + size_t(i) * cols_, a_.begin() + size_t(i + 1) * cols_);
  }
  void set_row(int i, const std::vector<T>& r) {
    if (int(r.size()) != cols_) throw std::invalid_argument("Mat::set_row: length mismatch");
    for (int j = 0; j < cols_; ++j) (*this)(i, j) = r[j];
  }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;

template <class T>
Mat<T> transpose(const Mat<T>& m) {
  Mat<T> t(m.cols(), m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

template <class T>
Mat<T> mul(const Mat<T>& a, const Mat<T>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mul: dimension mismatch");
  Mat<T> c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

// y = x^T M (row vector times matrix).
template <class T>
std::vector<T> row_times(const std::vector<T>& x, const Mat<T>& m) {
  if (int(x.size()) != m.rows()) throw std::invalid_argument("row_times: dimension mismatch");
  std::vector<T> y(m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < m.cols(); ++j) y[j] += x[i] * m(i, j);
  }
  return y;
}

// y = M x (matrix times column vector).
template <class T>
std::vector<T> times_col(const Mat<T>& m, const std::vector<T>& x) {
  if (int(x.size()) != m.cols()) throw std::invalid_argument("times_col: dimension mismatch");
  std::vector<T> y(m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) y[i] += m(i, j) * x[j];
  return y;
}

// x^T M y, the bilinear pairing of two coordinate vectors.
template <class T>
T pair_with(const Mat<T>& m, const std::vector<T>& x, const std::vector<T>& y) {
  if (int(x.size()) != m.rows() || int(y.size()) != m.cols())
    throw std::invalid_argument("pair_with: dimension mismatch");
  T acc = 0;
  for (int i = 0; i < m.rows(); ++i) {
    if (x[i] == 0) continue;
    T row = 0;
    for (int j = 0; j < m.cols(); ++j) row += m(i, j) * y[j];
    acc += x[i] * row;
  }
  return acc;
}

RatMat to_rat(const IntMat& m);

// True iff every entry is an integer.
bool is_integral(const RatMat& m);
bool is_integral(const RatVec& v);
IntMat to_int(const RatMat& m);  // throws if not integral
IntVec to_int(const RatVec& v);

}  // namespace ql

#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "efgc/error.hpp"
#include "efgc/ringkit/ring.hpp"

namespace efgc {

template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(long rows, long cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  T& operator()(long i, long j) { return data_[i * cols_ + j]; }
  const T& operator()(long i, long j) const { return data_[i * cols_ + j]; }
  const std::vector<T>& data() const { return data_; }

 private:
  long rows_ = 0;
  long cols_ = 0;
  std::vector<T> data_;
};

template <class T>
DenseMatrix<T> mat_mul(const DenseMatrix<T>& a, const DenseMatrix<T>& b, const T& zero) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::kDimensionMismatch, "matrix product shapes");
  DenseMatrix<T> c(a.rows(), b.cols(), zero);
  for (long i = 0; i < a.rows(); ++i)
    for (long k = 0; k < a.cols(); ++k)
      for (long j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
  return c;
}

template <class T>
DenseMatrix<T> mat_identity(long n, const T& zero, const T& one) {
  DenseMatrix<T> m(n, n, zero);
  for (long i = 0; i < n; ++i) m(i, i) = one;
  return m;
}

// Coefficients [1, c_1, ..., c_n] of det(lambda*I - A) by Berkowitz's
// algorithm; only ring operations are used.
template <class T>
std::vector<T> charpoly_berkowitz(const DenseMatrix<T>& a, const T& zero, const T& one) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::kDimensionMismatch, "charpoly of non-square matrix");
  long n = a.rows();
  std::vector<T> vect{one};
  if (n == 0) return vect;
  vect.push_back(-a(0, 0));
  for (long r = 1; r < n; ++r) {
    // a_{r+1} = [[A_r, C], [R, a_rr]]
    std::vector<T> col;
    col.reserve(r + 2);
    col.push_back(one);
    col.push_back(-a(r, r));
    std::vector<T> cvec(r, zero);
    for (long i = 0; i < r; ++i) cvec[i] = a(i, r);
    for (long k = 0; k < r; ++k) {
      T dot = zero;
      for (long i = 0; i < r; ++i) dot += a(r, i) * cvec[i];
      col.push_back(-dot);
      if (k + 1 < r) {
        std::vector<T> next(r, zero);
        for (long i = 0; i < r; ++i)
          for (long j = 0; j < r; ++j) next[i] += a(i, j) * cvec[j];
        cvec = std::move(next);
      }
    }
    std::vector<T> out(r + 2, zero);
    for (long i = 0; i < r + 2; ++i)
      for (long j = 0; j <= std::min(i, r); ++j) out[i] += col[i - j] * vect[j];
    vect = std::move(out);
  }
  return vect;
}

template <class T>
T det_berkowitz(const DenseMatrix<T>& a, const T& zero, const T& one) {
  std::vector<T> cp = charpoly_berkowitz(a, zero, one);
  T d = cp.back();
  return a.rows() % 2 == 0 ? d : -d;
}

// Leibniz expansion over all permutations.
template <class T>
T det_permutation(const DenseMatrix<T>& a, const T& zero, const T& one) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::kDimensionMismatch, "det of non-square matrix");
  long n = a.rows();
  std::vector<long> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  T total = zero;
  do {
    long inversions = 0;
    for (long i = 0; i < n; ++i)
      for (long j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    T term = one;
    for (long i = 0; i < n; ++i) term = term * a(i, perm[i]);
    if (inversions % 2 == 0)
      total += term;
    else
      total -= term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

template <class T>
T det_division_free(const DenseMatrix<T>& a, const T& zero, const T& one) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::kDimensionMismatch, "det of non-square matrix");
  if (a.rows() <= 5) return det_permutation(a, zero, one);
  return det_berkowitz(a, zero, one);
}

// adj(A) = (-1)^(n-1) (A^(n-1) + c_1 A^(n-2) + ... + c_(n-1) I) by
// Cayley-Hamilton, with c_i from Berkowitz.
template <class T>
DenseMatrix<T> adjugate(const DenseMatrix<T>& a, const T& zero, const T& one) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::kDimensionMismatch, "adjugate of non-square matrix");
  long n = a.rows();
  if (n == 0) return a;
  std::vector<T> cp = charpoly_berkowitz(a, zero, one);
  DenseMatrix<T> acc = mat_identity(n, zero, one);
  for (long k = 1; k < n; ++k) {
    acc = mat_mul(acc, a, zero);
    for (long i = 0; i < n; ++i) acc(i, i) += cp[k];
  }
  if (n % 2 == 0)
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) acc(i, j) = -acc(i, j);
  return acc;
}

// Matrices over the ring menu.
class Matrix : public DenseMatrix<RingValue> {
 public:
  Matrix() = default;
  Matrix(Ring ring, long rows, long cols)
      : DenseMatrix<RingValue>(rows, cols, RingValue::zero(ring)), ring_(std::move(ring)) {}
  Matrix(Ring ring, DenseMatrix<RingValue> m) : DenseMatrix<RingValue>(std::move(m)), ring_(std::move(ring)) {}

  const Ring& ring() const { return ring_; }
  static Matrix identity(const Ring& ring, long n);
  RingValue zero() const { return RingValue::zero(ring_); }
  RingValue one() const { return RingValue::one(ring_); }

 private:
  Ring ring_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
bool operator==(const Matrix& a, const Matrix& b);
RingValue det_division_free(const Matrix& m);
RingValue det_berkowitz(const Matrix& m);
RingValue det_permutation(const Matrix& m);
Matrix adjugate(const Matrix& m);
// [1, c_1, ..., c_n] with det(lambda I - m) = lambda^n + c_1 lambda^(n-1) + ...
std::vector<RingValue> charpoly(const Matrix& m);
RingValue trace(const Matrix& m);

}  // namespace efgc

#pragma once

#include <cstddef>
#include <vector>

#include "framered/errors.hpp"
#include "framered/scalar.hpp"

namespace framered {

// Dense row-major matrix over double or std::complex<double>. The field is
// fixed by the template parameter; real data never promotes to complex.
template <Scalar T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, T value = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, value) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  T* data() { return data_.data(); }
  const T* data() const { return data_.data(); }

  bool operator==(const DenseMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RealMatrix = DenseMatrix<double>;
using ComplexMatrix = DenseMatrix<cplx>;

template <Scalar T>
using Vec = std::vector<T>;

// Inner product, linear in the first argument and conjugate-linear in the
// second. This convention is fixed for the whole library.
template <Scalar T>
T inner(const Vec<T>& x, const Vec<T>& y) {
  if (x.size() != y.size())
    throw DimensionMismatch("inner: length mismatch");
  T acc{};
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * conjugate(y[i]);
  return acc;
}

template <Scalar T>
double norm_sq(const Vec<T>& v) {
  double acc = 0.0;
  for (const T& e : v) acc += abs_sq(e);
  return acc;
}

template <Scalar T>
double norm(const Vec<T>& v);

// Matrix product kernels. The parallel path assigns each output row to one
// thread and accumulates entries in the same left-to-right order as the
// serial path, so both produce bit-identical results.
template <Scalar T>
DenseMatrix<T> matmul_serial(const DenseMatrix<T>& a, const DenseMatrix<T>& b);
template <Scalar T>
DenseMatrix<T> matmul_parallel(const DenseMatrix<T>& a,
                               const DenseMatrix<T>& b);
template <Scalar T>
DenseMatrix<T> matmul(const DenseMatrix<T>& a, const DenseMatrix<T>& b);

template <Scalar T>
DenseMatrix<T> adjoint(const DenseMatrix<T>& m);

template <Scalar T>
DenseMatrix<T> add(const DenseMatrix<T>& a, const DenseMatrix<T>& b);
template <Scalar T>
DenseMatrix<T> subtract(const DenseMatrix<T>& a, const DenseMatrix<T>& b);
template <Scalar T>
DenseMatrix<T> scale(const DenseMatrix<T>& m, T factor);

template <Scalar T>
Vec<T> apply(const DenseMatrix<T>& m, const Vec<T>& v);

template <Scalar T>
double max_abs(const DenseMatrix<T>& m);
template <Scalar T>
double max_abs_diff(const DenseMatrix<T>& a, const DenseMatrix<T>& b);
template <Scalar T>
double frobenius_norm(const DenseMatrix<T>& m);

// Numerical rank via column-pivoted Householder triangularization. The
// default tolerance is max(rows, cols) * machine epsilon * (largest column
// norm); pass a non-negative tol to override.
template <Scalar T>
std::size_t rank(const DenseMatrix<T>& m, double tol = -1.0);

}  // namespace framered

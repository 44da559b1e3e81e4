#include "framered/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

namespace framered {

namespace {

// Work size below which the parallel path is not worth spawning a team.
constexpr std::uint64_t kParallelFlopThreshold = 1u << 18;

template <Scalar T>
void require_multipliable(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  if (a.cols() != b.rows())
    throw DimensionMismatch("matmul: inner dimensions differ");
}

template <Scalar T>
void require_same_shape(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("matrix shapes differ");
}

template <Scalar T>
void matmul_row_range(const DenseMatrix<T>& a, const DenseMatrix<T>& b,
                      DenseMatrix<T>& c, std::size_t row_begin,
                      std::size_t row_end) {
  const std::size_t n = b.cols();
  const std::size_t inner = a.cols();
  for (std::size_t i = row_begin; i < row_end; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      T acc{};
      for (std::size_t k = 0; k < inner; ++k) acc += a(i, k) * b(k, j);
      c(i, j) = acc;
    }
  }
}

}  // namespace

template <Scalar T>
double norm(const Vec<T>& v) {
  return std::sqrt(norm_sq(v));
}

template <Scalar T>
DenseMatrix<T> matmul_serial(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  require_multipliable(a, b);
  DenseMatrix<T> c(a.rows(), b.cols());
  matmul_row_range(a, b, c, 0, a.rows());
  return c;
}

template <Scalar T>
DenseMatrix<T> matmul_parallel(const DenseMatrix<T>& a,
                               const DenseMatrix<T>& b) {
  require_multipliable(a, b);
  DenseMatrix<T> c(a.rows(), b.cols());
  const std::int64_t rows = static_cast<std::int64_t>(a.rows());
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::int64_t i = 0; i < rows; ++i) {
    matmul_row_range(a, b, c, static_cast<std::size_t>(i),
                     static_cast<std::size_t>(i) + 1);
  }
  return c;
}

template <Scalar T>
DenseMatrix<T> matmul(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  const std::uint64_t flops = std::uint64_t{a.rows()} * a.cols() * b.cols();
  if (flops >= kParallelFlopThreshold) return matmul_parallel(a, b);
  return matmul_serial(a, b);
}

template <Scalar T>
DenseMatrix<T> adjoint(const DenseMatrix<T>& m) {
  DenseMatrix<T> out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(j, i) = conjugate(m(i, j));
  return out;
}

template <Scalar T>
DenseMatrix<T> add(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  require_same_shape(a, b);
  DenseMatrix<T> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

template <Scalar T>
DenseMatrix<T> subtract(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  require_same_shape(a, b);
  DenseMatrix<T> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

template <Scalar T>
DenseMatrix<T> scale(const DenseMatrix<T>& m, T factor) {
  DenseMatrix<T> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j) * factor;
  return out;
}

template <Scalar T>
Vec<T> apply(const DenseMatrix<T>& m, const Vec<T>& v) {
  if (m.cols() != v.size())
    throw DimensionMismatch("apply: vector length does not match columns");
  Vec<T> out(m.rows(), T{});
  for (std::size_t i = 0; i < m.rows(); ++i) {
    T acc{};
    for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

template <Scalar T>
double max_abs(const DenseMatrix<T>& m) {
  double best = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      best = std::max(best, std::sqrt(abs_sq(m(i, j))));
  return best;
}

template <Scalar T>
double max_abs_diff(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  require_same_shape(a, b);
  double best = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      best = std::max(best, std::sqrt(abs_sq(a(i, j) - b(i, j))));
  return best;
}

template <Scalar T>
double frobenius_norm(const DenseMatrix<T>& m) {
  double acc = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) acc += abs_sq(m(i, j));
  return std::sqrt(acc);
}

namespace {

template <Scalar T>
double column_norm_sq(const DenseMatrix<T>& m, std::size_t col,
                      std::size_t row_begin) {
  double acc = 0.0;
  for (std::size_t r = row_begin; r < m.rows(); ++r) acc += abs_sq(m(r, col));
  return acc;
}

}  // namespace

template <Scalar T>
std::size_t rank(const DenseMatrix<T>& m, double tol) {
  if (m.empty()) return 0;
  DenseMatrix<T> a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  const std::size_t steps = std::min(rows, cols);

  double max_col_norm = 0.0;
  for (std::size_t c = 0; c < cols; ++c)
    max_col_norm = std::max(max_col_norm, std::sqrt(column_norm_sq(a, c, 0)));
  if (tol < 0.0) {
    tol = static_cast<double>(std::max(rows, cols)) *
          std::numeric_limits<double>::epsilon() * max_col_norm;
  }
  if (max_col_norm == 0.0) return 0;

  std::vector<std::size_t> col_index(cols);
  for (std::size_t c = 0; c < cols; ++c) col_index[c] = c;

  std::size_t r = 0;
  for (std::size_t k = 0; k < steps; ++k) {
    // Recompute residual norms each step; cheap at these sizes and avoids
    // downdating drift.
    std::size_t pivot = k;
    double pivot_norm_sq = -1.0;
    for (std::size_t c = k; c < cols; ++c) {
      const double ns = column_norm_sq(a, c, k);
      if (ns > pivot_norm_sq) {
        pivot_norm_sq = ns;
        pivot = c;
      }
    }
    const double pivot_norm = std::sqrt(std::max(pivot_norm_sq, 0.0));
    if (pivot_norm <= tol) break;
    if (pivot != k) {
      for (std::size_t row = 0; row < rows; ++row)
        std::swap(a(row, k), a(row, pivot));
      std::swap(col_index[k], col_index[pivot]);
    }

    // Householder reflector for column k, rows k..end.
    Vec<T> v(rows - k, T{});
    for (std::size_t row = k; row < rows; ++row) v[row - k] = a(row, k);
    T alpha = v[0];
    const double alpha_abs = std::sqrt(abs_sq(alpha));
    T sign = alpha_abs > 0.0 ? alpha * T(1.0 / alpha_abs) : T{1};
    v[0] += sign * T(pivot_norm);
    const double v_norm_sq = norm_sq(v);
    if (v_norm_sq > 0.0) {
      for (std::size_t c = k; c < cols; ++c) {
        T dot{};
        for (std::size_t row = k; row < rows; ++row)
          dot += conjugate(v[row - k]) * a(row, c);
        const T coeff = T(2.0 / v_norm_sq) * dot;
        for (std::size_t row = k; row < rows; ++row)
          a(row, c) -= coeff * v[row - k];
      }
    }
    ++r;
  }
  return r;
}

#define FRAMERED_INSTANTIATE(T)                                              \
  template double norm<T>(const Vec<T>&);                                    \
  template DenseMatrix<T> matmul_serial<T>(const DenseMatrix<T>&,            \
                                           const DenseMatrix<T>&);           \
  template DenseMatrix<T> matmul_parallel<T>(const DenseMatrix<T>&,          \
                                             const DenseMatrix<T>&);         \
  template DenseMatrix<T> matmul<T>(const DenseMatrix<T>&,                   \
                                    const DenseMatrix<T>&);                  \
  template DenseMatrix<T> adjoint<T>(const DenseMatrix<T>&);                 \
  template DenseMatrix<T> add<T>(const DenseMatrix<T>&,                      \
                                 const DenseMatrix<T>&);                     \
  template DenseMatrix<T> subtract<T>(const DenseMatrix<T>&,                 \
                                      const DenseMatrix<T>&);                \
  template DenseMatrix<T> scale<T>(const DenseMatrix<T>&, T);                \
  template Vec<T> apply<T>(const DenseMatrix<T>&, const Vec<T>&);            \
  template double max_abs<T>(const DenseMatrix<T>&);                         \
  template double max_abs_diff<T>(const DenseMatrix<T>&,                     \
                                  const DenseMatrix<T>&);                    \
  template double frobenius_norm<T>(const DenseMatrix<T>&);                  \
  template std::size_t rank<T>(const DenseMatrix<T>&, double);

FRAMERED_INSTANTIATE(double)
FRAMERED_INSTANTIATE(cplx)

#undef FRAMERED_INSTANTIATE

}  // namespace framered

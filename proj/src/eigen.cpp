#include <algorithm>
#include <cmath>
#include <numeric>

#include "framered/errors.hpp"
#include "framered/hermitian.hpp"

namespace framered {

namespace {

const Tolerances kDefaults;

}  // namespace

const Tolerances& tolerances() { return kDefaults; }

template <Scalar T>
HermitianOperator<T>::HermitianOperator(DenseMatrix<T> entries) {
  if (entries.rows() != entries.cols())
    throw NonHermitianInput("operator matrix must be square");
  if (entries.rows() == 0) throw EmptyInput("operator matrix is empty");
  const std::size_t n = entries.rows();
  const double tol = tolerances().hermitian_entry;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const T gap = entries(i, j) - conjugate(entries(j, i));
      if (std::sqrt(abs_sq(gap)) > tol)
        throw NonHermitianInput("matrix violates the Hermitian tolerance");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const T sym = (entries(i, j) + conjugate(entries(j, i))) * T(0.5);
      entries(i, j) = sym;
      entries(j, i) = conjugate(sym);
    }
  }
  entries_ = std::move(entries);
}

template <Scalar T>
double HermitianOperator<T>::trace() const {
  double acc = 0.0;
  for (std::size_t i = 0; i < dim(); ++i) acc += real_part(entries_(i, i));
  return acc;
}

namespace {

template <Scalar T>
double offdiag_frobenius(const DenseMatrix<T>& a) {
  double acc = 0.0;
  const std::size_t n = a.rows();
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) acc += 2.0 * abs_sq(a(p, q));
  return std::sqrt(acc);
}

// One Jacobi rotation annihilating a(p, q). J has J[p][p] = J[q][q] = c,
// J[p][q] = s*u, J[q][p] = -s*conj(u) with u the phase of a(p, q); the update
// is A <- J* A J and V <- V J.
template <Scalar T>
void jacobi_rotate(DenseMatrix<T>& a, DenseMatrix<T>& v, std::size_t p,
                   std::size_t q) {
  const T apq = a(p, q);
  const double mag = std::sqrt(abs_sq(apq));
  if (mag == 0.0) return;
  const T u = apq * T(1.0 / mag);
  const double app = real_part(a(p, p));
  const double aqq = real_part(a(q, q));
  const double theta2 = (app - aqq) / (2.0 * mag);
  const double t = theta2 >= 0.0
                       ? -1.0 / (theta2 + std::sqrt(1.0 + theta2 * theta2))
                       : 1.0 / (-theta2 + std::sqrt(1.0 + theta2 * theta2));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const std::size_t n = a.rows();
  // Column update: A <- A J.
  for (std::size_t k = 0; k < n; ++k) {
    const T akp = a(k, p);
    const T akq = a(k, q);
    a(k, p) = akp * T(c) - akq * (T(s) * conjugate(u));
    a(k, q) = akp * (T(s) * u) + akq * T(c);
  }
  // Row update: A <- J* A.
  for (std::size_t k = 0; k < n; ++k) {
    const T apk = a(p, k);
    const T aqk = a(q, k);
    a(p, k) = apk * T(c) - aqk * (T(s) * u);
    a(q, k) = apk * (T(s) * conjugate(u)) + aqk * T(c);
  }
  a(p, q) = T{};
  a(q, p) = T{};
  a(p, p) = T(real_part(a(p, p)));
  a(q, q) = T(real_part(a(q, q)));

  for (std::size_t k = 0; k < n; ++k) {
    const T vkp = v(k, p);
    const T vkq = v(k, q);
    v(k, p) = vkp * T(c) - vkq * (T(s) * conjugate(u));
    v(k, q) = vkp * (T(s) * u) + vkq * T(c);
  }
}

template <Scalar T>
void fix_phase(DenseMatrix<T>& v, std::size_t col, double floor) {
  const std::size_t n = v.rows();
  for (std::size_t k = 0; k < n; ++k) {
    const double mag = std::sqrt(abs_sq(v(k, col)));
    if (mag > floor) {
      const T factor = conjugate(v(k, col)) * T(1.0 / mag);
      for (std::size_t r = 0; r < n; ++r) v(r, col) = v(r, col) * factor;
      v(k, col) = T(std::sqrt(abs_sq(v(k, col))));
      return;
    }
  }
}

}  // namespace

template <Scalar T>
EigenDecomposition<T> hermitian_eigen(const HermitianOperator<T>& h) {
  const std::size_t n = h.dim();
  DenseMatrix<T> a = h.matrix();
  DenseMatrix<T> v = DenseMatrix<T>::identity(n);

  const Tolerances& tol = tolerances();
  const double stop = tol.jacobi_offdiag * frobenius_norm(a);
  // Entries below this cannot push off(A) past the stopping threshold even
  // if every pair is skipped.
  const double skip = n > 1 ? stop / (2.0 * static_cast<double>(n)) : 0.0;

  for (int sweep = 0; sweep < tol.jacobi_max_sweeps; ++sweep) {
    if (offdiag_frobenius(a) <= stop) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::sqrt(abs_sq(a(p, q))) > skip) jacobi_rotate(a, v, p, q);
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) {
                     return real_part(a(x, x)) < real_part(a(y, y));
                   });

  EigenDecomposition<T> out;
  out.eigenvalues.resize(n);
  out.eigenvectors = DenseMatrix<T>(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    out.eigenvalues[c] = real_part(a(order[c], order[c]));
    for (std::size_t r = 0; r < n; ++r)
      out.eigenvectors(r, c) = v(r, order[c]);
    fix_phase(out.eigenvectors, c, tol.eigvec_phase_floor);
  }
  return out;
}

template <Scalar T>
HermitianOperator<T> operator_power(const HermitianOperator<T>& h, double p) {
  const EigenDecomposition<T> eig = hermitian_eigen(h);
  const std::size_t n = h.dim();
  const double lambda_max = eig.eigenvalues.back();
  const double lambda_min = eig.eigenvalues.front();
  if (p < 0.0 && lambda_min <= tolerances().positive_definite * lambda_max)
    throw SingularOperator("operator_power: operator is not positive definite");
  const bool fractional = p != std::floor(p);
  if (fractional && lambda_min < -tolerances().positive_definite *
                                     std::max(std::abs(lambda_max), 1.0))
    throw SingularOperator("operator_power: fractional power of an operator "
                           "with a negative eigenvalue");

  DenseMatrix<T> scaled(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    double lambda = eig.eigenvalues[c];
    if (fractional && lambda < 0.0) lambda = 0.0;  // roundoff only, by the check
    const double powered = std::pow(lambda, p);
    for (std::size_t r = 0; r < n; ++r)
      scaled(r, c) = eig.eigenvectors(r, c) * T(powered);
  }
  return HermitianOperator<T>(matmul(scaled, adjoint(eig.eigenvectors)));
}

template class HermitianOperator<double>;
template class HermitianOperator<cplx>;
template EigenDecomposition<double> hermitian_eigen<double>(
    const HermitianOperator<double>&);
template EigenDecomposition<cplx> hermitian_eigen<cplx>(
    const HermitianOperator<cplx>&);
template HermitianOperator<double> operator_power<double>(
    const HermitianOperator<double>&, double);
template HermitianOperator<cplx> operator_power<cplx>(
    const HermitianOperator<cplx>&, double);

}  // namespace framered

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "framered/matrix.hpp"
#include "framered/tolerances.hpp"

namespace framered {

// Self-adjoint operator on an n-dimensional space. Construction verifies the
// Hermitian invariant (per-entry tolerance) and then stores the exactly
// symmetrized matrix (A + A*)/2 so downstream kernels can rely on it.
template <Scalar T>
class HermitianOperator {
 public:
  explicit HermitianOperator(DenseMatrix<T> entries);

  std::size_t dim() const { return entries_.rows(); }
  const DenseMatrix<T>& matrix() const { return entries_; }
  double trace() const;

  static HermitianOperator identity(std::size_t n) {
    return HermitianOperator(DenseMatrix<T>::identity(n));
  }

 private:
  DenseMatrix<T> entries_;
};

template <Scalar T>
struct EigenDecomposition {
  std::vector<double> eigenvalues;  // ascending
  DenseMatrix<T> eigenvectors;      // orthonormal columns, fixed phase
};

// Cyclic Jacobi diagonalization. Deterministic: a fixed sweep order, a fixed
// stopping threshold relative to the input Frobenius norm, ascending
// eigenvalue sort with stable ties, and the phase convention that the first
// eigenvector component with modulus above the floor is real and positive.
template <Scalar T>
EigenDecomposition<T> hermitian_eigen(const HermitianOperator<T>& h);

// V diag(lambda^p) V*. Negative powers require positive definiteness:
// lambda_min > positive_definite tolerance * lambda_max.
template <Scalar T>
HermitianOperator<T> operator_power(const HermitianOperator<T>& h, double p);

struct PlaneRotation {
  std::size_t i = 0;  // surplus index (diagonal above target before the step)
  std::size_t j = 0;  // deficit index; its entry is set to the target exactly
  double angle = 0.0;
  double phase = 0.0;
};

using RotationLog = std::vector<PlaneRotation>;

// Rotates g = Q*GQ into constant diagonal `target` with at most dim-1 plane
// rotations, preserving the spectrum. Requires trace(g) = target * dim within
// the relative trace tolerance. Pivot rule: pair the smallest remaining
// deficit against the largest remaining surplus, ties to the lowest index.
template <Scalar T>
std::pair<HermitianOperator<T>, RotationLog> givens_equalize_diagonal(
    const HermitianOperator<T>& g, double target);

}  // namespace framered

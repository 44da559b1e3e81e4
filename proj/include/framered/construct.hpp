#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "framered/frame.hpp"
#include "framered/hermitian.hpp"

namespace framered {

// Target spectrum for a unit-norm frame of `vector_count` vectors. The
// eigenvalues must be positive and sum to the vector count.
struct SpectrumSpec {
  std::vector<double> eigenvalues;  // ascending after validation
  std::size_t vector_count = 0;
};

// Target redundancy pair for a unit-norm frame.
struct RedundancyRequest {
  std::size_t dim = 0;
  std::size_t vector_count = 0;
  double r1 = 0.0;  // lower redundancy
  double r2 = 0.0;  // upper redundancy
};

// Unit-norm frame whose frame operator has the prescribed eigenvalues.
// Route: embed diag(lambda, 0...) as an N x N Gram matrix, equalize its
// diagonal to 1 with plane rotations, then factor the result back into n x N
// synthesis form through its top eigenpairs.
template <Scalar T = double>
Frame<T> frame_with_spectrum(const SpectrumSpec& spec);

// Same, with verbose access to the rotation log of the equalization step.
template <Scalar T = double>
std::pair<Frame<T>, RotationLog> frame_with_spectrum_logged(
    const SpectrumSpec& spec);

// Unit-norm frame with prescribed lower and upper redundancy. Fills the
// middle eigenvalues with the constant (N - r1 - r2)/(n - 2); a request is
// feasible iff (n-1) r1 + r2 <= N and N <= r1 + (n-1) r2 (for n = 2 these
// collapse to r1 + r2 = N).
template <Scalar T = double>
Frame<T> frame_with_redundancies(const RedundancyRequest& request);

// Unit-norm tight frame: constant spectrum N/n.
template <Scalar T = double>
Frame<T> tight_witness(std::size_t n, std::size_t count);

}  // namespace framered

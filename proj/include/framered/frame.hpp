#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "framered/hermitian.hpp"
#include "framered/matrix.hpp"

namespace framered {

struct FrameBounds {
  double lower = 0.0;  // optimal A
  double upper = 0.0;  // optimal B
};

// Ordered, finite sequence of vectors in an n-dimensional space. Zero
// vectors are allowed and counted; the spanning flag is computed once at
// construction via the numerical rank of the synthesis matrix. Operations
// that need an actual frame (a spanning sequence) say so and throw
// NotAFrame otherwise.
template <Scalar T>
class Frame {
 public:
  using scalar_type = T;

  Frame(std::vector<Vec<T>> vectors, std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return vectors_.size(); }
  static constexpr Field field() { return field_of<T>(); }
  bool spanning() const { return spanning_; }

  const std::vector<Vec<T>>& vectors() const { return vectors_; }
  const Vec<T>& vector(std::size_t i) const { return vectors_[i]; }

  bool is_zero(std::size_t i) const;
  std::size_t nonzero_count() const;

  // n x N matrix whose columns are the vectors.
  DenseMatrix<T> synthesis_matrix() const;

 private:
  std::size_t dim_ = 0;
  std::vector<Vec<T>> vectors_;
  bool spanning_ = false;
};

using RealFrame = Frame<double>;
using ComplexFrame = Frame<cplx>;

template <Scalar T>
Frame<T> make_frame(std::vector<Vec<T>> vectors, std::size_t dim);

// Frame coefficients (<x, phi_i>)_i.
template <Scalar T>
Vec<T> analysis(const Frame<T>& f, const Vec<T>& x);

// sum_i c_i phi_i.
template <Scalar T>
Vec<T> synthesis(const Frame<T>& f, const Vec<T>& coefficients);

template <Scalar T>
HermitianOperator<T> frame_operator(const Frame<T>& f);

// Frame operator of the vectorwise-normalized sequence: the sum of rank-one
// projections onto the spans of the nonzero vectors. Zero vectors contribute
// nothing.
template <Scalar T>
HermitianOperator<T> normalized_frame_operator(const Frame<T>& f);

template <Scalar T>
FrameBounds frame_bounds(const Frame<T>& f);

template <Scalar T>
Frame<T> canonical_dual(const Frame<T>& f);

// Nonzero vectors rescaled to unit norm, zero vectors kept in place.
template <Scalar T>
Frame<T> normalized_copy(const Frame<T>& f);

// Example families: {e1 (s times), e2, ..., en}; {e1, e1, ..., en, en};
// and the family concentrated around e1 with overlap sqrt(1 - eps^2).
template <Scalar T = double>
Frame<T> example_phi1(std::size_t n, std::size_t s);
template <Scalar T = double>
Frame<T> example_phi2(std::size_t n);
template <Scalar T = double>
Frame<T> example_phi3(std::size_t n, double eps);

template <Scalar T>
Frame<T> apply_operator(const Frame<T>& f, const DenseMatrix<T>& t);
template <Scalar T>
Frame<T> scale_vectors(const Frame<T>& f, const Vec<T>& factors);
template <Scalar T>
Frame<T> permute(const Frame<T>& f, const std::vector<std::size_t>& pi);

template <Scalar T>
Frame<T> concat(const Frame<T>& f, const Frame<T>& g);

// Seeded i.i.d. standard-normal vectors (complex: independent real and
// imaginary parts), resampled until spanning.
template <Scalar T>
Frame<T> random_frame(std::size_t n, std::size_t count, std::uint64_t seed);

// Seeded Haar-like unitary via repeated Gram-Schmidt of a Gaussian matrix.
template <Scalar T>
DenseMatrix<T> random_unitary(std::size_t n, std::uint64_t seed);

// Seeded invertible operator with spectral condition number at most
// kappa_max, built as U diag(sigma) V* with sigma in [1/sqrt(k), sqrt(k)].
template <Scalar T>
DenseMatrix<T> random_conditioned(std::size_t n, double kappa_max,
                                  std::uint64_t seed);

}  // namespace framered

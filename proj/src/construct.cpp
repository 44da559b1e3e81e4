#include "framered/construct.hpp"

#include <algorithm>
#include <cmath>

#include "framered/errors.hpp"

namespace framered {

namespace {

std::vector<double> validated_spectrum(const SpectrumSpec& spec) {
  const std::size_t n = spec.eigenvalues.size();
  if (n == 0) throw InvalidSpectrum("spectrum is empty");
  if (spec.vector_count < n)
    throw InvalidSpectrum("need at least dim vectors");
  std::vector<double> lambda = spec.eigenvalues;
  std::sort(lambda.begin(), lambda.end());
  if (lambda.front() <= 0.0)
    throw InvalidSpectrum("eigenvalues must be positive");
  double sum = 0.0;
  for (double l : lambda) sum += l;
  const double expected = static_cast<double>(spec.vector_count);
  if (std::abs(sum - expected) > tolerances().spectrum_sum * expected)
    throw InvalidSpectrum("eigenvalues must sum to the vector count");
  return lambda;
}

}  // namespace

template <Scalar T>
std::pair<Frame<T>, RotationLog> frame_with_spectrum_logged(
    const SpectrumSpec& spec) {
  const std::vector<double> lambda = validated_spectrum(spec);
  const std::size_t n = lambda.size();
  const std::size_t count = spec.vector_count;

  DenseMatrix<T> seed(count, count);
  for (std::size_t i = 0; i < n; ++i) seed(i, i) = T(lambda[i]);
  auto [gram, log] =
      givens_equalize_diagonal(HermitianOperator<T>(std::move(seed)), 1.0);

  // The top n eigenpairs of the Gram matrix carry the frame; the remaining
  // N - n eigenvalues are zero up to roundoff.
  const EigenDecomposition<T> eig = hermitian_eigen(gram);
  std::vector<Vec<T>> vectors(count, Vec<T>(n, T{}));
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t col = count - n + j;
    const double mu = std::max(eig.eigenvalues[col], 0.0);
    const double root = std::sqrt(mu);
    for (std::size_t i = 0; i < count; ++i)
      vectors[i][j] = T(root) * conjugate(eig.eigenvectors(i, col));
  }
  return {Frame<T>(std::move(vectors), n), std::move(log)};
}

template <Scalar T>
Frame<T> frame_with_spectrum(const SpectrumSpec& spec) {
  return frame_with_spectrum_logged<T>(spec).first;
}

template <Scalar T>
Frame<T> frame_with_redundancies(const RedundancyRequest& request) {
  const std::size_t n = request.dim;
  const std::size_t count = request.vector_count;
  const double nn = static_cast<double>(count);
  const double mean = nn / static_cast<double>(n);
  if (n < 2) throw InvalidParameter("dimension must be at least 2");
  if (count < n) throw InvalidParameter("need at least dim vectors");
  const double r1 = request.r1;
  const double r2 = request.r2;
  if (!(r1 > 0.0 && r1 <= mean))
    throw InfeasibleRequest("r1 must lie in (0, N/n]");
  if (!(r2 >= mean && r2 < nn))
    throw InfeasibleRequest("r2 must lie in [N/n, N)");

  const Tolerances& tol = tolerances();
  if (n == 2) {
    if (r1 + r2 > nn + tol.n2_sum_rule)
      throw InfeasibleRequest("(n-1) r1 + r2 <= N is violated");
    if (r1 + r2 < nn - tol.n2_sum_rule)
      throw InfeasibleRequest(
          "for dimension 2 the pair must satisfy r1 + r2 = N exactly");
  } else {
    if ((static_cast<double>(n) - 1.0) * r1 + r2 > nn + tol.feasibility_slack)
      throw InfeasibleRequest("(n-1) r1 + r2 <= N is violated");
    if (nn > r1 + (static_cast<double>(n) - 1.0) * r2 + tol.feasibility_slack)
      throw InfeasibleRequest(
          "N <= r1 + (n-1) r2 is violated; no middle eigenvalues in [r1, r2] "
          "can complete the spectrum");
  }

  std::vector<double> lambda;
  lambda.reserve(n);
  lambda.push_back(r1);
  if (n > 2) {
    const double middle = (nn - r1 - r2) / (static_cast<double>(n) - 2.0);
    for (std::size_t i = 0; i + 2 < n; ++i) lambda.push_back(middle);
  }
  lambda.push_back(r2);
  // Absorb the division roundoff so the sum meets the spectrum invariant.
  double sum = 0.0;
  for (double l : lambda) sum += l;
  if (n > 2 && sum != nn) {
    const double fix = (nn - sum) / (static_cast<double>(n) - 2.0);
    for (std::size_t i = 1; i + 1 < n; ++i) lambda[i] += fix;
  }

  return frame_with_spectrum<T>(SpectrumSpec{std::move(lambda), count});
}

template <Scalar T>
Frame<T> tight_witness(std::size_t n, std::size_t count) {
  if (n < 1 || count < n)
    throw InvalidParameter("tight_witness requires N >= n >= 1");
  const double value =
      static_cast<double>(count) / static_cast<double>(n);
  std::vector<double> lambda(n, value);
  // Round the sum onto N exactly; n * (N/n) can be off by one ulp.
  double sum = 0.0;
  for (double l : lambda) sum += l;
  lambda.back() += static_cast<double>(count) - sum;
  return frame_with_spectrum<T>(SpectrumSpec{std::move(lambda), count});
}

#define FRAMERED_INSTANTIATE(T)                                              \
  template Frame<T> frame_with_spectrum<T>(const SpectrumSpec&);             \
  template std::pair<Frame<T>, RotationLog> frame_with_spectrum_logged<T>(   \
      const SpectrumSpec&);                                                  \
  template Frame<T> frame_with_redundancies<T>(const RedundancyRequest&);    \
  template Frame<T> tight_witness<T>(std::size_t, std::size_t);

FRAMERED_INSTANTIATE(double)
FRAMERED_INSTANTIATE(cplx)

#undef FRAMERED_INSTANTIATE

}  // namespace framered

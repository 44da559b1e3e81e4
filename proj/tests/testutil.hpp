#pragma once

// Shared generators and independent oracles for the test suites. Everything
// here is deliberately separate from the library implementation paths it
// checks: sphere scans instead of eigensolves, subset dynamic programming
// instead of matroid augmentation.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "framered/frame.hpp"
#include "framered/hermitian.hpp"
#include "framered/matrix.hpp"
#include "framered/rng.hpp"

namespace framered::testing {

template <Scalar T>
T gaussian(Rng& rng) {
  if constexpr (std::is_same_v<T, double>) {
    return rng.normal();
  } else {
    return cplx(rng.normal(), rng.normal());
  }
}

template <Scalar T>
DenseMatrix<T> gaussian_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  DenseMatrix<T> m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = gaussian<T>(rng);
  return m;
}

template <Scalar T>
HermitianOperator<T> random_hermitian(std::size_t n, Rng& rng) {
  const DenseMatrix<T> a = gaussian_matrix<T>(n, n, rng);
  return HermitianOperator<T>(scale(add(a, adjoint(a)), T(0.5)));
}

template <Scalar T>
HermitianOperator<T> random_spd(std::size_t n, Rng& rng) {
  const DenseMatrix<T> a = gaussian_matrix<T>(n, n, rng);
  DenseMatrix<T> aat = matmul(a, adjoint(a));
  for (std::size_t i = 0; i < n; ++i) aat(i, i) += T(0.5);
  return HermitianOperator<T>(std::move(aat));
}

// Zero-free random frame; resamples while any vector is numerically tiny or
// the smallest singular value falls under 1e-8 of the largest, to keep
// partition certificates stable.
template <Scalar T>
Frame<T> stable_random_frame(std::size_t n, std::size_t count,
                             std::uint64_t seed) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    Frame<T> f = random_frame<T>(n, count, seed + 7777 * attempt);
    bool ok = true;
    for (std::size_t i = 0; i < f.size() && ok; ++i)
      if (norm(f.vector(i)) < 1e-6) ok = false;
    if (!ok) continue;
    const auto eig = hermitian_eigen(frame_operator(f));
    if (eig.eigenvalues.front() >=
        1e-8 * std::max(eig.eigenvalues.back(), 1.0))
      return f;
  }
}

// --- sphere-scan oracles -------------------------------------------------

// Extremes of a function over the unit circle on a uniform angle grid.
template <class F>
std::pair<double, double> circle_scan(const F& f, std::size_t points) {
  double lo = 0.0, hi = 0.0;
  bool first = true;
  for (std::size_t i = 0; i < points; ++i) {
    const double angle =
        2.0 * std::numbers::pi * static_cast<double>(i) /
        static_cast<double>(points);
    const double v = f(std::cos(angle), std::sin(angle));
    if (first || v < lo) lo = v;
    if (first || v > hi) hi = v;
    first = false;
  }
  return {lo, hi};
}

// Extremes over the 2-sphere on a Fibonacci spiral grid.
template <class F>
std::pair<double, double> sphere_scan(const F& f, std::size_t points) {
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  double lo = 0.0, hi = 0.0;
  bool first = true;
  for (std::size_t i = 0; i < points; ++i) {
    const double z =
        1.0 - 2.0 * (static_cast<double>(i) + 0.5) / static_cast<double>(points);
    const double radius = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double angle = golden * static_cast<double>(i);
    const double v = f(radius * std::cos(angle), radius * std::sin(angle), z);
    if (first || v < lo) lo = v;
    if (first || v > hi) hi = v;
    first = false;
  }
  return {lo, hi};
}

// --- brute-force partition oracles (N <= ~16) ----------------------------

template <Scalar T>
std::vector<char> subset_independence_table(const Frame<T>& f) {
  const std::size_t count = f.size();
  std::vector<char> independent(std::size_t{1} << count, 0);
  independent[0] = 1;
  for (std::size_t mask = 1; mask < independent.size(); ++mask) {
    std::vector<std::size_t> indices;
    for (std::size_t i = 0; i < count; ++i)
      if (mask & (std::size_t{1} << i)) indices.push_back(i);
    if (indices.size() > f.dim()) continue;
    DenseMatrix<T> m(f.dim(), indices.size());
    for (std::size_t c = 0; c < indices.size(); ++c)
      for (std::size_t r = 0; r < f.dim(); ++r)
        m(r, c) = f.vector(indices[c])[r];
    independent[mask] = rank(m) == indices.size() ? 1 : 0;
  }
  return independent;
}

template <Scalar T>
std::vector<char> subset_spanning_table(const Frame<T>& f) {
  const std::size_t count = f.size();
  std::vector<char> spanning(std::size_t{1} << count, 0);
  for (std::size_t mask = 1; mask < spanning.size(); ++mask) {
    std::vector<std::size_t> indices;
    for (std::size_t i = 0; i < count; ++i)
      if (mask & (std::size_t{1} << i)) indices.push_back(i);
    if (indices.size() < f.dim()) continue;
    DenseMatrix<T> m(f.dim(), indices.size());
    for (std::size_t c = 0; c < indices.size(); ++c)
      for (std::size_t r = 0; r < f.dim(); ++r)
        m(r, c) = f.vector(indices[c])[r];
    spanning[mask] = rank(m) == f.dim() ? 1 : 0;
  }
  return spanning;
}

// Minimum number of independent blocks covering all indices, by subset DP.
template <Scalar T>
std::size_t brute_force_min_independent_cover(const Frame<T>& f) {
  const std::vector<char> independent = subset_independence_table(f);
  const std::size_t full = (std::size_t{1} << f.size()) - 1;
  std::vector<std::size_t> best(full + 1, ~std::size_t{0});
  best[0] = 0;
  for (std::size_t mask = 1; mask <= full; ++mask) {
    // Iterate nonempty submasks of mask.
    for (std::size_t sub = mask; sub != 0; sub = (sub - 1) & mask) {
      if (!independent[sub]) continue;
      const std::size_t rest = best[mask ^ sub];
      if (rest != ~std::size_t{0} && rest + 1 < best[mask])
        best[mask] = rest + 1;
    }
  }
  return best[full];
}

// Maximum number of disjoint spanning subsets, by subset DP.
template <Scalar T>
std::size_t brute_force_max_spanning_packing(const Frame<T>& f) {
  const std::vector<char> spanning = subset_spanning_table(f);
  const std::size_t full = (std::size_t{1} << f.size()) - 1;
  std::vector<std::size_t> best(full + 1, 0);
  for (std::size_t mask = 1; mask <= full; ++mask) {
    for (std::size_t sub = mask; sub != 0; sub = (sub - 1) & mask) {
      if (!spanning[sub]) continue;
      best[mask] = std::max(best[mask], best[mask ^ sub] + 1);
    }
  }
  return best[full];
}

}  // namespace framered::testing

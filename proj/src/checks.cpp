#include "framered/checks.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "framered/rng.hpp"

namespace framered {

bool PropertyReport::all_pass() const {
  for (const PropertyCheck& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

constexpr double kTol = 1e-9;

bool close(double a, double b, double tol = kTol) {
  return std::abs(a - b) <= tol;
}

template <Scalar T>
T random_nonzero_scalar(Rng& rng) {
  const double magnitude = rng.uniform(0.5, 2.0);
  if constexpr (std::is_same_v<T, double>) {
    return rng.uniform() < 0.5 ? -magnitude : magnitude;
  } else {
    const double angle = rng.uniform(0.0, 6.283185307179586);
    return cplx(magnitude * std::cos(angle), magnitude * std::sin(angle));
  }
}

}  // namespace

template <Scalar T>
PropertyReport check_frame(const Frame<T>& f, std::uint64_t seed) {
  PropertyReport out;
  out.report = redundancy_report(f);
  const RedundancyReport& rep = out.report;
  const double mean = static_cast<double>(rep.nonzero_count) /
                      static_cast<double>(f.dim());

  const FrameBounds bounds = frame_bounds(f);
  out.tight = bounds.upper - bounds.lower <= kTol * bounds.upper;

  auto add = [&](const std::string& name, bool applicable, bool pass,
                 const std::string& detail = "") {
    out.checks.push_back(PropertyCheck{name, applicable, pass, detail});
  };

  // An equal-norm Parseval frame reports N/n on both ends.
  {
    bool equal_norm = true;
    const double first = norm_sq(f.vector(0));
    for (std::size_t i = 1; i < f.size(); ++i)
      if (!close(norm_sq(f.vector(i)), first, kTol * (1.0 + first)))
        equal_norm = false;
    const bool parseval =
        max_abs_diff(frame_operator(f).matrix(),
                     DenseMatrix<T>::identity(f.dim())) <= kTol;
    const bool applicable = equal_norm && parseval;
    const double ratio = static_cast<double>(f.size()) /
                         static_cast<double>(f.dim());
    add("equal_norm_parseval", applicable,
        !applicable || (close(rep.lower, ratio) && close(rep.upper, ratio)));
  }

  // Uniform redundancy iff the normalized version is tight.
  {
    const FrameBounds nb = frame_bounds(normalized_copy(f));
    const bool normalized_tight = nb.upper - nb.lower <= kTol * nb.upper;
    add("uniform_iff_normalized_tight", true,
        rep.uniform == normalized_tight);

    const bool unit_redundancy = close(rep.lower, 1.0) && close(rep.upper, 1.0);
    bool gram_identity = true;
    if (unit_redundancy) {
      std::vector<std::size_t> nonzero;
      for (std::size_t i = 0; i < f.size(); ++i)
        if (!f.is_zero(i)) nonzero.push_back(i);
      const Frame<T> unit = normalized_copy(f);
      for (std::size_t a : nonzero) {
        for (std::size_t b : nonzero) {
          const T g = inner(unit.vector(a), unit.vector(b));
          const double want = a == b ? 1.0 : 0.0;
          if (std::sqrt(abs_sq(g - T(want))) > 1e-8) gram_identity = false;
        }
      }
    }
    add("orthonormal_limit", unit_redundancy,
        !unit_redundancy || gram_identity);
  }

  // Redundancies are positive, ordered, and finite.
  add("bounds_positive_finite", true,
      rep.lower > 0.0 && rep.lower <= rep.upper &&
          std::isfinite(rep.upper));

  // Appending an orthonormal basis shifts both redundancies by one.
  {
    std::vector<Vec<T>> basis;
    for (std::size_t i = 0; i < f.dim(); ++i) {
      Vec<T> e(f.dim(), T{});
      e[i] = T{1};
      basis.push_back(std::move(e));
    }
    const RedundancyReport shifted =
        redundancy_report(concat(f, Frame<T>(std::move(basis), f.dim())));
    add("basis_union_shift", true,
        close(shifted.lower, rep.lower + 1.0) &&
            close(shifted.upper, rep.upper + 1.0));
  }

  // Invariance under a unitary, nonzero scalings, and a permutation.
  {
    Rng rng(seed ^ 0xd5d5d5d5ull);
    const DenseMatrix<T> u = random_unitary<T>(f.dim(), seed + 1);
    const RedundancyReport ru = redundancy_report(apply_operator(f, u));
    Vec<T> factors(f.size());
    for (auto& c : factors) c = random_nonzero_scalar<T>(rng);
    const RedundancyReport rs = redundancy_report(scale_vectors(f, factors));
    std::vector<std::size_t> pi(f.size());
    std::iota(pi.begin(), pi.end(), std::size_t{0});
    for (std::size_t i = f.size(); i > 1; --i)
      std::swap(pi[i - 1], pi[rng.integer(i)]);
    const RedundancyReport rp = redundancy_report(permute(f, pi));
    const bool ok = close(ru.lower, rep.lower) && close(ru.upper, rep.upper) &&
                    close(rs.lower, rep.lower) && close(rs.upper, rep.upper) &&
                    close(rp.lower, rep.lower) && close(rp.upper, rep.upper);
    add("invariance", true, ok);
  }

  // Mean value: the spectrum sums to the nonzero count.
  {
    double sum = 0.0;
    for (double v : rep.spectrum) sum += v;
    add("mean_value_trace", true,
        close(sum, static_cast<double>(rep.nonzero_count),
              kTol * (1.0 + static_cast<double>(rep.nonzero_count))));
  }

  // Redundancy range bounds; stated for zero-free frames in dim >= 2.
  {
    const bool applicable = rep.nonzero_count == f.size() && f.dim() >= 2;
    bool ok = true;
    if (applicable) {
      const double count = static_cast<double>(f.size());
      ok = rep.lower > 0.0 && rep.lower <= mean + kTol &&
           mean <= rep.upper + kTol && rep.upper < count &&
           (static_cast<double>(f.dim()) - 1.0) * rep.lower + rep.upper <=
               count + 1e-8;
      if (close(rep.lower, mean) || close(rep.upper, mean))
        ok = ok && rep.uniform;
    }
    add("redundancy_range", applicable, ok);
  }

  return out;
}

template PropertyReport check_frame<double>(const Frame<double>&,
                                            std::uint64_t);
template PropertyReport check_frame<cplx>(const Frame<cplx>&, std::uint64_t);

}  // namespace framered

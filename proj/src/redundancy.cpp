#include "framered/redundancy.hpp"

#include <cmath>
#include <utility>

#include "framered/construct.hpp"
#include "framered/errors.hpp"
#include "framered/rng.hpp"

namespace framered {

namespace {

template <Scalar T>
Vec<T> probe_vector(std::size_t dim, Rng& rng) {
  Vec<T> v(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if constexpr (std::is_same_v<T, double>) {
      v[i] = rng.normal();
    } else {
      v[i] = cplx(rng.normal(), rng.normal());
    }
  }
  return v;
}

}  // namespace

template <Scalar T>
QuadraticFormOracle<T>::QuadraticFormOracle(std::size_t dim,
                                            Evaluator evaluator)
    : dim_(dim), evaluator_(std::move(evaluator)) {
  if (dim_ == 0) throw InvalidParameter("oracle dimension must be >= 1");
  if (!evaluator_) throw InvalidParameter("oracle needs an evaluator");
  Rng rng(0xf0a11ull);
  for (int probe = 0; probe < 3; ++probe) {
    const Vec<T> x = probe_vector<T>(dim_, rng);
    const double first = evaluator_(x);
    const double second = evaluator_(x);
    if (!(first == second))
      throw InvalidParameter("oracle evaluator is not deterministic");
  }
}

template <Scalar T>
double redundancy_at(const Frame<T>& f, const Vec<T>& x) {
  if (x.size() != f.dim())
    throw DimensionMismatch("redundancy_at: vector length does not match dim");
  const double len = norm(x);
  if (std::abs(len - 1.0) > tolerances().unit_vector)
    throw NotUnitVector("redundancy_at expects a unit vector");
  double acc = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f.is_zero(i)) continue;
    acc += abs_sq(inner(x, f.vector(i))) / norm_sq(f.vector(i));
  }
  return acc;
}

template <Scalar T>
double quadratic_extension(const Frame<T>& f, const Vec<T>& x) {
  if (x.size() != f.dim())
    throw DimensionMismatch("quadratic_extension: vector length mismatch");
  // Same sum as redundancy_at without the sphere restriction; this equals
  // ||x||^2 R(x/||x||) and vanishes at x = 0.
  double acc = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f.is_zero(i)) continue;
    acc += abs_sq(inner(x, f.vector(i))) / norm_sq(f.vector(i));
  }
  return acc;
}

template <Scalar T>
RedundancyReport redundancy_report(const Frame<T>& f) {
  if (!f.spanning())
    throw NotAFrame("redundancy_report: vectors do not span the space");
  const EigenDecomposition<T> eig =
      hermitian_eigen(normalized_frame_operator(f));
  RedundancyReport report;
  report.spectrum = eig.eigenvalues;
  report.lower = report.spectrum.front();
  report.upper = report.spectrum.back();
  report.uniform = report.upper - report.lower <=
                   tolerances().uniformity_rel * report.upper;
  report.nonzero_count = f.nonzero_count();
  return report;
}

template <Scalar T>
bool equivalent(const Frame<T>& f, const Frame<T>& g, double tol) {
  if (f.dim() != g.dim())
    throw DimensionMismatch("equivalent: frames live in different dimensions");
  if (tol < 0.0) tol = tolerances().equivalence;
  if (f.nonzero_count() != g.nonzero_count()) return false;
  return max_abs_diff(normalized_frame_operator(f).matrix(),
                      normalized_frame_operator(g).matrix()) <= tol;
}

namespace {

template <Scalar T>
Vec<T> basis_vector(std::size_t dim, std::size_t k) {
  Vec<T> e(dim, T{});
  e[k] = T{1};
  return e;
}

}  // namespace

template <Scalar T>
HermitianOperator<T> recover_operator(const QuadraticFormOracle<T>& q) {
  const std::size_t n = q.dim();
  DenseMatrix<T> m(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Vec<T> plus = basis_vector<T>(n, a);
      Vec<T> minus = plus;
      plus[b] += T{1};
      minus[b] -= T{1};
      double real = 0.25 * (q(plus) - q(minus));
      double imag = 0.0;
      if constexpr (std::is_same_v<T, cplx>) {
        Vec<T> plus_i = basis_vector<T>(n, a);
        Vec<T> minus_i = plus_i;
        plus_i[b] += cplx(0.0, 1.0);
        minus_i[b] -= cplx(0.0, 1.0);
        imag = 0.25 * (q(plus_i) - q(minus_i));
      }
      // <T e_a, e_b> is the (b, a) entry.
      if constexpr (std::is_same_v<T, double>) {
        m(b, a) = real;
      } else {
        m(b, a) = cplx(real, imag);
      }
    }
  }
  // Polarization of a true quadratic form is Hermitian up to oracle noise;
  // symmetrize so the probe check below is the single arbiter.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const T sym = (m(i, j) + conjugate(m(j, i))) * T(0.5);
      m(i, j) = sym;
      m(j, i) = conjugate(sym);
    }
  }
  HermitianOperator<T> recovered{std::move(m)};

  Rng rng(0x9e3779b9ull);
  const double tol = tolerances().polarization_probe;
  for (int probe = 0; probe < 50; ++probe) {
    const Vec<T> x = probe_vector<T>(n, rng);
    const Vec<T> tx = apply(recovered.matrix(), x);
    const double predicted = real_part(inner(tx, x));
    const double observed = q(x);
    if (std::abs(predicted - observed) > tol * (1.0 + std::abs(observed)))
      throw NotAQuadraticForm(
          "oracle disagrees with its polarization; the parallelogram "
          "identity fails");
  }
  return recovered;
}

template <Scalar T>
ValidationVerdict<T> validate_redundancy_function(
    const QuadraticFormOracle<T>& q) {
  ValidationVerdict<T> verdict;
  try {
    verdict.recovered = recover_operator(q);
    verdict.parallelogram_ok = true;
  } catch (const NotAQuadraticForm&) {
    return verdict;
  }

  const EigenDecomposition<T> eig = hermitian_eigen(*verdict.recovered);
  const std::size_t n = q.dim();
  verdict.strictly_positive =
      eig.eigenvalues.front() > tolerances().strict_positivity;
  verdict.trace = verdict.recovered->trace();
  const double rounded = std::round(verdict.trace);
  verdict.integer_trace =
      std::abs(verdict.trace - rounded) <= tolerances().integer_trace &&
      rounded >= static_cast<double>(n);
  verdict.accepted = verdict.parallelogram_ok && verdict.strictly_positive &&
                     verdict.integer_trace;

  if (verdict.accepted) {
    // Rescale the recovered spectrum so it sums to the integer vector count
    // exactly, then realize it as a unit-norm frame.
    const std::size_t count = static_cast<std::size_t>(rounded);
    std::vector<double> lambda = eig.eigenvalues;
    const double factor = rounded / verdict.trace;
    double sum = 0.0;
    for (double& l : lambda) {
      l *= factor;
      sum += l;
    }
    lambda.back() += rounded - sum;
    verdict.witness = frame_with_spectrum<T>(SpectrumSpec{lambda, count});
  }
  return verdict;
}

template <Scalar T>
OnbSumDiagnostic onb_sum_diagnostic(const QuadraticFormOracle<T>& q,
                                    int bases, std::uint64_t seed) {
  const std::size_t n = q.dim();
  OnbSumDiagnostic diag;
  bool first = true;
  for (int b = 0; b < bases; ++b) {
    const DenseMatrix<T> u = random_unitary<T>(n, seed + 7919ull * b);
    double sum = 0.0;
    for (std::size_t c = 0; c < n; ++c) {
      Vec<T> e(n);
      for (std::size_t r = 0; r < n; ++r) e[r] = u(r, c);
      sum += q(e);
    }
    if (first || sum < diag.min_sum) diag.min_sum = sum;
    if (first || sum > diag.max_sum) diag.max_sum = sum;
    first = false;
  }
  return diag;
}

template <Scalar T>
SandwichMargins conditioning_sandwich(const Frame<T>& f,
                                      const DenseMatrix<T>& t) {
  if (!f.spanning())
    throw NotAFrame("conditioning_sandwich: input is not a frame");
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f.is_zero(i))
      throw ZeroVectorPresent("conditioning_sandwich needs nonzero vectors");
  if (t.rows() != f.dim() || t.cols() != f.dim())
    throw DimensionMismatch("operator must be dim x dim");

  const HermitianOperator<T> gram{matmul(adjoint(t), t)};
  const EigenDecomposition<T> eig = hermitian_eigen(gram);
  const double smallest = eig.eigenvalues.front();
  const double largest = eig.eigenvalues.back();
  if (smallest <= tolerances().positive_definite * largest)
    throw SingularOperator("conditioning_sandwich: operator is singular");
  const double kappa = std::sqrt(largest / smallest);
  const double kappa_sq = largest / smallest;

  const RedundancyReport before = redundancy_report(f);
  const RedundancyReport after = redundancy_report(apply_operator(f, t));

  SandwichMargins margins;
  margins.kappa = kappa;
  margins.lower = std::min(after.lower - before.lower / kappa_sq,
                           after.upper - before.upper / kappa_sq);
  margins.upper = std::min(kappa_sq * before.lower - after.lower,
                           kappa_sq * before.upper - after.upper);
  return margins;
}

template <Scalar T>
QuadraticFormOracle<T> oracle_from_frame(const Frame<T>& f) {
  return QuadraticFormOracle<T>(
      f.dim(), [f](const Vec<T>& x) { return quadratic_extension(f, x); });
}

template <Scalar T>
QuadraticFormOracle<T> oracle_from_operator(const HermitianOperator<T>& t) {
  return QuadraticFormOracle<T>(t.dim(), [t](const Vec<T>& x) {
    return real_part(inner(apply(t.matrix(), x), x));
  });
}

template <Scalar T>
QuadraticFormOracle<T> oracle_from_sphere_function(
    std::size_t dim, std::function<double(const Vec<T>&)> f) {
  return QuadraticFormOracle<T>(
      dim, [f = std::move(f)](const Vec<T>& x) {
        const double len_sq = norm_sq(x);
        if (len_sq == 0.0) return 0.0;
        const double len = std::sqrt(len_sq);
        Vec<T> unit = x;
        for (auto& e : unit) e = e * T(1.0 / len);
        return len_sq * f(unit);
      });
}

#define FRAMERED_INSTANTIATE(T)                                               \
  template class QuadraticFormOracle<T>;                                      \
  template double redundancy_at<T>(const Frame<T>&, const Vec<T>&);           \
  template double quadratic_extension<T>(const Frame<T>&, const Vec<T>&);     \
  template RedundancyReport redundancy_report<T>(const Frame<T>&);            \
  template bool equivalent<T>(const Frame<T>&, const Frame<T>&, double);      \
  template HermitianOperator<T> recover_operator<T>(                          \
      const QuadraticFormOracle<T>&);                                         \
  template ValidationVerdict<T> validate_redundancy_function<T>(              \
      const QuadraticFormOracle<T>&);                                         \
  template OnbSumDiagnostic onb_sum_diagnostic<T>(                            \
      const QuadraticFormOracle<T>&, int, std::uint64_t);                     \
  template SandwichMargins conditioning_sandwich<T>(const Frame<T>&,          \
                                                    const DenseMatrix<T>&);   \
  template QuadraticFormOracle<T> oracle_from_frame<T>(const Frame<T>&);      \
  template QuadraticFormOracle<T> oracle_from_operator<T>(                    \
      const HermitianOperator<T>&);                                           \
  template QuadraticFormOracle<T> oracle_from_sphere_function<T>(             \
      std::size_t, std::function<double(const Vec<T>&)>);

FRAMERED_INSTANTIATE(double)
FRAMERED_INSTANTIATE(cplx)

#undef FRAMERED_INSTANTIATE

}  // namespace framered

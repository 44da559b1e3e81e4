#include <cmath>
#include <vector>

#include "framered/errors.hpp"
#include "framered/hermitian.hpp"

namespace framered {

namespace {

// Applies the plane rotation J (J[p][p] = J[q][q] = cos, J[p][q] = sin*u,
// J[q][p] = -sin*conj(u), u = exp(i*phase)) as G <- J* G J.
template <Scalar T>
void apply_rotation(DenseMatrix<T>& g, std::size_t p, std::size_t q, double c,
                    double s, T u) {
  const std::size_t n = g.rows();
  for (std::size_t k = 0; k < n; ++k) {
    const T gkp = g(k, p);
    const T gkq = g(k, q);
    g(k, p) = gkp * T(c) - gkq * (T(s) * conjugate(u));
    g(k, q) = gkp * (T(s) * u) + gkq * T(c);
  }
  for (std::size_t k = 0; k < n; ++k) {
    const T gpk = g(p, k);
    const T gqk = g(q, k);
    g(p, k) = gpk * T(c) - gqk * (T(s) * u);
    g(q, k) = gpk * (T(s) * conjugate(u)) + gqk * T(c);
  }
}

inline double unit_phase(double x, double& out_u_real) {
  out_u_real = x < 0.0 ? -1.0 : 1.0;
  return x < 0.0 ? M_PI : 0.0;
}

template <Scalar T>
double coupling_phase(const T& gpq, T& out_u);

template <>
double coupling_phase<double>(const double& gpq, double& out_u) {
  return unit_phase(gpq, out_u);
}

template <>
double coupling_phase<cplx>(const cplx& gpq, cplx& out_u) {
  const double mag = std::sqrt(abs_sq(gpq));
  if (mag == 0.0) {
    out_u = cplx(1.0, 0.0);
    return 0.0;
  }
  out_u = gpq * (1.0 / mag);
  return std::arg(gpq);
}

}  // namespace

template <Scalar T>
std::pair<HermitianOperator<T>, RotationLog> givens_equalize_diagonal(
    const HermitianOperator<T>& g, double target) {
  const std::size_t n = g.dim();
  const double trace = g.trace();
  const double expected = target * static_cast<double>(n);
  const Tolerances& tol = tolerances();
  if (std::abs(trace - expected) >
      tol.trace_match_rel * std::max(1.0, std::abs(expected)))
    throw TraceMismatch("givens_equalize_diagonal: trace does not match "
                        "target * dim");

  DenseMatrix<T> a = g.matrix();
  RotationLog log;
  const double settle = tol.diagonal_settle * std::max(1.0, std::abs(target));

  for (std::size_t step = 0; n > 0 && step < n - 1; ++step) {
    // Smallest remaining deficit vs largest remaining surplus, ties to the
    // lowest index. Stops when no pair is left beyond the settle tolerance.
    std::size_t deficit_idx = n;
    double deficit_best = 0.0;
    std::size_t surplus_idx = n;
    double surplus_best = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double dev = real_part(a(i, i)) - target;
      if (dev < -settle) {
        const double deficit = -dev;
        if (deficit_idx == n || deficit < deficit_best) {
          deficit_best = deficit;
          deficit_idx = i;
        }
      } else if (dev > settle) {
        if (surplus_idx == n || dev > surplus_best) {
          surplus_best = dev;
          surplus_idx = i;
        }
      }
    }
    if (deficit_idx == n || surplus_idx == n) break;

    const std::size_t p = surplus_idx;
    const std::size_t q = deficit_idx;
    T u{};
    const double phase = coupling_phase(a(p, q), u);
    const double beta = std::sqrt(abs_sq(a(p, q)));
    const double a2 = real_part(a(p, p)) - target;  // > 0
    const double a0 = real_part(a(q, q)) - target;  // < 0
    const double t = (-beta + std::sqrt(beta * beta - a2 * a0)) / a2;
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    apply_rotation(a, p, q, c, s, u);
    a(q, q) = T(target);  // exact by construction; clears rotation roundoff
    a(p, p) = T(real_part(a(p, p)));
    log.push_back(PlaneRotation{p, q, std::atan(t), phase});
  }

  return {HermitianOperator<T>(std::move(a)), std::move(log)};
}

template std::pair<HermitianOperator<double>, RotationLog>
givens_equalize_diagonal<double>(const HermitianOperator<double>&, double);
template std::pair<HermitianOperator<cplx>, RotationLog>
givens_equalize_diagonal<cplx>(const HermitianOperator<cplx>&, double);

}  // namespace framered

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "framered/frame.hpp"
#include "framered/hermitian.hpp"

namespace framered {

// Extremes and full spectrum of the normalized frame operator. lower and
// upper are the minimum and maximum of the redundancy function on the unit
// sphere; the spectrum sums to the number of nonzero vectors.
struct RedundancyReport {
  double lower = 0.0;
  double upper = 0.0;
  std::vector<double> spectrum;  // ascending
  bool uniform = false;
  std::size_t nonzero_count = 0;
};

// Black-box quadratic functional. Construction verifies determinism of the
// evaluator on three probe points.
template <Scalar T>
class QuadraticFormOracle {
 public:
  using Evaluator = std::function<double(const Vec<T>&)>;

  QuadraticFormOracle(std::size_t dim, Evaluator evaluator);

  std::size_t dim() const { return dim_; }
  double operator()(const Vec<T>& x) const { return evaluator_(x); }

 private:
  std::size_t dim_;
  Evaluator evaluator_;
};

// sum_i ||P_i x||^2 over nonzero frame vectors, for unit x.
template <Scalar T>
double redundancy_at(const Frame<T>& f, const Vec<T>& x);

// ||x||^2 * redundancy_at(f, x/||x||), with value 0 at x = 0.
template <Scalar T>
double quadratic_extension(const Frame<T>& f, const Vec<T>& x);

template <Scalar T>
RedundancyReport redundancy_report(const Frame<T>& f);

// Equality of redundancy functions, decided through the normalized frame
// operators. Frames with different nonzero counts are never equivalent.
template <Scalar T>
bool equivalent(const Frame<T>& f, const Frame<T>& g, double tol = -1.0);

// Entrywise polarization recovery of the self-adjoint operator behind a
// quadratic form. Throws NotAQuadraticForm when probe residuals reveal that
// the oracle violates the parallelogram law.
template <Scalar T>
HermitianOperator<T> recover_operator(const QuadraticFormOracle<T>& q);

template <Scalar T>
struct ValidationVerdict {
  bool parallelogram_ok = false;
  std::optional<HermitianOperator<T>> recovered;
  bool strictly_positive = false;
  double trace = 0.0;
  bool integer_trace = false;
  bool accepted = false;
  std::optional<Frame<T>> witness;  // unit-norm frame realizing the function
};

// Decides whether a function on the sphere (given through its quadratic
// extension) is the redundancy function of some frame, and produces a
// witness when it is.
template <Scalar T>
ValidationVerdict<T> validate_redundancy_function(
    const QuadraticFormOracle<T>& q);

// Diagnostic companion to the validation: sums the oracle over the elements
// of seeded random orthonormal bases. For a redundancy function every sum
// equals the number of nonzero vectors; the converse direction of this test
// needs dimension >= 3.
struct OnbSumDiagnostic {
  double min_sum = 0.0;
  double max_sum = 0.0;
};

template <Scalar T>
OnbSumDiagnostic onb_sum_diagnostic(const QuadraticFormOracle<T>& q,
                                    int bases = 20, std::uint64_t seed = 0);

struct SandwichMargins {
  double lower = 0.0;  // min over +/- of R(t f) - kappa^-2 R(f)
  double upper = 0.0;  // min over +/- of kappa^2 R(f) - R(t f)
  double kappa = 0.0;
};

// Margins of the condition-number sandwich for redundancies of a transformed
// frame. Both margins are nonnegative up to roundoff.
template <Scalar T>
SandwichMargins conditioning_sandwich(const Frame<T>& f,
                                      const DenseMatrix<T>& t);

// Plumbing: oracles for the common sources of quadratic forms.
template <Scalar T>
QuadraticFormOracle<T> oracle_from_frame(const Frame<T>& f);
template <Scalar T>
QuadraticFormOracle<T> oracle_from_operator(const HermitianOperator<T>& t);
// Quadratic-scaling extension of a function defined on the unit sphere.
template <Scalar T>
QuadraticFormOracle<T> oracle_from_sphere_function(
    std::size_t dim, std::function<double(const Vec<T>&)> f);

}  // namespace framered

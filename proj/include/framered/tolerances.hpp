#pragma once

namespace framered {

// Central tolerance record. Every numerical threshold used by the library
// lives here; functions read the global instance unless a caller passes an
// explicit override where the interface allows one.
struct Tolerances {
  // numeric kernels
  double hermitian_entry = 1e-12;   // per-entry |H - H*| bound
  double jacobi_offdiag = 1e-14;    // sweep stop: off(A) <= this * ||H||_F
  int jacobi_max_sweeps = 100;
  double eigvec_phase_floor = 1e-12;   // first component used for phase fix
  double positive_definite = 1e-10;    // lambda_min > this * lambda_max
  double trace_match_rel = 1e-9;       // givens equalization precondition
  double diagonal_settle = 1e-11;      // |diag - target| below which an index
                                       // counts as equalized

  // frames and redundancy
  double unit_vector = 1e-9;        // | ||x|| - 1 | bound for redundancy_at
  double uniformity_rel = 1e-9;     // uniform iff R+ - R- <= this * R+
  double equivalence = 1e-9;        // max-norm gap of normalized operators
  double polarization_probe = 1e-8; // relative probe residual in recovery
  double strict_positivity = 1e-9;  // smallest eigenvalue of recovered T
  double integer_trace = 1e-6;      // |trace - round(trace)| bound

  // construction
  double spectrum_sum = 1e-9;       // |sum(lambda) - N| bound
  double feasibility_slack = 1e-12; // slack on redundancy-pair feasibility
  double n2_sum_rule = 1e-9;        // n = 2: |r1 + r2 - N| bound
};

const Tolerances& tolerances();

}  // namespace framered

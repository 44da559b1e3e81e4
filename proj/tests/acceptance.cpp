// Acceptance suite: every criterion prints one PASS/FAIL line and the
// binary exits nonzero if any of them fails. Tolerances are pinned in the
// checks themselves.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <vector>

#include "framered/construct.hpp"
#include "framered/errors.hpp"
#include "framered/partition.hpp"
#include "framered/redundancy.hpp"
#include "testutil.hpp"

using namespace framered;
namespace ft = framered::testing;

namespace {

int g_failures = 0;
int g_checks = 0;

void expect(bool condition, const char* what) {
  ++g_checks;
  if (!condition) {
    ++g_failures;
    std::printf("    check failed: %s\n", what);
  }
}

#define EXPECT(cond) expect((cond), #cond)

struct CorpusEntry {
  std::size_t n;
  std::size_t count;
  bool complex_field;
  std::uint64_t seed;
};

std::vector<CorpusEntry> corpus(std::size_t frames, std::size_t max_n,
                                std::size_t max_count, std::uint64_t seed0) {
  std::vector<CorpusEntry> out;
  Rng rng(seed0);
  for (std::size_t t = 0; t < frames; ++t) {
    const std::size_t n = 2 + rng.integer(max_n - 1);
    const std::size_t count = n + rng.integer(max_count - n + 1);
    out.push_back(CorpusEntry{n, count, t % 2 == 1, seed0 + 131 * t});
  }
  return out;
}

template <Scalar T>
Frame<T> rotated_scaled_basis(std::size_t n, std::uint64_t seed) {
  std::vector<Vec<T>> vectors;
  for (std::size_t i = 0; i < n; ++i) {
    Vec<T> e(n, T{});
    e[i] = T{1};
    vectors.push_back(std::move(e));
  }
  Frame<T> basis(std::move(vectors), n);
  Rng rng(seed);
  Vec<T> factors(n);
  for (auto& c : factors) c = T(rng.uniform(0.3, 2.5));
  return scale_vectors(apply_operator(basis, random_unitary<T>(n, seed)),
                       factors);
}

// --- criterion 1 ----------------------------------------------------------

bool criterion_named_examples() {
  const int before = g_failures;
  for (std::size_t n = 2; n <= 5; ++n) {
    for (std::size_t s = 1; s <= 5; ++s) {
      const auto rep = redundancy_report(example_phi1<double>(n, s));
      EXPECT(std::abs(rep.lower - 1.0) <= 1e-9);
      EXPECT(std::abs(rep.upper - double(s)) <= 1e-9);
    }
    const auto rep2 = redundancy_report(example_phi2<double>(n));
    EXPECT(std::abs(rep2.lower - 2.0) <= 1e-9);
    EXPECT(std::abs(rep2.upper - 2.0) <= 1e-9);
    EXPECT(rep2.uniform);
  }
  return g_failures == before;
}

// --- criterion 2 ----------------------------------------------------------

bool criterion_phi3_bounds() {
  const int before = g_failures;
  const auto rep = redundancy_report(example_phi3<double>(4, 0.5));
  const double floor_upper = 1.0 + 3.0 * 0.75;  // 1 + (N-1)(1 - eps^2)
  EXPECT(rep.upper >= floor_upper - 1e-9);
  EXPECT(rep.upper < 4.0 + 1e-9);
  EXPECT(rep.lower > 0.0);
  EXPECT(rep.lower <= 0.25 + 1e-9);  // eps^2
  return g_failures == before;
}

// --- criterion 3 ----------------------------------------------------------

template <Scalar T>
void invariant_battery_on(const CorpusEntry& e) {
  const auto f = ft::stable_random_frame<T>(e.n, e.count, e.seed);
  const auto rep = redundancy_report(f);
  const double ratio = double(e.count) / double(e.n);

  // Equal-norm Parseval frame associated with (n, N) reports N/n.
  {
    auto witness = tight_witness<T>(e.n, e.count);
    witness = apply_operator(witness, random_unitary<T>(e.n, e.seed + 1));
    const double to_parseval = std::sqrt(double(e.n) / double(e.count));
    Vec<T> factors(witness.size(), T(to_parseval));
    const auto parseval = scale_vectors(witness, factors);
    const auto prep = redundancy_report(parseval);
    EXPECT(std::abs(prep.lower - ratio) <= 1e-9);
    EXPECT(std::abs(prep.upper - ratio) <= 1e-9);
  }

  // The uniform flag matches tightness of the normalized version, and
  // redundancy one means an orthonormal basis.
  {
    const FrameBounds nb = frame_bounds(normalized_copy(f));
    const bool normalized_tight = nb.upper - nb.lower <= 1e-9 * nb.upper;
    EXPECT(rep.uniform == normalized_tight);

    const auto basis = rotated_scaled_basis<T>(e.n, e.seed + 2);
    const auto brep = redundancy_report(basis);
    EXPECT(std::abs(brep.lower - 1.0) <= 1e-9);
    EXPECT(std::abs(brep.upper - 1.0) <= 1e-9);
    const auto unit = normalized_copy(basis);
    double gram_gap = 0.0;
    for (std::size_t a = 0; a < unit.size(); ++a)
      for (std::size_t b = 0; b < unit.size(); ++b) {
        const T g = inner(unit.vector(a), unit.vector(b));
        gram_gap = std::max(
            gram_gap, std::sqrt(abs_sq(g - T(a == b ? 1.0 : 0.0))));
      }
    EXPECT(gram_gap <= 1e-8);
  }

  // Positive, ordered, finite.
  EXPECT(rep.lower > 0.0);
  EXPECT(rep.lower <= rep.upper);
  EXPECT(std::isfinite(rep.upper));

  // Union with an orthonormal basis, sub/superadditive unions.
  {
    std::vector<Vec<T>> vectors;
    for (std::size_t i = 0; i < e.n; ++i) {
      Vec<T> b(e.n, T{});
      b[i] = T{1};
      vectors.push_back(std::move(b));
    }
    const auto shifted =
        redundancy_report(concat(f, Frame<T>(std::move(vectors), e.n)));
    EXPECT(std::abs(shifted.lower - (rep.lower + 1.0)) <= 1e-9);
    EXPECT(std::abs(shifted.upper - (rep.upper + 1.0)) <= 1e-9);

    const auto g = ft::stable_random_frame<T>(e.n, e.n + 2, e.seed + 3);
    const auto grep = redundancy_report(g);
    const auto urep = redundancy_report(concat(f, g));
    EXPECT(urep.lower >= rep.lower + grep.lower - 1e-9);
    EXPECT(urep.upper <= rep.upper + grep.upper + 1e-9);
  }

  // Invariances.
  {
    Rng rng(e.seed + 4);
    const auto u = random_unitary<T>(e.n, e.seed + 5);
    const auto ur = redundancy_report(apply_operator(f, u));
    EXPECT(std::abs(ur.lower - rep.lower) <= 1e-9);
    EXPECT(std::abs(ur.upper - rep.upper) <= 1e-9);

    Vec<T> factors(f.size());
    for (auto& c : factors) {
      if constexpr (std::is_same_v<T, double>) {
        c = (rng.uniform() < 0.5 ? -1.0 : 1.0) * rng.uniform(0.2, 3.0);
      } else {
        const double angle = rng.uniform(0.0, 6.283185307179586);
        const double mag = rng.uniform(0.2, 3.0);
        c = cplx(mag * std::cos(angle), mag * std::sin(angle));
      }
    }
    const auto sr = redundancy_report(scale_vectors(f, factors));
    EXPECT(std::abs(sr.lower - rep.lower) <= 1e-9);
    EXPECT(std::abs(sr.upper - rep.upper) <= 1e-9);

    std::vector<std::size_t> pi(f.size());
    std::iota(pi.begin(), pi.end(), std::size_t{0});
    for (std::size_t i = f.size(); i > 1; --i)
      std::swap(pi[i - 1], pi[rng.integer(i)]);
    const auto pr = redundancy_report(permute(f, pi));
    EXPECT(std::abs(pr.lower - rep.lower) <= 1e-9);
    EXPECT(std::abs(pr.upper - rep.upper) <= 1e-9);
  }
}

bool criterion_invariant_battery() {
  const int before = g_failures;
  for (const CorpusEntry& e : corpus(200, 6, 12, 0xd3)) {
    if (e.complex_field)
      invariant_battery_on<cplx>(e);
    else
      invariant_battery_on<double>(e);
  }
  return g_failures == before;
}

// --- criterion 4 ----------------------------------------------------------

bool criterion_redundancy_range() {
  const int before = g_failures;
  for (const CorpusEntry& e : corpus(200, 6, 12, 0xa4)) {
    const auto run = [&](auto tag) {
      using T = decltype(tag);
      const auto f = ft::stable_random_frame<T>(e.n, e.count, e.seed);
      const auto rep = redundancy_report(f);
      const double ratio = double(e.count) / double(e.n);
      EXPECT(rep.lower > 0.0);
      EXPECT(rep.lower <= ratio + 1e-9);
      EXPECT(rep.upper >= ratio - 1e-9);
      EXPECT(rep.upper < double(e.count));
      EXPECT((double(e.n) - 1.0) * rep.lower + rep.upper <=
             double(e.count) + 1e-8);
      if (std::abs(rep.lower - ratio) <= 1e-9) EXPECT(rep.uniform);
    };
    if (e.complex_field)
      run(cplx{});
    else
      run(0.0);
  }
  return g_failures == before;
}

// --- criterion 5 ----------------------------------------------------------

bool criterion_construction() {
  const int before = g_failures;
  Rng rng(0xc5);

  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng.integer(5);
    const std::size_t count = n + rng.integer(13 - n);
    std::vector<double> lambda(n);
    double sum = 0.0;
    for (double& l : lambda) {
      l = rng.uniform(0.2, 2.0);
      sum += l;
    }
    double adjusted = 0.0;
    for (double& l : lambda) {
      l *= double(count) / sum;
      adjusted += l;
    }
    lambda.back() += double(count) - adjusted;
    const auto f = frame_with_spectrum(SpectrumSpec{lambda, count});
    for (std::size_t i = 0; i < f.size(); ++i)
      EXPECT(std::abs(norm(f.vector(i)) - 1.0) <= 1e-9);
    std::sort(lambda.begin(), lambda.end());
    const auto rep = redundancy_report(f);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      worst = std::max(worst, std::abs(rep.spectrum[i] - lambda[i]));
    EXPECT(worst <= 1e-8);
  }

  int feasible_done = 0;
  while (feasible_done < 50) {
    const std::size_t n = 2 + rng.integer(5);
    const std::size_t count = n + rng.integer(13 - n);
    const double mean = double(count) / double(n);
    const double r1 = rng.uniform(0.05, mean);
    const double r2 = n == 2 ? double(count) - r1
                             : rng.uniform(mean, double(count) - 1e-3);
    if (n > 2 && ((double(n) - 1.0) * r1 + r2 > double(count) ||
                  double(count) > r1 + (double(n) - 1.0) * r2))
      continue;
    if (!(r2 >= mean && r2 < double(count))) continue;
    const auto f =
        frame_with_redundancies(RedundancyRequest{n, count, r1, r2});
    const auto rep = redundancy_report(f);
    EXPECT(std::abs(rep.lower - r1) <= 1e-8);
    EXPECT(std::abs(rep.upper - r2) <= 1e-8);
    for (std::size_t i = 0; i < f.size(); ++i)
      EXPECT(std::abs(norm(f.vector(i)) - 1.0) <= 1e-9);
    ++feasible_done;
  }

  const std::vector<RedundancyRequest> infeasible{
      {2, 3, 1.2, 2.0},   // (n-1) r1 + r2 > N
      {2, 3, 1.4, 1.8},
      {2, 4, 1.0, 2.0},   // n = 2 with r1 + r2 < N
      {2, 5, 0.5, 3.0},
      {2, 6, 2.0, 5.0},
      {3, 6, 1.0, 2.0},   // boundary: r2 = N/n, r1 < N/n
      {3, 9, 2.0, 3.0},
      {4, 8, 1.0, 2.0},
      {5, 10, 1.5, 2.0},
      {6, 12, 1.0, 2.0},
      {3, 6, 1.9, 2.4},   // 2 * 1.9 + 2.4 = 6.2 > 6
      {4, 9, 2.1, 2.8},   // 3 * 2.1 + 2.8 = 9.1 > 9
      {5, 11, 2.0, 3.2},  // 4 * 2 + 3.2 = 11.2 > 11
      {3, 7, 2.3, 2.5},   // 2 * 2.3 + 2.5 = 7.1 > 7
      {6, 13, 2.0, 2.1},  // r2 below N/n
      {3, 6, 0.0, 3.0},   // r1 out of range
      {3, 6, -1.0, 3.0},
      {3, 6, 1.0, 6.0},   // r2 out of range
      {3, 6, 1.0, 1.5},   // r2 below N/n
      {3, 6, 2.5, 3.0},   // r1 above N/n
  };
  for (const auto& request : infeasible) {
    bool rejected = false;
    try {
      frame_with_redundancies(request);
    } catch (const InfeasibleRequest&) {
      rejected = true;
    } catch (const InvalidParameter&) {
      rejected = true;
    }
    EXPECT(rejected);
  }

  return g_failures == before;
}

// --- criterion 6 ----------------------------------------------------------

bool criterion_partitions() {
  const int before = g_failures;
  for (const CorpusEntry& e : corpus(200, 5, 12, 0xb6)) {
    const auto run = [&](auto tag) {
      using T = decltype(tag);
      const auto f = ft::stable_random_frame<T>(e.n, e.count, e.seed);
      const auto rep = redundancy_report(f);

      const auto independent = partition_independent(f);
      EXPECT(independent.blocks.size() <=
             static_cast<std::size_t>(std::ceil(rep.upper - 1e-9)));
      const auto spanning = pack_spanning(f);
      EXPECT(spanning.blocks.size() >=
             static_cast<std::size_t>(std::floor(rep.lower + 1e-9)));

      if (f.size() <= 9) {
        EXPECT(independent.blocks.size() ==
               ft::brute_force_min_independent_cover(f));
        EXPECT(spanning.blocks.size() ==
               ft::brute_force_max_spanning_packing(f));
      }

      const auto floor_lower =
          static_cast<std::size_t>(std::floor(rep.lower + 1e-9));
      if (floor_lower >= 1)
        EXPECT(erasure_robust(f, floor_lower - 1).robust);
    };
    if (e.complex_field)
      run(cplx{});
    else
      run(0.0);
  }
  return g_failures == before;
}

// --- criterion 7 ----------------------------------------------------------

bool criterion_sphere_oracle() {
  const int before = g_failures;
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t count = 2 + trial % 7;
    const auto f =
        ft::stable_random_frame<double>(2, 2 + count, 0x57 + 31 * trial);
    const auto rep = redundancy_report(f);
    const auto [lo, hi] = ft::circle_scan(
        [&](double c, double s) {
          return redundancy_at(f, Vec<double>{c, s});
        },
        100000);
    EXPECT(std::abs(lo - rep.lower) <= 1e-4);
    EXPECT(std::abs(hi - rep.upper) <= 1e-4);
  }
  return g_failures == before;
}

// --- criterion 8 ----------------------------------------------------------

bool criterion_polarization() {
  const int before = g_failures;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const std::size_t count = n + trial % 5;
    const auto run = [&](auto tag) {
      using T = decltype(tag);
      const auto f =
          ft::stable_random_frame<T>(n, count, 0x88 + 17 * trial);
      const auto recovered = recover_operator(oracle_from_frame(f));
      EXPECT(max_abs_diff(recovered.matrix(),
                          normalized_frame_operator(f).matrix()) <= 1e-8);
      const auto verdict =
          validate_redundancy_function(oracle_from_frame(f));
      EXPECT(verdict.accepted);
      EXPECT(verdict.witness.has_value());
    };
    if (trial % 2 == 1)
      run(cplx{});
    else
      run(0.0);
  }

  // Non-integer trace rejection.
  DenseMatrix<double> t(3, 3);
  t(0, 0) = 1.0;
  t(1, 1) = 1.0;
  t(2, 2) = 1.5;
  const auto fractional = validate_redundancy_function(
      oracle_from_operator(HermitianOperator<double>{t}));
  EXPECT(!fractional.integer_trace);
  EXPECT(!fractional.accepted);

  // Quartic on the sphere violates the parallelogram identity.
  const auto quartic = oracle_from_sphere_function<double>(
      3, [](const Vec<double>& x) {
        double acc = 0.0;
        for (double v : x) acc += v * v * v * v;
        return acc;
      });
  const auto rejected = validate_redundancy_function(quartic);
  EXPECT(!rejected.parallelogram_ok);
  EXPECT(!rejected.accepted);

  return g_failures == before;
}

// --- criterion 9 ----------------------------------------------------------

bool criterion_sandwich() {
  const int before = g_failures;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const std::size_t count = n + 1 + trial % 4;
    const auto run = [&](auto tag) {
      using T = decltype(tag);
      const auto f =
          ft::stable_random_frame<T>(n, count, 0x99 + 23 * trial);
      const auto t = random_conditioned<T>(n, 10.0, 0x11 + 29 * trial);
      const auto margins = conditioning_sandwich(f, t);
      EXPECT(margins.lower >= -1e-8);
      EXPECT(margins.upper >= -1e-8);

      // Canonical dual: single power of the frame-operator condition number.
      const auto rep = redundancy_report(f);
      const auto dual_rep = redundancy_report(canonical_dual(f));
      const FrameBounds bounds = frame_bounds(f);
      const double kappa = bounds.upper / bounds.lower;
      EXPECT(dual_rep.lower >= rep.lower / kappa - 1e-8);
      EXPECT(dual_rep.lower <= rep.lower * kappa + 1e-8);
      EXPECT(dual_rep.upper >= rep.upper / kappa - 1e-8);
      EXPECT(dual_rep.upper <= rep.upper * kappa + 1e-8);
    };
    if (trial % 2 == 1)
      run(cplx{});
    else
      run(0.0);
  }
  return g_failures == before;
}

struct Criterion {
  int id;
  const char* name;
  std::function<bool()> body;
  double budget_seconds;  // 0 = no stated budget
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "named example families exact", criterion_named_examples, 1.0},
      {2, "phi3 bounds", criterion_phi3_bounds, 0.0},
      {3, "redundancy invariant battery", criterion_invariant_battery, 30.0},
      {4, "redundancy range bounds", criterion_redundancy_range, 0.0},
      {5, "construction round-trip", criterion_construction, 30.0},
      {6, "partition guarantees", criterion_partitions, 300.0},
      {7, "sphere-sampling oracle", criterion_sphere_oracle, 0.0},
      {8, "polarization recovery", criterion_polarization, 0.0},
      {9, "condition-number sandwich", criterion_sandwich, 0.0},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    const int check_count = g_checks;
    const auto start = std::chrono::steady_clock::now();
    bool pass = false;
    try {
      pass = c.body();
    } catch (const std::exception& e) {
      std::printf("    exception: %s\n", e.what());
      pass = false;
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (c.budget_seconds > 0.0 && seconds > c.budget_seconds) {
      std::printf("    runtime %.2f s exceeded the %.0f s budget\n", seconds,
                  c.budget_seconds);
      pass = false;
    }
    std::printf("[%s] criterion %d: %s (%d checks, %.2f s)\n",
                pass ? "PASS" : "FAIL", c.id, c.name, g_checks - check_count,
                seconds);
    if (!pass) ++failed;
  }
  if (failed > 0) {
    std::printf("%d criterion(s) failed\n", failed);
    return 1;
  }
  std::printf("all %zu criteria passed\n", criteria.size());
  return 0;
}

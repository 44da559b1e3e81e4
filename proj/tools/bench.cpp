// Timing comparison of the serial reference kernels against the OpenMP
// paths: dense matrix products and the exhaustive erasure scan. Both paths
// must agree bit for bit; the benchmark reports the speedup and fails loudly
// on any mismatch.

#include <chrono>
#include <cstdio>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "framered/frame.hpp"
#include "framered/matrix.hpp"
#include "framered/partition.hpp"

namespace {

using namespace framered;
using clock_type = std::chrono::steady_clock;

double time_ms(const std::function<void()>& body, int repeats) {
  body();  // warm-up
  const auto start = clock_type::now();
  for (int r = 0; r < repeats; ++r) body();
  const auto stop = clock_type::now();
  return std::chrono::duration<double, std::milli>(stop - start).count() /
         repeats;
}

void bench_matmul(std::size_t n, int repeats) {
  const RealFrame f = random_frame<double>(n, n, 42);
  const RealMatrix a = f.synthesis_matrix();
  const RealMatrix b = adjoint(a);
  RealMatrix serial, parallel;
  const double t_serial =
      time_ms([&] { serial = matmul_serial(a, b); }, repeats);
  const double t_parallel =
      time_ms([&] { parallel = matmul_parallel(a, b); }, repeats);
  const bool identical = serial == parallel;
  std::printf("matmul   n=%4zu   serial %8.3f ms   parallel %8.3f ms   "
              "speedup %.2fx   identical %s\n",
              n, t_serial, t_parallel, t_serial / t_parallel,
              identical ? "yes" : "NO");
  if (!identical) std::exit(1);
}

void bench_erasure(std::size_t n, std::size_t count, std::size_t k,
                   int repeats) {
  const RealFrame f = random_frame<double>(n, count, 7);
  ErasureResult serial, parallel;
  const double t_serial =
      time_ms([&] { serial = erasure_robust_serial(f, k); }, repeats);
  const double t_parallel =
      time_ms([&] { parallel = erasure_robust(f, k); }, repeats);
  const bool identical =
      serial.robust == parallel.robust && serial.witness == parallel.witness;
  std::printf("erasure  N=%zu k=%zu   serial %8.3f ms   parallel %8.3f ms   "
              "speedup %.2fx   identical %s\n",
              count, k, t_serial, t_parallel, t_serial / t_parallel,
              identical ? "yes" : "NO");
  if (!identical) std::exit(1);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled; both paths run serially\n");
#endif
  bench_matmul(96, 20);
  bench_matmul(192, 5);
  bench_matmul(384, 2);
  bench_erasure(6, 24, 4, 3);
  bench_erasure(6, 28, 4, 2);
  return 0;
}

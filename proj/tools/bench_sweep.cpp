// Times the property sweep: serial reference vs the OpenMP kernel.
// Exits nonzero if the two disagree on anything.

#include <chrono>
#include <cstdint>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "semigap/sweep.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"benchmark: serial vs OpenMP property sweep"};
  std::int64_t max_b = 120;
  int workers = 0;
  app.add_option("--max-b", max_b, "largest b to sweep")
      ->capture_default_str();
  app.add_option("--workers", workers, "worker threads, 0 = all available");
  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  const int threads = workers > 0 ? workers : omp_get_max_threads();
#else
  const int threads = 1;
#endif

  auto start = std::chrono::steady_clock::now();
  const semigap::SweepSummary serial = semigap::verify_sweep_serial(max_b);
  const double serial_s = seconds_since(start);

  start = std::chrono::steady_clock::now();
  const semigap::SweepSummary parallel = semigap::verify_sweep(max_b, workers);
  const double parallel_s = seconds_since(start);

  std::printf("sweep up to b = %lld: %lld pairs, %lld checks per run\n",
              static_cast<long long>(max_b),
              static_cast<long long>(serial.pairs_checked),
              static_cast<long long>(serial.checks_passed +
                                     serial.checks_failed));
  std::printf("serial      %8.3f s\n", serial_s);
  std::printf("openmp(%2d)  %8.3f s   speedup %.2fx\n", threads, parallel_s,
              serial_s / parallel_s);

  const bool identical = serial.pairs_checked == parallel.pairs_checked &&
                         serial.checks_passed == parallel.checks_passed &&
                         serial.checks_failed == parallel.checks_failed;
  std::printf("results identical: %s\n", identical ? "yes" : "NO");
  if (!identical) return 1;
  if (!serial.ok()) {
    std::printf("property failures: %lld\n",
                static_cast<long long>(serial.checks_failed));
    return 1;
  }
  return 0;
}

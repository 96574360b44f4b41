// Timing comparison of the serial reference sweeps against the OpenMP
// versions. Results must match element for element; this only reports time.

#include <chrono>
#include <cstdio>
#include <omp.h>

#include "qpq/sweep.hpp"

namespace {

template <class F>
double time_of(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  const long cmax = argc > 1 ? std::atol(argv[1]) : 20;
  const long kmax = argc > 2 ? std::atol(argv[2]) : 60;
  const std::vector<std::pair<long, long>> pqs = {{3, 2}, {5, 2}, {5, 3}, {7, 2},
                                                  {7, 3}, {7, 5}, {11, 2}};

  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-24s %10s %10s %8s\n", "sweep", "serial(s)", "omp(s)", "speedup");

  const double os = time_of([&] { qpq::sweep::obstruction_sweep_serial(pqs, cmax, 9); });
  const double op = time_of([&] { qpq::sweep::obstruction_sweep_parallel(pqs, cmax, 9); });
  std::printf("%-24s %10.3f %10.3f %8.2f\n", "obstruction", os, op, os / op);

  const double rs = time_of([&] { qpq::sweep::oracle_sweep_serial(40, 99); });
  const double rp = time_of([&] { qpq::sweep::oracle_sweep_parallel(40, 99); });
  std::printf("%-24s %10.3f %10.3f %8.2f\n", "oracle agreement", rs, rp, rs / rp);

  const double ks = time_of([&] { qpq::sweep::kernel_grid_serial(kmax); });
  const double kp = time_of([&] { qpq::sweep::kernel_grid_parallel(kmax); });
  std::printf("%-24s %10.3f %10.3f %8.2f\n", "kernel grid", ks, kp, ks / kp);
  return 0;
}

// Timing comparison of the OpenMP sweep drivers against the serial
// reference path. Both must produce identical bytes; this only measures.

#include <chrono>
#include <cstdio>

#include "oscriesz/parallel.hpp"
#include "oscriesz/report.hpp"
#include "oscriesz/sweeps.hpp"

using namespace oscriesz;

namespace {

template <class F>
double time_ms(F&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  body();
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

void row(const char* name, double serial_ms, double parallel_ms) {
  std::printf("%-22s %10.1f ms %10.1f ms   x%.2f\n", name, serial_ms,
              parallel_ms, serial_ms / parallel_ms);
}

}  // namespace

int main() {
  std::printf("threads available: %d\n", max_threads());
  std::printf("%-22s %13s %13s   speedup\n", "workload", "serial", "parallel");

  const SweepGrid grid = SweepGrid::standard(1.0);

  row("cz-growth j<=12",
      time_ms([&] {
        cz_growth_sweep(0.0, 1.0, 12, grid, KernelOp::riesz, ExecMode::serial);
      }),
      time_ms([&] {
        cz_growth_sweep(0.0, 1.0, 12, grid, KernelOp::riesz,
                        ExecMode::parallel);
      }));

  row("heat grid",
      time_ms([&] {
        heat_compare_cases({-0.5, 0.0, 2.5}, {0.05, 0.1, 0.3, 1.0, 2.0},
                           {0.1, 0.4, 1.0, 2.0, 4.0}, ExecMode::serial);
      }),
      time_ms([&] {
        heat_compare_cases({-0.5, 0.0, 2.5}, {0.05, 0.1, 0.3, 1.0, 2.0},
                           {0.1, 0.4, 1.0, 2.0, 4.0}, ExecMode::parallel);
      }));

  row("pairing 2x{0,5}",
      time_ms([&] {
        pairing_cases(0.0, {1.0}, {0, 5}, 2, 7, KernelOp::riesz,
                      ExecMode::serial);
      }),
      time_ms([&] {
        pairing_cases(0.0, {1.0}, {0, 5}, 2, 7, KernelOp::riesz,
                      ExecMode::parallel);
      }));

  row("angular norms j<=16",
      time_ms([&] { angular_l2_norms(0.0, 1.0, 1, 16, 40, ExecMode::serial); }),
      time_ms(
          [&] { angular_l2_norms(0.0, 1.0, 1, 16, 40, ExecMode::parallel); }));

  return 0;
}

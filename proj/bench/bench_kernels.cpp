// Serial vs OpenMP timings for the d² checks. Results must agree exactly.
#include <chrono>
#include <cstdio>
#include <omp.h>

#include "rhmap/kernels.hpp"
#include "rhmap/mapping_model.hpp"

using namespace rhmap;

template <class F>
static double seconds(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());

  auto grid = default_grid();
  std::vector<GridResult> serial, parallel;
  double ts = seconds([&] { serial = sweep_d_squared(grid, false); });
  double tp = seconds([&] { parallel = sweep_d_squared(grid, true); });
  std::printf("grid sweep (%zu models): serial %.3fs  parallel %.3fs  agree=%s\n", grid.size(), ts, tp,
              serial == parallel ? "yes" : "NO");

  for (int k = 4; k <= 6; ++k) {
    auto M = build_sphere_mapping_model(2, k, 2, false);
    DSquaredReport a, b;
    double s1 = seconds([&] { a = check_d_squared(M.cdga()); });
    double s2 = seconds([&] { b = check_d_squared_parallel(M.cdga()); });
    std::printf("d^2 check m=2 k=%d n=2 (%zu generators): serial %.3fs  parallel %.3fs  agree=%s\n", k,
                M.generators().size(), s1, s2, a.pass() == b.pass() && a.failures.size() == b.failures.size() ? "yes" : "NO");
  }
  return 0;
}

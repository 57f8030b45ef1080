#include "rhmap/kernels.hpp"

#include <omp.h>

#include "rhmap/mapping_model.hpp"

namespace rhmap {

DSquaredReport check_d_squared_parallel(const Cdga& model) {
  const int n = static_cast<int>(model.size());
  std::vector<DSquaredFailure> slots(static_cast<std::size_t>(n));
  std::vector<char> failed(static_cast<std::size_t>(n), 0);
#pragma omp parallel for schedule(dynamic)
  for (int g = 0; g < n; ++g) {
    bool ok = true;
    auto f = check_generator(model, g, ok);
    if (!ok) {
      slots[static_cast<std::size_t>(g)] = std::move(f);
      failed[static_cast<std::size_t>(g)] = 1;
    }
  }
  DSquaredReport report;
  for (int g = 0; g < n; ++g)
    if (failed[static_cast<std::size_t>(g)]) report.failures.push_back(std::move(slots[static_cast<std::size_t>(g)]));
  return report;
}

std::vector<GridPoint> default_grid() {
  std::vector<GridPoint> grid;
  for (int m = 2; m <= 5; ++m)
    for (int k = 2; k <= 4; ++k)
      for (int n = 1; n <= 6; ++n)
        for (bool pointed : {false, true}) grid.push_back({m, k, n, pointed});
  return grid;
}

std::vector<GridResult> sweep_d_squared(const std::vector<GridPoint>& grid, bool parallel) {
  const int n = static_cast<int>(grid.size());
  std::vector<GridResult> out(grid.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int i = 0; i < n; ++i) {
    const auto& p = grid[static_cast<std::size_t>(i)];
    auto M = build_sphere_mapping_model(p.m, p.k, p.n, p.pointed);
    out[static_cast<std::size_t>(i)] = {p, M.generators().size(), check_d_squared(M.cdga()).pass()};
  }
  return out;
}

}  // namespace rhmap

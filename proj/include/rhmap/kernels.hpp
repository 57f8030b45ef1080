#pragma once

// Batch checks over many generators / many models, with OpenMP and serial
// versions that must agree exactly.

#include <cstddef>
#include <vector>

#include "rhmap/gca.hpp"

namespace rhmap {

/// Same report as check_d_squared, generators checked in parallel.
DSquaredReport check_d_squared_parallel(const Cdga& model);

struct GridPoint {
  int m = 2, k = 2, n = 1;
  bool pointed = false;
  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

struct GridResult {
  GridPoint point;
  std::size_t generators = 0;
  bool pass = false;
  friend bool operator==(const GridResult&, const GridResult&) = default;
};

/// m in 2..5, k in 2..4, n in 1..6, free and pointed.
std::vector<GridPoint> default_grid();

/// Builds the sphere mapping model at each point and checks d² = 0.
std::vector<GridResult> sweep_d_squared(const std::vector<GridPoint>& grid, bool parallel);

}  // namespace rhmap

#pragma once

#include "cmela/dbscan.hpp"
#include "cmela/problem.hpp"

#include <filesystem>

namespace cmela {

/// Full evaluation of a 2-D problem on a resolution x resolution grid (axis 0 fastest).
struct GridScan {
  int resolution = 0;
  EvaluatedSample sample;
  Mask feasible;
  /// Fraction of grid points dominating each point, objectives only.
  Vector dominance_ratio;
  /// Nondominated among feasible grid points.
  Mask nondominated;
};

/// Throws ConfigError unless the problem has D = 2 and resolution >= 2.
GridScan grid_scan(const ProblemInstance& problem, int resolution, int workers = 1);

/// DBSCAN over the feasible grid points in unit-box coordinates with radius 1.5 grid steps,
/// so neighbours are exactly the 8-connected cells.
ClusterLabeling grid_components(const GridScan& scan, Index min_samples = 1, int workers = 1);

/// Writes violation.csv, feasible.csv, dominance_ratio.csv and nondominated.csv (x1,x2,value).
void write_grid_scan(const std::filesystem::path& directory, const GridScan& scan);

}  // namespace cmela

#pragma once

#include "cmela/defaults.hpp"
#include "cmela/features.hpp"
#include "cmela/problem.hpp"

#include <cstdint>
#include <filesystem>
#include <vector>

namespace cmela {

struct WalkConfig {
  Index steps = defaults::kWalkSteps;
  /// Maximum per-axis displacement as a fraction of the axis range.
  double step_fraction = defaults::kStepFraction;
  int repetitions = defaults::kWalks;
  std::uint64_t seed = 0;
};

struct RandomWalkFeatures {
  MaybeReal rfb_min, rfb_med, rfb_max;

  void store(FeatureRecord& record) const;
};

/// One walk of `config.steps` points from a uniform random start. Each step is uniform in the
/// box of half-width step_fraction * range; out-of-bounds steps are re-drawn up to 100 times and
/// then reflected. Returns b_i = 0 for feasible points, 1 otherwise. `trace`, when given,
/// receives the visited points column-wise.
std::vector<std::uint8_t> simple_random_walk(const ProblemInstance& problem, const WalkConfig& config,
                                             int run_index, Matrix* trace = nullptr);

/// Fraction of consecutive pairs whose feasibility differs.
double boundary_crossing_ratio(const std::vector<std::uint8_t>& b);

/// Min, lower-middle median and max of the per-walk ratios. Walks run in parallel.
RandomWalkFeatures randomwalk_features(const ProblemInstance& problem, const WalkConfig& config,
                                       int workers = 1);

/// Debug export of one walk: x1..xD, b.
void write_walk_trace_csv(const std::filesystem::path& path, const Matrix& trace,
                          const std::vector<std::uint8_t>& b);

}  // namespace cmela

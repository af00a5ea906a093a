#pragma once

#include "cmela/problem.hpp"
#include "cmela/sampling.hpp"

#include <filesystem>
#include <vector>

namespace cmela {

struct SensitivityConfig {
  std::vector<Index> sample_sizes;
  std::vector<double> epsilons;
  int repetitions = 30;
  std::uint64_t seed = 0;
  /// Reference component count; a run matches when it finds exactly this many.
  int expected = 0;
};

struct SensitivityCell {
  Index samples = 0;
  double epsilon = 0.0;
  std::vector<int> counts;  // one per repetition

  int matches(int expected) const;
};

/// Feasible-component counts over a sample-size x epsilon grid. Repetition r uses seed + r; one
/// sample per (size, repetition) is shared by all epsilons.
std::vector<SensitivityCell> sensitivity_sweep(const ProblemInstance& problem, const SensitivityConfig& config,
                                               int workers = 1, const SampleCache& cache = {});

/// samples,eps,runs,matches,match_rate,min,max
void write_sensitivity_csv(const std::filesystem::path& path, const std::vector<SensitivityCell>& cells, int expected);

}  // namespace cmela

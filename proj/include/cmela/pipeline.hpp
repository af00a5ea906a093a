#pragma once

#include "cmela/adaptivewalk.hpp"
#include "cmela/features.hpp"
#include "cmela/problem.hpp"
#include "cmela/sampling.hpp"

#include <array>
#include <filesystem>
#include <optional>

namespace cmela {

/// Overrides for the per-dimension defaults; unset fields take the defaults.
struct FeatureOptions {
  std::uint64_t seed = 0;
  std::array<bool, 4> families{true, true, true, true};  // indexed by Family
  std::optional<Index> spacefill_samples;
  std::optional<Index> adaptive_samples;
  std::optional<Index> infocontent_samples;
  std::optional<double> epsilon;
  int walks = defaults::kWalks;
  Index steps = defaults::kWalkSteps;
  LocalSearchConfig local_search;
  int workers = 1;
  SampleCache cache;
  /// When set, the adaptive walk writes its terminal points here.
  std::optional<std::filesystem::path> terminals_csv;
};

/// Parameter snapshot written into every record.
nlohmann::ordered_json parameter_snapshot(const ProblemInstance& problem, const FeatureOptions& options);

/// All selected feature families for one problem; unselected families stay null.
FeatureRecord compute_features(const ProblemInstance& problem, const FeatureOptions& options);

/// File name for a record: <problem>_D<d>_s<seed>.json
std::string record_file_name(const FeatureRecord& record);

}  // namespace cmela

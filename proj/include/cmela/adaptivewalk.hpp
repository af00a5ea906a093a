#pragma once

#include "cmela/dbscan.hpp"
#include "cmela/defaults.hpp"
#include "cmela/features.hpp"
#include "cmela/problem.hpp"
#include "cmela/sampling.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace cmela {

/// Bounded quasi-Newton descent on v with forward finite differences, in unit-box coordinates.
struct LocalSearchConfig {
  int max_iterations = defaults::kLocalSearchIterations;
  /// Finite-difference step as a fraction of each axis range.
  double gradient_step = 1e-8;
  /// Stop when an accepted step is shorter than this (unit-box norm).
  double step_tolerance = 1e-10;
  /// Stop when the largest projected-gradient component falls below this.
  double gradient_tolerance = 1e-6;
  /// Longest trial step per iteration (unit-box max norm); keeps the descent inside its basin.
  double max_step = 0.02;
};

enum class SearchStatus { AlreadyFeasible, Feasible, SmallStep, Stationary, LineSearchFailed, IterationLimit };

std::string_view status_name(SearchStatus status);

struct LocalSearchResult {
  Vector x;  // terminal point, original coordinates
  Vector f;
  double v = 0.0;
  double v_start = 0.0;
  int iterations = 0;
  SearchStatus status = SearchStatus::AlreadyFeasible;
};

/// Deterministic descent from x0 (must be in bounds). Returns x0 unchanged when it is feasible.
/// Returns nullopt when a non-finite violation is met; `diagnostic` then says where.
std::optional<LocalSearchResult> local_search(const ProblemInstance& problem, const Vector& x0,
                                              const LocalSearchConfig& config = {},
                                              std::string* diagnostic = nullptr);

/// Numeric feasibility of a local-search terminal: v <= 1e-10.
bool feasibility_tolerance_check(double v);

struct BasinFeatures {
  MaybeReal n_basin, basin_min, basin_med, basin_max, fbasin_min, fbasin_med, fbasin_max, union_fbasin;
  MaybeReal v_basin_med, v_basin_max, v_basin_of_max, opt_basin_max, basin_opt;

  void store(FeatureRecord& record) const;
};

/// Everything computed on the way to the basin features; kept for tests and the terminal dump.
struct BasinAnalysis {
  Matrix starts;
  std::vector<std::optional<LocalSearchResult>> results;  // per start
  std::vector<Index> converged;                           // start indices with a result
  ClusterLabeling labeling;                               // one entry per converged start
  std::vector<double> basin_violation;                    // min terminal v per cluster
  std::vector<std::uint8_t> basin_feasible;
  Mask nondominated;  // per converged start: feasible terminal, nondominated among feasible terminals
  std::size_t aborted = 0;
  std::vector<std::string> diagnostics;  // one per aborted start
  BasinFeatures features;
};

/// Starts are not evaluated up front, so a start with a non-finite violation only loses itself.
BasinAnalysis analyze_basins(const ProblemInstance& problem, const SamplePlan& plan,
                             const LocalSearchConfig& ls, const DbscanParams& params, int workers = 1);

/// Terminal dump: start x, terminal x, terminal v, iterations, status, basin label.
void write_terminals_csv(const std::filesystem::path& path, const BasinAnalysis& analysis);

}  // namespace cmela

#pragma once

#include "cmela/problem.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

namespace cmela {

enum class SampleKind { LatinHypercube, FullGrid };

/// A reproducible sample description. For a grid, `size` is the number of points per axis.
struct SamplePlan {
  SampleKind kind = SampleKind::LatinHypercube;
  Index size = 0;
  std::uint64_t seed = 0;
  /// RNG stream inside `seed`; lets several LHS designs share one master seed.
  std::uint64_t stream = 0;
  int dimension = 0;

  Index num_points() const;
  std::string describe() const;
};

/// Latin hypercube design: on every axis exactly one point per stratum, uniform inside it.
Matrix latin_hypercube(const SamplePlan& plan, const Vector& lower, const Vector& upper);

/// Full lattice including both bounds on each axis. Axis 0 varies fastest.
Matrix grid(Index points_per_axis, const Vector& lower, const Vector& upper);

/// Generates the plan's points within the problem bounds.
Matrix generate(const SamplePlan& plan, const ProblemInstance& problem);

/// 64-bit FNV-1a.
std::uint64_t fnv1a(const std::string& text);

/// Cache key for (problem, plan) as a 16-digit hex string.
std::string cache_key(const ProblemInstance& problem, const SamplePlan& plan);

/// Columnar CSV: x1..xD, f1..fM, g1..gK, v.
void write_sample_csv(const std::filesystem::path& path, const EvaluatedSample& sample);

/// Binary store of evaluated samples, one file per cache key. A disabled cache (empty
/// directory) never hits and never writes.
class SampleCache {
 public:
  SampleCache() = default;
  explicit SampleCache(std::filesystem::path directory);

  /// `--cache` when given, else $CMOP_CACHE_DIR, else disabled.
  static SampleCache from_option(const std::string& option);

  bool enabled() const { return !directory_.empty(); }
  const std::filesystem::path& directory() const { return directory_; }

  std::optional<EvaluatedSample> load(const std::string& key) const;
  void store(const std::string& key, const EvaluatedSample& sample) const;

 private:
  std::filesystem::path directory_;
};

/// Generates and evaluates a plan, going through the cache when it is enabled.
EvaluatedSample evaluate_plan(const ProblemInstance& problem, const SamplePlan& plan, int workers,
                              const SampleCache& cache = {});

}  // namespace cmela

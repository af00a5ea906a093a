#pragma once

#include "cmela/types.hpp"

#include <json.hpp>

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace cmela {

inline constexpr int kSchemaVersion = 1;
inline constexpr std::size_t kNumFeatures = 29;

/// Feature keys in record order, grouped by family.
inline constexpr std::array<std::string_view, kNumFeatures> kFeatureKeys = {
    "n_com",        "com_min",      "com_med",       "com_max",   "opt_com_max", "com_opt",
    "rho_f",        "corr_min",     "corr_max",      "rho_bound_opt",
    "h_max",        "eps_s",        "m0",
    "rfb_min",      "rfb_med",      "rfb_max",
    "n_basin",      "basin_min",    "basin_med",     "basin_max", "fbasin_min",  "fbasin_med",
    "fbasin_max",   "union_fbasin", "v_basin_med",   "v_basin_max", "v_basin_of_max",
    "opt_basin_max", "basin_opt"};

enum class Family { SpaceFill, InfoContent, RandomWalk, AdaptiveWalk };

Family family_of(std::size_t feature_index);
std::string_view family_name(Family family);
/// Accepts "spacefill", "infocontent", "randomwalk", "adaptivewalk".
Family parse_family(const std::string& name);

/// Position of `key` in kFeatureKeys; throws ConfigError for an unknown key.
std::size_t feature_index(std::string_view key);

using FeatureValues = std::array<MaybeReal, kNumFeatures>;

struct FeatureRecord {
  std::string problem;
  std::string suite;
  int dimension = 0;
  std::uint64_t seed = 0;
  /// Snapshot of every parameter that influenced the values.
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  std::string timestamp;
  FeatureValues values{};

  MaybeReal& operator[](std::string_view key) { return values[feature_index(key)]; }
  const MaybeReal& operator[](std::string_view key) const { return values[feature_index(key)]; }
};

nlohmann::ordered_json to_json(const FeatureRecord& record);
/// Throws ConfigError on a schema mismatch or a missing/unknown feature key.
FeatureRecord record_from_json(const nlohmann::json& doc);

/// Current UTC time, ISO 8601.
std::string utc_timestamp();

}  // namespace cmela

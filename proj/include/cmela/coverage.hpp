#pragma once

#include "cmela/features.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace cmela {

/// Every *.json FeatureRecord in a directory, sorted by file name.
std::vector<FeatureRecord> load_records(const std::filesystem::path& directory);

struct FeatureBounds {
  double min = 0.0;
  double max = 0.0;
  std::size_t count = 0;  // non-null values seen

  bool flagged() const { return count == 0; }
};

struct NormalizedFeatures {
  std::vector<std::string> suites;  // per record
  std::vector<FeatureValues> values;
  std::array<FeatureBounds, kNumFeatures> bounds{};
};

/// Min-max scaling per feature over all records. Constant features map to 0.5, nulls stay null.
NormalizedFeatures normalize_features(const std::vector<FeatureRecord>& records);

/// 1 - mean over t of min over s of |t - s|; undefined when either set is empty.
MaybeReal coverage(const std::vector<double>& target, const std::vector<double>& candidate);

struct CoverageMatrix {
  std::string target;
  std::vector<std::string> suites;                // columns
  std::vector<std::vector<MaybeReal>> cells;      // [feature][suite]
  std::array<FeatureBounds, kNumFeatures> bounds{};

  std::vector<std::string> flagged_features() const;
};

inline constexpr const char* kAllSuites = "all";

/// Coverage of a target set (one suite, or "all" records) by each suite. Needs records from at least two suites.
CoverageMatrix coverage_matrix(const std::vector<FeatureRecord>& records, const std::string& target);

/// Rows are features, columns suites; null cells are left empty.
void write_coverage_csv(const std::filesystem::path& path, const CoverageMatrix& matrix);
std::string coverage_csv(const CoverageMatrix& matrix);

/// Normalization bounds per feature, for audit.
nlohmann::ordered_json bounds_json(const CoverageMatrix& matrix);

}  // namespace cmela

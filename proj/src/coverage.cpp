#include "cmela/coverage.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace cmela {

std::vector<FeatureRecord> load_records(const std::filesystem::path& directory) {
  if (!std::filesystem::is_directory(directory))
    throw ConfigError("records directory not found: " + directory.string());
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(directory))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<FeatureRecord> out;
  for (const auto& file : files) {
    std::ifstream in(file);
    try {
      out.push_back(record_from_json(nlohmann::json::parse(in)));
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(file.string() + ": " + e.what());
    } catch (const ConfigError& e) {
      throw ConfigError(file.string() + ": " + e.what());
    }
  }
  return out;
}

NormalizedFeatures normalize_features(const std::vector<FeatureRecord>& records) {
  NormalizedFeatures out;
  for (std::size_t k = 0; k < kNumFeatures; ++k) {
    auto& b = out.bounds[k];
    b.min = std::numeric_limits<double>::infinity();
    b.max = -std::numeric_limits<double>::infinity();
    for (const auto& r : records)
      if (const auto& v = r.values[k]) {
        b.min = std::min(b.min, *v);
        b.max = std::max(b.max, *v);
        ++b.count;
      }
    if (b.flagged()) b.min = b.max = 0.0;
  }
  for (const auto& r : records) {
    out.suites.push_back(r.suite);
    FeatureValues scaled{};
    for (std::size_t k = 0; k < kNumFeatures; ++k) {
      const auto& v = r.values[k];
      if (!v) continue;
      const auto& b = out.bounds[k];
      scaled[k] = b.max > b.min ? (*v - b.min) / (b.max - b.min) : 0.5;
    }
    out.values.push_back(scaled);
  }
  return out;
}

MaybeReal coverage(const std::vector<double>& target, const std::vector<double>& candidate) {
  if (target.empty() || candidate.empty()) return std::nullopt;
  std::vector<double> s = candidate;
  std::sort(s.begin(), s.end());
  double total = 0.0;
  for (double t : target) {
    const auto it = std::lower_bound(s.begin(), s.end(), t);
    double best = std::numeric_limits<double>::infinity();
    if (it != s.end()) best = *it - t;
    if (it != s.begin()) best = std::min(best, t - *std::prev(it));
    total += best;
  }
  return 1.0 - total / static_cast<double>(target.size());
}

std::vector<std::string> CoverageMatrix::flagged_features() const {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < kNumFeatures; ++k)
    if (bounds[k].flagged()) out.emplace_back(kFeatureKeys[k]);
  return out;
}

CoverageMatrix coverage_matrix(const std::vector<FeatureRecord>& records, const std::string& target) {
  std::set<std::string> suites;
  for (const auto& r : records) suites.insert(r.suite);
  if (suites.size() < 2) throw ConfigError("coverage needs records from at least two suites");
  if (target != kAllSuites && !suites.count(target)) throw ConfigError("no records for target suite " + target);

  const NormalizedFeatures norm = normalize_features(records);
  CoverageMatrix m;
  m.target = target;
  m.suites.assign(suites.begin(), suites.end());
  m.bounds = norm.bounds;
  m.cells.resize(kNumFeatures);
  for (std::size_t k = 0; k < kNumFeatures; ++k) {
    std::vector<double> t;
    for (std::size_t i = 0; i < norm.values.size(); ++i)
      if (norm.values[i][k] && (target == kAllSuites || norm.suites[i] == target)) t.push_back(*norm.values[i][k]);
    for (const auto& suite : m.suites) {
      std::vector<double> s;
      for (std::size_t i = 0; i < norm.values.size(); ++i)
        if (norm.values[i][k] && norm.suites[i] == suite) s.push_back(*norm.values[i][k]);
      m.cells[k].push_back(norm.bounds[k].flagged() ? std::nullopt : coverage(t, s));
    }
  }
  return m;
}

std::string coverage_csv(const CoverageMatrix& m) {
  std::ostringstream out;
  out.precision(17);
  out << "feature";
  for (const auto& s : m.suites) out << ',' << s;
  out << '\n';
  for (std::size_t k = 0; k < kNumFeatures; ++k) {
    out << kFeatureKeys[k];
    for (const auto& cell : m.cells[k]) {
      out << ',';
      if (cell) out << *cell;
    }
    out << '\n';
  }
  return out.str();
}

void write_coverage_csv(const std::filesystem::path& path, const CoverageMatrix& m) {
  std::ofstream out(path);
  if (!out) throw ComputationError("cannot write " + path.string());
  out << coverage_csv(m);
}

nlohmann::ordered_json bounds_json(const CoverageMatrix& m) {
  nlohmann::ordered_json doc;
  doc["target"] = m.target;
  doc["suites"] = m.suites;
  auto& features = doc["features"];
  for (std::size_t k = 0; k < kNumFeatures; ++k) {
    const auto& b = m.bounds[k];
    nlohmann::ordered_json entry;
    entry["count"] = b.count;
    if (b.flagged()) {
      entry["min"] = nullptr;
      entry["max"] = nullptr;
    } else {
      entry["min"] = b.min;
      entry["max"] = b.max;
    }
    entry["flagged"] = b.flagged();
    features[std::string(kFeatureKeys[k])] = entry;
  }
  return doc;
}

}  // namespace cmela

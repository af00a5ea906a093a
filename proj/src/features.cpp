#include "cmela/features.hpp"

#include <chrono>
#include <ctime>

namespace cmela {

Family family_of(std::size_t i) {
  if (i < 10) return Family::SpaceFill;
  if (i < 13) return Family::InfoContent;
  if (i < 16) return Family::RandomWalk;
  return Family::AdaptiveWalk;
}

std::string_view family_name(Family family) {
  switch (family) {
    case Family::SpaceFill:
      return "spacefill";
    case Family::InfoContent:
      return "infocontent";
    case Family::RandomWalk:
      return "randomwalk";
    case Family::AdaptiveWalk:
      return "adaptivewalk";
  }
  return "";
}

Family parse_family(const std::string& name) {
  for (Family f : {Family::SpaceFill, Family::InfoContent, Family::RandomWalk, Family::AdaptiveWalk})
    if (family_name(f) == name) return f;
  throw ConfigError("unknown feature family: " + name +
                    " (expected spacefill, infocontent, randomwalk or adaptivewalk)");
}

std::size_t feature_index(std::string_view key) {
  for (std::size_t i = 0; i < kNumFeatures; ++i)
    if (kFeatureKeys[i] == key) return i;
  throw ConfigError("unknown feature key: " + std::string(key));
}

nlohmann::ordered_json to_json(const FeatureRecord& r) {
  nlohmann::ordered_json features = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < kNumFeatures; ++i) {
    const std::string key(kFeatureKeys[i]);
    if (!r.values[i]) features[key] = nullptr;
    else if (key == "n_com" || key == "n_basin") features[key] = static_cast<std::int64_t>(*r.values[i]);
    else features[key] = *r.values[i];
  }
  nlohmann::ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["problem"] = r.problem;
  doc["suite"] = r.suite;
  doc["D"] = r.dimension;
  doc["seed"] = r.seed;
  doc["parameters"] = r.parameters;
  doc["timestamp"] = r.timestamp;
  doc["features"] = features;
  return doc;
}

FeatureRecord record_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("schema_version"))
    throw ConfigError("feature record without schema_version");
  if (doc.at("schema_version") != kSchemaVersion)
    throw ConfigError("unsupported schema_version " + doc.at("schema_version").dump());
  FeatureRecord r;
  try {
    r.problem = doc.at("problem").get<std::string>();
    r.suite = doc.at("suite").get<std::string>();
    r.dimension = doc.at("D").get<int>();
    r.seed = doc.at("seed").get<std::uint64_t>();
    if (doc.contains("parameters")) r.parameters = doc.at("parameters");
    if (doc.contains("timestamp")) r.timestamp = doc.at("timestamp").get<std::string>();
    const auto& features = doc.at("features");
    if (features.size() != kNumFeatures) throw ConfigError("feature record must have 29 features");
    for (const auto& [key, value] : features.items()) {
      const std::size_t i = feature_index(key);
      if (!value.is_null()) r.values[i] = value.get<double>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed feature record: ") + e.what());
  }
  return r;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace cmela

#include "cmela/features.hpp"

#include <doctest.h>

#include <set>

using namespace cmela;

namespace {

FeatureRecord sample_record() {
  FeatureRecord r;
  r.problem = "MW7";
  r.suite = "MW";
  r.dimension = 2;
  r.seed = 12345678901234ULL;
  r.parameters["eps"] = 0.02;
  r.timestamp = "2024-01-01T00:00:00Z";
  for (std::size_t i = 0; i < kNumFeatures; ++i)
    if (i % 4 != 3) r.values[i] = 0.1 * static_cast<double>(i) + 1.0 / 3.0;
  r["n_com"] = 3;
  r["n_basin"] = 72;
  return r;
}

}  // namespace

TEST_CASE("twenty-nine unique keys in four families") {
  std::set<std::string_view> keys(kFeatureKeys.begin(), kFeatureKeys.end());
  CHECK(keys.size() == 29);
  std::array<int, 4> per_family{};
  for (std::size_t i = 0; i < kNumFeatures; ++i) ++per_family[static_cast<int>(family_of(i))];
  CHECK(per_family == std::array<int, 4>{10, 3, 3, 13});
  CHECK(feature_index("n_com") == 0);
  CHECK(feature_index("basin_opt") == 28);
  CHECK_THROWS_AS(feature_index("nope"), ConfigError);
  CHECK(parse_family("randomwalk") == Family::RandomWalk);
  CHECK(family_name(Family::AdaptiveWalk) == "adaptivewalk");
  CHECK_THROWS_AS(parse_family("walks"), ConfigError);
}

TEST_CASE("record round trip through JSON is exact") {
  const FeatureRecord r = sample_record();
  const auto text = to_json(r).dump(2);
  const FeatureRecord back = record_from_json(nlohmann::json::parse(text));
  CHECK(back.problem == r.problem);
  CHECK(back.suite == r.suite);
  CHECK(back.dimension == r.dimension);
  CHECK(back.seed == r.seed);
  CHECK(back.timestamp == r.timestamp);
  CHECK(back.parameters == r.parameters);
  for (std::size_t i = 0; i < kNumFeatures; ++i) CHECK(back.values[i] == r.values[i]);
  const auto doc = nlohmann::json::parse(text);
  CHECK(doc["schema_version"] == kSchemaVersion);
  CHECK(doc["features"]["n_com"].is_number_integer());
  CHECK(doc["features"]["com_max"].is_null());
}

TEST_CASE("malformed records are rejected") {
  auto doc = nlohmann::json::parse(to_json(sample_record()).dump());
  auto bad = doc;
  bad["schema_version"] = 99;
  CHECK_THROWS_AS(record_from_json(bad), ConfigError);
  bad = doc;
  bad["features"].erase("m0");
  CHECK_THROWS_AS(record_from_json(bad), ConfigError);
  bad = doc;
  bad["features"]["extra"] = 1.0;
  CHECK_THROWS_AS(record_from_json(bad), ConfigError);
  bad = doc;
  bad["features"]["h_max"] = "high";
  CHECK_THROWS_AS(record_from_json(bad), ConfigError);
  bad = doc;
  bad.erase("problem");
  CHECK_THROWS_AS(record_from_json(bad), ConfigError);
}

TEST_CASE("timestamps are ISO 8601 UTC") {
  const auto t = utc_timestamp();
  CHECK(t.size() == 20);
  CHECK(t[4] == '-');
  CHECK(t[10] == 'T');
  CHECK(t.back() == 'Z');
}

#include "cmela/coverage.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace cmela;

namespace {

FeatureRecord rec(const std::string& suite, std::initializer_list<std::pair<const char*, double>> values) {
  FeatureRecord r;
  r.problem = suite + std::to_string(values.size());
  r.suite = suite;
  r.dimension = 2;
  for (const auto& [k, v] : values) r[k] = v;
  return r;
}

}  // namespace

TEST_CASE("normalization examples") {
  const std::vector<FeatureRecord> records = {rec("A", {{"h_max", 2}, {"m0", 3}}), rec("B", {{"h_max", 4}, {"m0", 3}}),
                                              rec("B", {{"h_max", 6}, {"m0", 3}, {"eps_s", 1}})};
  const auto n = normalize_features(records);
  const auto h = feature_index("h_max"), m = feature_index("m0"), e = feature_index("eps_s");
  CHECK(*n.values[0][h] == 0.0);
  CHECK(*n.values[1][h] == 0.5);
  CHECK(*n.values[2][h] == 1.0);
  for (int i = 0; i < 3; ++i) CHECK(*n.values[i][m] == 0.5);
  CHECK_FALSE(n.values[0][e].has_value());
  CHECK(*n.values[2][e] == 0.5);
  CHECK(n.bounds[feature_index("n_com")].flagged());
  CHECK(n.bounds[h].min == 2);
  CHECK(n.bounds[h].max == 6);
  CHECK(n.bounds[h].count == 3);
}

TEST_CASE("coverage examples") {
  CHECK(*coverage({0.1, 0.7}, {0.7, 0.1, 0.4}) == 1.0);
  CHECK(*coverage({0.0}, {1.0}) == 0.0);
  CHECK(*coverage({0.0, 1.0}, {0.5}) == 0.5);
  CHECK(*coverage({0.2, 0.4}, {0.3}) == doctest::Approx(0.9));
  CHECK_FALSE(coverage({}, {0.5}).has_value());
  CHECK_FALSE(coverage({0.5}, {}).has_value());
}

TEST_CASE("coverage is monotone in the candidate set") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u;
  std::uniform_int_distribution<int> size(1, 30);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> t(size(rng)), s(size(rng));
    for (double& x : t) x = u(rng);
    for (double& x : s) x = u(rng);
    double previous = *coverage(t, s);
    CHECK(previous <= 1.0);
    CHECK(previous >= 0.0);
    for (int extra = 0; extra < 5; ++extra) {
      s.push_back(u(rng));
      const double now = *coverage(t, s);
      CHECK(now >= previous);
      previous = now;
    }
  }
}

namespace {

std::vector<FeatureRecord> random_records(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  std::bernoulli_distribution missing(0.1);
  std::vector<FeatureRecord> out;
  for (const char* suite : {"A", "B", "C"})
    for (int i = 0; i < 6; ++i) {
      FeatureRecord r;
      r.problem = std::string(suite) + std::to_string(i);
      r.suite = suite;
      for (auto& v : r.values)
        if (!missing(rng)) v = u(rng);
      out.push_back(r);
    }
  return out;
}

}  // namespace

TEST_CASE("self coverage is one for every suite") {
  std::mt19937_64 rng(2);
  const auto records = random_records(rng);
  for (const char* target : {"A", "B", "C"}) {
    const auto m = coverage_matrix(records, target);
    const auto col = std::find(m.suites.begin(), m.suites.end(), target) - m.suites.begin();
    for (std::size_t k = 0; k < kNumFeatures; ++k) CHECK(*m.cells[k][col] == 1.0);
  }
}

TEST_CASE("coverage matrix is invariant under affine rescaling of a feature") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    auto records = random_records(rng);
    const auto before = coverage_matrix(records, kAllSuites);
    const std::size_t k = trial % kNumFeatures;
    for (auto& r : records)
      if (r.values[k]) r.values[k] = 3.0 * *r.values[k] + 7.0;
    const auto after = coverage_matrix(records, kAllSuites);
    for (std::size_t f = 0; f < kNumFeatures; ++f)
      for (std::size_t s = 0; s < before.suites.size(); ++s) {
        REQUIRE(before.cells[f][s].has_value() == after.cells[f][s].has_value());
        if (before.cells[f][s]) CHECK(*after.cells[f][s] == doctest::Approx(*before.cells[f][s]).epsilon(1e-12));
      }
  }
}

TEST_CASE("coverage matrix shape, nulls and errors") {
  const std::vector<FeatureRecord> records = {rec("A", {{"h_max", 0}}), rec("A", {{"h_max", 1}}),
                                              rec("B", {{"h_max", 0.5}, {"m0", 1}})};
  const auto m = coverage_matrix(records, kAllSuites);
  CHECK(m.suites == std::vector<std::string>{"A", "B"});
  const auto h = feature_index("h_max"), m0 = feature_index("m0");
  // target {0, 0.5, 1} against {0, 1}, then against {0.5}
  CHECK(*m.cells[h][0] == doctest::Approx(1.0 - 0.5 / 3.0));
  CHECK(*m.cells[h][1] == doctest::Approx(1.0 - 1.0 / 3.0));
  CHECK_FALSE(m.cells[m0][0].has_value());
  CHECK(*m.cells[m0][1] == 1.0);
  CHECK_FALSE(m.cells[feature_index("n_com")][0].has_value());
  CHECK(m.flagged_features().size() == 27);

  CHECK_THROWS_AS(coverage_matrix({rec("A", {{"h_max", 0}})}, kAllSuites), ConfigError);
  CHECK_THROWS_AS(coverage_matrix(records, "Z"), ConfigError);

  std::istringstream csv(coverage_csv(m));
  std::string line;
  std::getline(csv, line);
  CHECK(line == "feature,A,B");
  int rows = 0;
  while (std::getline(csv, line)) ++rows;
  CHECK(rows == 29);
  CHECK(bounds_json(m)["features"]["h_max"]["max"] == 1.0);
  CHECK(bounds_json(m)["features"]["n_com"]["flagged"] == true);
}

TEST_CASE("shipped fixture records reproduce the golden coverage matrix") {
  const std::filesystem::path dir = CMELA_FIXTURE_DIR;
  const auto records = load_records(dir / "records");
  REQUIRE(records.size() >= 2);
  std::ifstream golden(dir / "coverage_all.csv");
  REQUIRE(golden);
  std::stringstream want;
  want << golden.rdbuf();
  CHECK(coverage_csv(coverage_matrix(records, kAllSuites)) == want.str());
}

TEST_CASE("missing records directory") {
  CHECK_THROWS_AS(load_records("/nonexistent/records"), ConfigError);
}

#include "cmela/registry.hpp"
#include "cmela/sampling.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>

using namespace cmela;

namespace {

void check_strata(const Matrix& X, const Vector& lo, const Vector& hi) {
  const Index n = X.cols();
  for (Index a = 0; a < X.rows(); ++a) {
    std::vector<int> hits(n, 0);
    for (Index j = 0; j < n; ++j) {
      const double t = (X(a, j) - lo(a)) / (hi(a) - lo(a));
      REQUIRE(X(a, j) >= lo(a));
      REQUIRE(X(a, j) <= hi(a));
      ++hits[std::min<Index>(n - 1, static_cast<Index>(t * n))];
    }
    for (int h : hits) REQUIRE(h == 1);
  }
}

}  // namespace

TEST_CASE("latin hypercube: one point per stratum on [0,1]") {
  const Matrix X = latin_hypercube({SampleKind::LatinHypercube, 4, 1, 0, 1}, Vector::Zero(1), Vector::Ones(1));
  std::set<int> strata;
  for (Index j = 0; j < 4; ++j) strata.insert(static_cast<int>(X(0, j) * 4));
  CHECK(strata == std::set<int>{0, 1, 2, 3});
}

TEST_CASE("latin hypercube stratification at 25000 points and odd bounds") {
  const SamplePlan plan{SampleKind::LatinHypercube, 25000, 42, 0, 2};
  Vector lo(2), hi(2);
  lo << 0.0, -5.12;
  hi << 1.1, 20.0;
  const Matrix X = latin_hypercube(plan, lo, hi);
  CHECK(X.cols() == 25000);
  check_strata(X, lo, hi);
}

TEST_CASE("latin hypercube is a pure function of the plan") {
  const SamplePlan plan{SampleKind::LatinHypercube, 500, 9, 3, 5};
  const Matrix a = latin_hypercube(plan, Vector::Zero(5), Vector::Ones(5));
  const Matrix b = latin_hypercube(plan, Vector::Zero(5), Vector::Ones(5));
  CHECK(a == b);
  SamplePlan other = plan;
  other.seed = 10;
  CHECK(a != latin_hypercube(other, Vector::Zero(5), Vector::Ones(5)));
  other = plan;
  other.stream = 4;
  CHECK(a != latin_hypercube(other, Vector::Zero(5), Vector::Ones(5)));
}

TEST_CASE("grid includes bounds") {
  const Matrix g3 = grid(3, Vector::Zero(2), Vector::Ones(2));
  CHECK(g3.cols() == 9);
  CHECK(g3.col(0) == Eigen::Vector2d(0, 0));
  CHECK(g3.col(2) == Eigen::Vector2d(1, 0));
  CHECK(g3.col(8) == Eigen::Vector2d(1, 1));
  CHECK(g3(0, 1) == 0.5);
  CHECK(grid(501, Vector::Zero(2), Vector::Ones(2)).cols() == 251001);
  const Matrix corners = grid(2, Vector::Zero(3), Vector::Ones(3));
  CHECK(corners.cols() == 8);
  CHECK(((corners.array() == 0.0) || (corners.array() == 1.0)).all());
  CHECK_THROWS_AS(grid(1, Vector::Zero(2), Vector::Ones(2)), ConfigError);
  Vector hi(2);
  hi << 1.1, 20.0;
  const Matrix odd = grid(7, Vector::Zero(2), hi);
  CHECK(odd(0, 6) == 1.1);
  CHECK(odd(1, 48) == 20.0);
}

TEST_CASE("sample cache round trip and key sensitivity") {
  const auto reg = register_builtin_problems();
  const auto p = reg.make("MW7", {.dimension = 2});
  const SamplePlan plan{SampleKind::LatinHypercube, 300, 5, 0, 2};
  const auto dir = std::filesystem::temp_directory_path() / "cmela_cache_test";
  std::filesystem::remove_all(dir);
  const SampleCache cache(dir);
  const auto cold = evaluate_plan(p, plan, 2, cache);
  CHECK(std::filesystem::exists(dir / (cache_key(p, plan) + ".bin")));
  const auto warm = evaluate_plan(p, plan, 1, cache);
  CHECK(cold.X == warm.X);
  CHECK(cold.F == warm.F);
  CHECK(cold.G == warm.G);
  CHECK(cold.v == warm.v);
  CHECK(cache_key(p, plan) != cache_key(p.with_equality_tolerance(1e-3), plan));
  CHECK(cache_key(reg.make("DAS-CMOP1", {.dimension = 2}), plan) !=
        cache_key(reg.make("DAS-CMOP1", {.dimension = 2, .das_difficulty = {0.5, 0.5, 0.5}}), plan));
  SamplePlan other = plan;
  other.seed = 6;
  CHECK(cache_key(p, plan) != cache_key(p, other));

  write_sample_csv(dir / "s.csv", cold);
  std::ifstream in(dir / "s.csv");
  std::string header;
  std::getline(in, header);
  CHECK(header == "x1,x2,f1,f2,g1,g2,v");
  std::filesystem::remove_all(dir);
}

TEST_CASE("evaluation does not depend on worker count") {
  const auto p = register_builtin_problems().make("DAS-CMOP3", {.dimension = 5});
  const Matrix X = generate({SampleKind::LatinHypercube, 1000, 1, 0, 5}, p);
  const auto a = evaluate_sample(p, X, 1);
  const auto b = evaluate_sample(p, X, 4);
  CHECK(a.F == b.F);
  CHECK(a.v == b.v);
}

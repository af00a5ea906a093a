#include "cmela/problem.hpp"
#include "cmela/registry.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <cstring>
#include <fstream>
#include <random>

using namespace cmela;

namespace {

ProblemInstance linear_problem(int inequalities, int equalities, double eta = 1e-4) {
  auto kernel = [](std::span<const double> x, std::span<double> f, std::span<double> g,
                   std::span<double> h) {
    f[0] = x[0];
    f[1] = 1.0 - x[0];
    if (!g.empty()) g[0] = x[0] - 0.5;
    if (!h.empty()) h[0] = x[0];
  };
  return ProblemInstance("lin", "test", {2, 2, inequalities, equalities}, Vector::Zero(2),
                         Vector::Ones(2), kernel, eta);
}

}  // namespace

TEST_CASE("violation sums positive parts") {
  const auto p = linear_problem(1, 0);
  const auto e = evaluate(p, Vector::Constant(2, 0.7));
  CHECK(e.v == doctest::Approx(0.2).epsilon(1e-15));
  CHECK_FALSE(e.is_feasible);
  const auto ok = evaluate(p, Vector::Constant(2, 0.3));
  CHECK(ok.v == 0.0);
  CHECK(ok.is_feasible);
}

TEST_CASE("equalities are relaxed by eta") {
  const auto p = linear_problem(0, 1);
  Vector x(2);
  x << 0.00005, 0.5;
  const auto e = evaluate(p, x);
  CHECK(e.g(0) == doctest::Approx(-5e-5).epsilon(1e-12));
  CHECK(e.v == 0.0);
  x(0) = 0.01;
  CHECK(evaluate(p, x).v == doctest::Approx(0.01 - 1e-4));
  CHECK(evaluate(p.with_equality_tolerance(0.1), x).v == 0.0);
}

TEST_CASE("out-of-bounds and wrong-length points are rejected") {
  const auto p = linear_problem(1, 0);
  CHECK_THROWS_AS(evaluate(p, Vector::Constant(3, 0.5)), ConfigError);
  CHECK_THROWS_AS(evaluate(p, Vector::Constant(2, 1.0000001)), ConfigError);
  CHECK_THROWS_AS(evaluate(p, Vector::Constant(2, -1e-300)), ConfigError);
  CHECK_NOTHROW(evaluate(p, Vector::Ones(2)));
}

TEST_CASE("dominance cases") {
  EvaluatedPoint a, b;
  a.f = Eigen::Vector2d(1, 2);
  b.f = Eigen::Vector2d(2, 3);
  CHECK(dominates(a, b));
  b.f = Eigen::Vector2d(1, 2);
  CHECK_FALSE(dominates(a, b));
  a.f = Eigen::Vector2d(1, 3);
  b.f = Eigen::Vector2d(2, 2);
  CHECK_FALSE(dominates(a, b));
  a.f = Eigen::Vector2d(0, 0);
  a.is_feasible = false;
  CHECK_FALSE(dominates(a, b));
  a.f = Eigen::Vector3d(0, 0, 0);
  a.is_feasible = true;
  CHECK_THROWS_AS(dominates(a, b), ConfigError);
}

TEST_CASE("dominance is irreflexive and transitive on random triples") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> pick(0, 3);
  for (int trial = 0; trial < 2000; ++trial) {
    Eigen::Vector3d a, b, c;
    for (int m = 0; m < 3; ++m) {
      a(m) = pick(rng);
      b(m) = pick(rng);
      c(m) = pick(rng);
    }
    CHECK_FALSE(dominates(a, a));
    if (dominates(a, b) && dominates(b, c)) CHECK(dominates(a, c));
  }
}

TEST_CASE("registry lookups") {
  const auto reg = register_builtin_problems();
  const auto mw6 = reg.make("MW6", {.dimension = 2});
  CHECK(mw6.num_objectives() == 2);
  CHECK(mw6.upper()(0) == doctest::Approx(1.1));
  const auto das = reg.make("DAS-CMOP1", {.dimension = 3});
  CHECK(das.num_constraints() == 11);
  CHECK_THROWS_AS(reg.make("NOPE", {}), ConfigError);
  CHECK_THROWS_AS(reg.make("DAS-CMOP7", {.dimension = 2}), ConfigError);
  CHECK(reg.ids_in_suite("MW").size() == 14);
  CHECK(reg.ids_in_suite("CTP").size() == 8);
  CHECK(reg.ids_in_suite("DAS*").size() == 9);
  CHECK(reg.ids_in_suite("NOPE").empty());
  for (const char* id : {"C2-DTLZ2", "C1-DTLZ1", "C3-DTLZ4", "DC1-DTLZ1"}) CHECK(reg.contains(id));
}

TEST_CASE("registered problems match pinned regression vectors") {
  std::ifstream in(CMELA_FIXTURE_DIR "/regression_vectors.json");
  REQUIRE(in.good());
  const auto doc = nlohmann::json::parse(in);
  const auto reg = register_builtin_problems();
  const auto triplet = doc.at("das_difficulty").get<DasDifficulty>();
  int checked = 0;
  for (const auto& vec : doc.at("vectors")) {
    const auto id = vec.at("id").get<std::string>();
    const int d = vec.at("D").get<int>();
    const auto p = reg.make(id, {.dimension = d, .das_difficulty = triplet});
    const auto x = vec.at("x").get<std::vector<double>>();
    const auto f = vec.at("f").get<std::vector<double>>();
    const auto g = vec.at("g").get<std::vector<double>>();
    const auto e = evaluate(p, Eigen::Map<const Vector>(x.data(), d));
    INFO(id << " D=" << d);
    REQUIRE(e.f.size() == static_cast<Index>(f.size()));
    REQUIRE(e.g.size() == static_cast<Index>(g.size()));
    for (std::size_t m = 0; m < f.size(); ++m)
      CHECK(std::abs(e.f(m) - f[m]) <= 1e-9 * std::max(1.0, std::abs(f[m])));
    for (std::size_t c = 0; c < g.size(); ++c)
      CHECK(std::abs(e.g(c) - g[c]) <= 1e-9 * std::max(1.0, std::abs(g[c])));
    ++checked;
  }
  CHECK(checked == static_cast<int>(doc.at("vectors").size()));
}

TEST_CASE("every registered problem evaluates purely with nonnegative violation") {
  const auto reg = register_builtin_problems();
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (const auto& id : reg.ids()) {
    for (int d : {2, 3, 5}) {
      if (!reg.entry(id).supports_dimension(d)) continue;
      const auto p = reg.make(id, {.dimension = d});
      for (int k = 0; k < 20; ++k) {
        Vector x(d);
        for (int i = 0; i < d; ++i) x(i) = p.lower()(i) + u(rng) * (p.upper()(i) - p.lower()(i));
        const auto a = evaluate(p, x);
        const auto b = evaluate(p, x);
        INFO(id << " D=" << d);
        CHECK(a.v >= 0.0);
        CHECK(a.is_feasible == (a.g.maxCoeff() <= 0.0));
        CHECK(std::memcmp(a.f.data(), b.f.data(), sizeof(double) * a.f.size()) == 0);
        CHECK(a.v == b.v);
      }
    }
  }
}

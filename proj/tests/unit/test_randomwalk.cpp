#include "cmela/randomwalk.hpp"
#include "cmela/registry.hpp"

#include <doctest.h>

#include <random>

using namespace cmela;

TEST_CASE("boundary crossing ratio hand cases") {
  CHECK(boundary_crossing_ratio({0, 0, 0, 0}) == 0.0);
  CHECK(boundary_crossing_ratio({0, 1, 0, 1}) == 1.0);
  CHECK(boundary_crossing_ratio({0, 0, 1, 1, 0}) == 0.5);
  CHECK(boundary_crossing_ratio({1, 1}) == 0.0);
  CHECK_THROWS_AS(boundary_crossing_ratio({1}), ConfigError);
}

TEST_CASE("ratio properties on random sequences") {
  std::mt19937_64 rng(12);
  std::bernoulli_distribution coin(0.3);
  std::uniform_int_distribution<int> len(2, 200);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::uint8_t> b(len(rng));
    for (auto& x : b) x = coin(rng);
    const double r = boundary_crossing_ratio(b);
    CHECK(r >= 0.0);
    CHECK(r <= 1.0);
    const bool constant = std::all_of(b.begin(), b.end(), [&](auto x) { return x == b[0]; });
    CHECK((r == 0.0) == constant);
    auto flipped = b;
    for (auto& x : flipped) x = 1 - x;
    CHECK(boundary_crossing_ratio(flipped) == r);
  }
}

TEST_CASE("walk steps stay inside the box and within the step size") {
  const auto reg = register_builtin_problems();
  for (const char* id : {"MW6", "CTP6", "DAS-CMOP2"}) {
    const auto p = reg.make(id, {.dimension = 3});
    const WalkConfig config{2000, 0.01, 1, 4};
    Matrix trace;
    const auto b = simple_random_walk(p, config, 0, &trace);
    REQUIRE(trace.cols() == 2000);
    const Vector delta = 0.01 * p.range();
    for (Index i = 0; i < trace.cols(); ++i) {
      CHECK(((trace.col(i).array() >= p.lower().array()) && (trace.col(i).array() <= p.upper().array())).all());
      if (i > 0) CHECK(((trace.col(i) - trace.col(i - 1)).cwiseAbs().array() <= delta.array() * (1 + 1e-12)).all());
      CHECK(b[i] == (evaluate(p, trace.col(i)).is_feasible ? 0 : 1));
    }
  }
}

TEST_CASE("walks are reproducible per seed and run index") {
  const auto p = register_builtin_problems().make("CTP2", {.dimension = 2});
  const WalkConfig config{500, 0.01, 1, 8};
  CHECK(simple_random_walk(p, config, 3) == simple_random_walk(p, config, 3));
  CHECK(simple_random_walk(p, config, 3) != simple_random_walk(p, config, 4));
  WalkConfig other = config;
  other.seed = 9;
  CHECK(simple_random_walk(p, config, 3) != simple_random_walk(p, other, 3));
}

TEST_CASE("fully feasible and fully infeasible walks") {
  const auto reg = register_builtin_problems();
  const auto free = reg.make("MW7", {.dimension = 2}).without_constraints();
  const auto b = simple_random_walk(free, {1000, 0.01, 1, 0}, 0);
  CHECK(std::count(b.begin(), b.end(), 0) == 1000);
  const auto f = randomwalk_features(free, {1000, 0.01, 30, 0}, 2);
  CHECK(*f.rfb_min == 0.0);
  CHECK(*f.rfb_med == 0.0);
  CHECK(*f.rfb_max == 0.0);

  const ProblemInstance never("never", "toy", {2, 1, 1, 0}, Vector::Zero(2), Vector::Ones(2),
                              [](auto x, auto f, auto g, auto) {
                                f[0] = x[0];
                                g[0] = 1.0;
                              });
  const auto nb = simple_random_walk(never, {1000, 0.01, 1, 0}, 0);
  CHECK(std::count(nb.begin(), nb.end(), 1) == 1000);
}

TEST_CASE("single walk: all three statistics coincide") {
  const auto p = register_builtin_problems().make("DAS-CMOP1", {.dimension = 2});
  const auto f = randomwalk_features(p, {5000, 0.01, 1, 2});
  CHECK(f.rfb_min == f.rfb_med);
  CHECK(f.rfb_med == f.rfb_max);
}

TEST_CASE("worker count does not change the features") {
  const auto p = register_builtin_problems().make("MW11", {.dimension = 2});
  const WalkConfig config{3000, 0.01, 12, 5};
  const auto a = randomwalk_features(p, config, 1);
  const auto b = randomwalk_features(p, config, 4);
  CHECK(a.rfb_min == b.rfb_min);
  CHECK(a.rfb_med == b.rfb_med);
  CHECK(a.rfb_max == b.rfb_max);
  CHECK(*a.rfb_min <= *a.rfb_med);
  CHECK(*a.rfb_med <= *a.rfb_max);
}

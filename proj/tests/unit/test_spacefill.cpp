#include "cmela/registry.hpp"
#include "cmela/rng.hpp"
#include "cmela/sampling.hpp"
#include "cmela/spacefill.hpp"

#include "toy_problems.hpp"

#include <doctest.h>

using namespace cmela;

namespace {

EvaluatedSample lhs(const ProblemInstance& p, Index n, std::uint64_t seed) {
  return evaluate_sample(p, generate({SampleKind::LatinHypercube, n, seed, streams::kSpaceFill, p.dimension()}, p));
}

void check_invariants(const ProblemInstance& p, const EvaluatedSample& s, const DbscanParams& params) {
  const auto f = spacefill_features(p, s, params);
  const auto fc = cluster_feasible(p, s, params);
  const double n = static_cast<double>(s.size());
  CHECK(*f.rho_f == static_cast<double>(s.feasible_count()) / n);
  CHECK(*f.n_com == fc.labeling.num_clusters);
  if (*f.n_com == 0) {
    CHECK_FALSE(f.com_min.has_value());
    CHECK_FALSE(f.com_med.has_value());
    CHECK_FALSE(f.com_max.has_value());
    CHECK_FALSE(f.opt_com_max.has_value());
    CHECK_FALSE(f.com_opt.has_value());
    return;
  }
  CHECK(*f.com_min <= *f.com_med);
  CHECK(*f.com_med <= *f.com_max);
  double total = 0.0;
  for (Index c : fc.labeling.cluster_sizes()) total += static_cast<double>(c) / n;
  CHECK(std::abs(total + static_cast<double>(fc.labeling.noise_count()) / n - *f.rho_f) <= 1e-12);
  CHECK(*f.opt_com_max >= 0.0);
  CHECK(*f.opt_com_max <= 1.0);
  if (f.com_opt) CHECK(*f.com_opt >= 1.0 / n);
  if (f.rho_bound_opt) {
    CHECK(*f.rho_bound_opt >= 0.0);
    CHECK(*f.rho_bound_opt <= 1.0);
  }
  CHECK(*f.corr_min <= *f.corr_max);
}

}  // namespace

TEST_CASE("unconstrained wrapper: one component covering everything") {
  const auto p = register_builtin_problems().make("C2-DTLZ2", {.dimension = 2}).without_constraints();
  const auto f = spacefill_features(p, lhs(p, 25000, 1), {0.02, 5});
  CHECK(*f.rho_f == 1.0);
  CHECK(*f.n_com == 1.0);
  CHECK(*f.com_max == 1.0);
  // v is constant, so no rank correlation exists
  CHECK_FALSE(f.corr_min.has_value());
  CHECK_FALSE(f.corr_max.has_value());
}

TEST_CASE("objective equal to a transform of v gives extreme correlations") {
  const auto up = toy::violation_as_objective(1.0);
  const auto s = lhs(up, 2000, 4);
  // ties at v = 0 are shared by both vectors, so the ranks agree exactly
  CHECK(*spacefill_features(up, s, {0.02, 5}).corr_max == doctest::Approx(1.0).epsilon(1e-12));
  const auto down = toy::violation_as_objective(-1.0);
  CHECK(*spacefill_features(down, lhs(down, 2000, 4), {0.02, 5}).corr_min == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("no feasible points") {
  const auto p = toy::bowl();
  const auto f = spacefill_features(p, lhs(p, 1000, 2), {0.02, 5});
  CHECK(*f.rho_f == 0.0);
  CHECK(*f.n_com == 0.0);
  CHECK_FALSE(f.com_max.has_value());
  CHECK_FALSE(f.rho_bound_opt.has_value());
  CHECK(f.corr_min.has_value());
}

TEST_CASE("space-filling invariants across problems") {
  const auto reg = register_builtin_problems();
  for (const char* id : {"C2-DTLZ2", "DAS-CMOP1", "MW7", "MW6", "CTP3", "DC2-DTLZ3", "MW2"}) {
    const auto p = reg.make(id, {.dimension = 2});
    check_invariants(p, lhs(p, 5000, 6), {0.04, 5});
  }
  const auto p3 = reg.make("DAS-CMOP4", {.dimension = 3});
  check_invariants(p3, lhs(p3, 20000, 1), {0.06, 5});
}

TEST_CASE("C2-DTLZ2 has three feasible components") {
  const auto p = register_builtin_problems().make("C2-DTLZ2", {.dimension = 2});
  const auto f = spacefill_features(p, lhs(p, 25000, 7), {0.02, 5});
  CHECK(*f.n_com == 3.0);
  CHECK(*f.com_opt > 0.0);
}

TEST_CASE("features are stored under their record keys") {
  SpacefillFeatures f;
  f.n_com = 2;
  f.rho_bound_opt = 0.25;
  FeatureRecord r;
  f.store(r);
  CHECK(*r["n_com"] == 2);
  CHECK(*r["rho_bound_opt"] == 0.25);
  CHECK_FALSE(r["com_min"].has_value());
}

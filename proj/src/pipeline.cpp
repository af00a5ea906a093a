#include "cmela/pipeline.hpp"

#include "cmela/infocontent.hpp"
#include "cmela/randomwalk.hpp"
#include "cmela/rng.hpp"
#include "cmela/spacefill.hpp"

namespace cmela {

namespace {

bool selected(const FeatureOptions& o, Family f) { return o.families[static_cast<std::size_t>(f)]; }

}  // namespace

nlohmann::ordered_json parameter_snapshot(const ProblemInstance& problem, const FeatureOptions& o) {
  const int d = problem.dimension();
  nlohmann::ordered_json p;
  p["families"] = nlohmann::ordered_json::array();
  for (Family f : {Family::SpaceFill, Family::InfoContent, Family::RandomWalk, Family::AdaptiveWalk})
    if (selected(o, f)) p["families"].push_back(family_name(f));
  p["equality_tolerance"] = problem.equality_tolerance();
  if (!problem.variant().empty()) p["variant"] = problem.variant();
  p["spacefill_samples"] = o.spacefill_samples.value_or(defaults::spacefill_samples(d));
  p["adaptive_samples"] = o.adaptive_samples.value_or(defaults::adaptive_samples(d));
  p["infocontent_samples"] = o.infocontent_samples.value_or(defaults::infocontent_samples(d));
  p["dbscan"] = {{"eps", o.epsilon.value_or(defaults::epsilon(d))}, {"min_samples", defaults::kMinSamples}};
  p["random_walk"] = {{"walks", o.walks}, {"steps", o.steps}, {"step_fraction", defaults::kStepFraction}};
  p["local_search"] = {{"method", "projected BFGS, forward-difference gradient, Armijo backtracking"},
                       {"max_iterations", o.local_search.max_iterations},
                       {"gradient_step", o.local_search.gradient_step},
                       {"step_tolerance", o.local_search.step_tolerance},
                       {"gradient_tolerance", o.local_search.gradient_tolerance},
                       {"max_step", o.local_search.max_step},
                       {"feasibility_tolerance", defaults::kFeasibilityTolerance}};
  return p;
}

FeatureRecord compute_features(const ProblemInstance& problem, const FeatureOptions& o) {
  const int d = problem.dimension();
  FeatureRecord r;
  r.problem = problem.id();
  r.suite = problem.suite();
  r.dimension = d;
  r.seed = o.seed;
  r.parameters = parameter_snapshot(problem, o);
  const DbscanParams dbscan{o.epsilon.value_or(defaults::epsilon(d)), defaults::kMinSamples};

  if (selected(o, Family::SpaceFill)) {
    const SamplePlan plan{SampleKind::LatinHypercube, o.spacefill_samples.value_or(defaults::spacefill_samples(d)),
                          o.seed, streams::kSpaceFill, d};
    const auto sample = evaluate_plan(problem, plan, o.workers, o.cache);
    spacefill_features(problem, sample, dbscan, o.workers).store(r);
  }
  if (selected(o, Family::InfoContent))
    info_features(problem, o.infocontent_samples.value_or(defaults::infocontent_samples(d)), o.seed, o.workers, o.cache)
        .store(r);
  if (selected(o, Family::RandomWalk))
    randomwalk_features(problem, {o.steps, defaults::kStepFraction, o.walks, o.seed}, o.workers).store(r);
  if (selected(o, Family::AdaptiveWalk)) {
    const SamplePlan plan{SampleKind::LatinHypercube, o.adaptive_samples.value_or(defaults::adaptive_samples(d)),
                          o.seed, streams::kAdaptiveWalk, d};
    const auto analysis = analyze_basins(problem, plan, o.local_search, dbscan, o.workers);
    analysis.features.store(r);
    if (analysis.aborted > 0) r.parameters["local_search"]["aborted_starts"] = analysis.aborted;
    if (o.terminals_csv) write_terminals_csv(*o.terminals_csv, analysis);
  }
  r.timestamp = utc_timestamp();
  return r;
}

std::string record_file_name(const FeatureRecord& r) {
  return r.problem + "_D" + std::to_string(r.dimension) + "_s" + std::to_string(r.seed) + ".json";
}

}  // namespace cmela

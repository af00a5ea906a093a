#include "cmela/sensitivity.hpp"

#include "cmela/rng.hpp"
#include "cmela/spacefill.hpp"

#include <algorithm>
#include <fstream>

namespace cmela {

int SensitivityCell::matches(int expected) const {
  return static_cast<int>(std::count(counts.begin(), counts.end(), expected));
}

std::vector<SensitivityCell> sensitivity_sweep(const ProblemInstance& problem, const SensitivityConfig& config,
                                               int workers, const SampleCache& cache) {
  if (config.sample_sizes.empty() || config.epsilons.empty() || config.repetitions < 1)
    throw ConfigError("sensitivity sweep needs sample sizes, epsilons and at least one repetition");
  std::vector<SensitivityCell> cells;
  for (Index n : config.sample_sizes)
    for (double eps : config.epsilons) cells.push_back({n, eps, {}});
  for (std::size_t a = 0; a < config.sample_sizes.size(); ++a) {
    for (int r = 0; r < config.repetitions; ++r) {
      const SamplePlan plan{SampleKind::LatinHypercube, config.sample_sizes[a], config.seed + static_cast<std::uint64_t>(r),
                            streams::kSpaceFill, problem.dimension()};
      const EvaluatedSample sample = evaluate_plan(problem, plan, workers, cache);
      for (std::size_t b = 0; b < config.epsilons.size(); ++b) {
        const auto fc = cluster_feasible(problem, sample, {config.epsilons[b], 5}, workers);
        cells[a * config.epsilons.size() + b].counts.push_back(fc.labeling.num_clusters);
      }
    }
  }
  return cells;
}

void write_sensitivity_csv(const std::filesystem::path& path, const std::vector<SensitivityCell>& cells, int expected) {
  std::ofstream out(path);
  if (!out) throw ComputationError("cannot write " + path.string());
  out << "samples,eps,runs,matches,match_rate,min,max\n";
  for (const auto& c : cells) {
    const auto [lo, hi] = std::minmax_element(c.counts.begin(), c.counts.end());
    out << c.samples << ',' << c.epsilon << ',' << c.counts.size() << ',' << c.matches(expected) << ','
        << static_cast<double>(c.matches(expected)) / static_cast<double>(c.counts.size()) << ',' << *lo << ',' << *hi
        << '\n';
  }
}

}  // namespace cmela

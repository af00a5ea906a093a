#include "cmela/randomwalk.hpp"

#include "cmela/parallel.hpp"
#include "cmela/rng.hpp"
#include "cmela/stats.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>

namespace cmela {

namespace {

constexpr int kRedraws = 100;

}  // namespace

void RandomWalkFeatures::store(FeatureRecord& r) const {
  r["rfb_min"] = rfb_min;
  r["rfb_med"] = rfb_med;
  r["rfb_max"] = rfb_max;
}

std::vector<std::uint8_t> simple_random_walk(const ProblemInstance& problem, const WalkConfig& config,
                                             int run_index, Matrix* trace) {
  if (config.steps < 1) throw ConfigError("random walk needs at least one step");
  if (!(config.step_fraction > 0.0)) throw ConfigError("random walk step fraction must be positive");
  const int d = problem.dimension();
  const Vector& lo = problem.lower();
  const Vector& hi = problem.upper();
  const Vector delta = config.step_fraction * problem.range();
  auto rng = make_stream(config.seed, streams::kRandomWalkBase + static_cast<std::uint64_t>(run_index));

  Vector x(d), y(d), f(problem.num_objectives()), g(problem.num_constraints());
  for (int a = 0; a < d; ++a) x(a) = std::min(hi(a), lo(a) + uniform01(rng) * (hi(a) - lo(a)));
  if (trace) trace->resize(d, config.steps);

  std::vector<std::uint8_t> b(static_cast<std::size_t>(config.steps));
  const auto D = static_cast<std::size_t>(d);
  for (Index i = 0; i < config.steps; ++i) {
    if (i > 0) {
      bool inside = false;
      for (int attempt = 0; attempt < kRedraws && !inside; ++attempt) {
        for (int a = 0; a < d; ++a) y(a) = x(a) + (2.0 * uniform01(rng) - 1.0) * delta(a);
        inside = ((y.array() >= lo.array()) && (y.array() <= hi.array())).all();
      }
      if (!inside)
        for (int a = 0; a < d; ++a) {
          if (y(a) < lo(a)) y(a) = 2.0 * lo(a) - y(a);
          if (y(a) > hi(a)) y(a) = 2.0 * hi(a) - y(a);
          y(a) = std::clamp(y(a), lo(a), hi(a));
        }
      x = y;
    }
    if (trace) trace->col(i) = x;
    const double v = problem.evaluate_into({x.data(), D}, {f.data(), static_cast<std::size_t>(f.size())}, {g.data(), static_cast<std::size_t>(g.size())});
    if (!std::isfinite(v)) throw ComputationError(problem.id() + ": non-finite violation during random walk");
    b[i] = v == 0.0 ? 0 : 1;
  }
  return b;
}

double boundary_crossing_ratio(const std::vector<std::uint8_t>& b) {
  if (b.size() < 2) throw ConfigError("boundary crossing ratio needs at least two points");
  std::size_t crossings = 0;
  for (std::size_t i = 1; i < b.size(); ++i) crossings += b[i] != b[i - 1];
  return static_cast<double>(crossings) / static_cast<double>(b.size() - 1);
}

RandomWalkFeatures randomwalk_features(const ProblemInstance& problem, const WalkConfig& config, int workers) {
  if (config.repetitions < 1) throw ConfigError("need at least one random walk");
  if (config.steps < 2) throw ConfigError("random walks need at least two steps");
  std::vector<double> ratios(static_cast<std::size_t>(config.repetitions));
  parallel_for(config.repetitions, workers, [&](long begin, long end) {
    for (long r = begin; r < end; ++r)
      ratios[r] = boundary_crossing_ratio(simple_random_walk(problem, config, static_cast<int>(r)));
  });
  RandomWalkFeatures out;
  out.rfb_min = *std::min_element(ratios.begin(), ratios.end());
  out.rfb_max = *std::max_element(ratios.begin(), ratios.end());
  out.rfb_med = lower_median(ratios);
  return out;
}

void write_walk_trace_csv(const std::filesystem::path& path, const Matrix& trace,
                          const std::vector<std::uint8_t>& b) {
  std::ofstream out(path);
  if (!out) throw ComputationError("cannot write " + path.string());
  for (Index a = 0; a < trace.rows(); ++a) out << 'x' << a + 1 << ',';
  out << "b\n" << std::setprecision(17);
  for (Index i = 0; i < trace.cols(); ++i) {
    for (Index a = 0; a < trace.rows(); ++a) out << trace(a, i) << ',';
    out << static_cast<int>(b[i]) << '\n';
  }
}

}  // namespace cmela

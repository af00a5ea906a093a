#include "cmela/gridscan.hpp"

#include "cmela/pareto.hpp"
#include "cmela/sampling.hpp"

#include <fstream>
#include <iomanip>

namespace cmela {

GridScan grid_scan(const ProblemInstance& problem, int resolution, int workers) {
  if (problem.dimension() != 2) throw ConfigError("grid scan needs D = 2, got D = " + std::to_string(problem.dimension()));
  GridScan s;
  s.resolution = resolution;
  s.sample = evaluate_sample(problem, grid(resolution, problem.lower(), problem.upper()), workers);
  const Index n = s.sample.size();
  s.feasible.resize(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) s.feasible[i] = s.sample.feasible(i);
  s.dominance_ratio = dominance_ratio(s.sample.F, workers);
  s.nondominated = nondominated_mask(s.sample.F, s.feasible);
  return s;
}

ClusterLabeling grid_components(const GridScan& scan, Index min_samples, int workers) {
  std::vector<Index> kept;
  for (Index i = 0; i < scan.sample.size(); ++i)
    if (scan.feasible[i]) kept.push_back(i);
  const double step = 1.0 / (scan.resolution - 1);
  Matrix P(2, static_cast<Index>(kept.size()));
  // unit-box coordinates straight from the grid indices, free of bound rounding
  for (std::size_t k = 0; k < kept.size(); ++k)
    P.col(k) << (kept[k] % scan.resolution) * step, (kept[k] / scan.resolution) * step;
  return cluster(P, {1.5 * step, min_samples}, workers);
}

namespace {

template <typename Value>
void write_column(const std::filesystem::path& path, const std::string& name, const GridScan& s, Value value) {
  std::ofstream out(path);
  if (!out) throw ComputationError("cannot write " + path.string());
  out << "x1,x2," << name << '\n' << std::setprecision(17);
  for (Index i = 0; i < s.sample.size(); ++i) out << s.sample.X(0, i) << ',' << s.sample.X(1, i) << ',' << value(i) << '\n';
}

}  // namespace

void write_grid_scan(const std::filesystem::path& dir, const GridScan& s) {
  std::filesystem::create_directories(dir);
  write_column(dir / "violation.csv", "v", s, [&](Index i) { return s.sample.v(i); });
  write_column(dir / "feasible.csv", "feasible", s, [&](Index i) { return int(s.feasible[i]); });
  write_column(dir / "dominance_ratio.csv", "dominance_ratio", s, [&](Index i) { return s.dominance_ratio(i); });
  write_column(dir / "nondominated.csv", "nondominated", s, [&](Index i) { return int(s.nondominated[i]); });
}

}  // namespace cmela

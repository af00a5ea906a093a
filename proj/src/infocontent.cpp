#include "cmela/infocontent.hpp"

#include "cmela/rng.hpp"

#include <array>
#include <cmath>
#include <limits>

namespace cmela {

namespace {

constexpr double kSettled = 0.05;

}  // namespace

void InfoContentFeatures::store(FeatureRecord& r) const {
  r["h_max"] = h_max;
  r["eps_s"] = eps_s;
  r["m0"] = m0;
}

std::vector<Index> nearest_neighbor_tour(const Matrix& points, Index start) {
  const Index n = points.cols();
  if (n == 0) return {};
  if (start < 0 || start >= n) throw ConfigError("tour start out of range");
  std::vector<Index> tour{start};
  tour.reserve(static_cast<std::size_t>(n));
  // unvisited indices kept in ascending order so the strict '<' below prefers the lowest index
  std::vector<Index> open;
  open.reserve(static_cast<std::size_t>(n));
  for (Index j = 0; j < n; ++j)
    if (j != start) open.push_back(j);
  Index current = start;
  while (!open.empty()) {
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < open.size(); ++k) {
      const double d = (points.col(open[k]) - points.col(current)).squaredNorm();
      if (d < best_d) {
        best_d = d;
        best = k;
      }
    }
    current = open[best];
    open.erase(open.begin() + static_cast<std::ptrdiff_t>(best));
    tour.push_back(current);
  }
  return tour;
}

Vector tour_slopes(const Matrix& points, const Vector& v, const std::vector<Index>& tour) {
  const Index n = static_cast<Index>(tour.size());
  Vector s(std::max<Index>(0, n - 1));
  for (Index i = 0; i + 1 < n; ++i) {
    const double dv = v(tour[i + 1]) - v(tour[i]);
    const double dx = (points.col(tour[i + 1]) - points.col(tour[i])).norm();
    if (dx > 0.0) s(i) = dv / dx;
    else s(i) = dv == 0.0 ? 0.0 : std::copysign(std::numeric_limits<double>::infinity(), dv);
  }
  return s;
}

std::vector<Symbol> symbolize(const Vector& slopes, double lambda) {
  std::vector<Symbol> out(static_cast<std::size_t>(slopes.size()));
  for (Index i = 0; i < slopes.size(); ++i) {
    const double s = slopes(i);
    out[i] = s < -lambda ? Symbol::Down : (s > lambda ? Symbol::Up : Symbol::Flat);
  }
  return out;
}

double entropy_H(const std::vector<Symbol>& symbols) {
  if (symbols.size() < 2) return 0.0;
  std::array<std::size_t, 9> counts{};
  for (std::size_t i = 0; i + 1 < symbols.size(); ++i)
    ++counts[3 * static_cast<int>(symbols[i]) + static_cast<int>(symbols[i + 1])];
  const double blocks = static_cast<double>(symbols.size() - 1);
  double h = 0.0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      if (a == b || counts[3 * a + b] == 0) continue;
      const double p = static_cast<double>(counts[3 * a + b]) / blocks;
      h -= p * std::log(p);
    }
  return h / std::log(6.0);
}

double partial_information(const std::vector<Symbol>& symbols) {
  if (symbols.empty()) return 0.0;
  std::size_t kept = 0;
  Symbol last = Symbol::Flat;
  for (Symbol s : symbols) {
    if (s == Symbol::Flat || s == last) continue;
    ++kept;
    last = s;
  }
  return static_cast<double>(kept) / static_cast<double>(symbols.size());
}

std::vector<double> lambda_grid() {
  std::vector<double> grid{0.0};
  for (int q = -32; q <= 64; ++q) grid.push_back(std::pow(10.0, q / 4.0));
  return grid;
}

InfoContentFeatures info_features_from_slopes(const Vector& slopes) {
  InfoContentFeatures out;
  double h_max = 0.0;
  for (double lambda : lambda_grid()) {
    const auto symbols = symbolize(slopes, lambda);
    const double h = entropy_H(symbols);
    h_max = std::max(h_max, h);
    if (lambda == 0.0) out.m0 = partial_information(symbols);
    // log10(0) is meaningless, so settling is searched over the positive thresholds
    else if (!out.eps_s && h < kSettled) out.eps_s = std::log10(lambda);
  }
  out.h_max = h_max;
  return out;
}

InfoContentFeatures info_features(const ProblemInstance& problem, Index sample_size, std::uint64_t seed,
                                  int workers, const SampleCache& cache) {
  if (sample_size < 3) throw ConfigError("information content needs at least three points");
  const SamplePlan plan{SampleKind::LatinHypercube, sample_size, seed, streams::kInfoContent, problem.dimension()};
  const EvaluatedSample s = evaluate_plan(problem, plan, workers, cache);
  const Matrix unit = to_unit_box(s.X, problem.lower(), problem.upper());
  auto rng = make_stream(seed, streams::kTourStart);
  const auto start = static_cast<Index>(uniform_index(rng, static_cast<std::uint64_t>(sample_size)));
  const auto tour = nearest_neighbor_tour(unit, start);
  return info_features_from_slopes(tour_slopes(unit, s.v, tour));
}

}  // namespace cmela

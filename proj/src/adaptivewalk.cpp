#include "cmela/adaptivewalk.hpp"

#include "cmela/parallel.hpp"
#include "cmela/pareto.hpp"
#include "cmela/stats.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace cmela {

namespace {

constexpr double kArmijo = 1e-4;
constexpr int kBacktracks = 60;

// v as a function of unit-box coordinates
class Objective {
 public:
  explicit Objective(const ProblemInstance& p)
      : p_(p), lo_(p.lower()), range_(p.range()), x_(p.dimension()), f_(p.num_objectives()), g_(p.num_constraints()) {}

  double operator()(const Vector& u) {
    x_ = lo_ + u.cwiseProduct(range_);
    // keep the upper bound exact despite rounding
    for (Index i = 0; i < x_.size(); ++i) x_(i) = std::min(x_(i), p_.upper()(i));
    ++evaluations;
    return p_.evaluate_into({x_.data(), static_cast<std::size_t>(x_.size())},
                            {f_.data(), static_cast<std::size_t>(f_.size())},
                            {g_.data(), static_cast<std::size_t>(g_.size())});
  }

  Vector point(const Vector& u) const {
    Vector x = lo_ + u.cwiseProduct(range_);
    for (Index i = 0; i < x.size(); ++i) x(i) = std::clamp(x(i), p_.lower()(i), p_.upper()(i));
    return x;
  }

  long evaluations = 0;

 private:
  const ProblemInstance& p_;
  Vector lo_, range_, x_, f_, g_;
};

Vector project(Vector u) { return u.cwiseMax(0.0).cwiseMin(1.0); }

// forward differences, backward at the upper face
bool gradient(Objective& phi, const Vector& u, double value, double h, Vector& g) {
  Vector probe = u;
  for (Index i = 0; i < u.size(); ++i) {
    const double step = u(i) + h <= 1.0 ? h : -h;
    probe(i) = u(i) + step;
    const double vi = phi(probe);
    if (!std::isfinite(vi)) return false;
    g(i) = (vi - value) / step;
    probe(i) = u(i);
  }
  return true;
}

// components that the box blocks: at a bound with the gradient pointing outward
Mask active_set(const Vector& u, const Vector& g) {
  Mask a(static_cast<std::size_t>(u.size()));
  for (Index i = 0; i < u.size(); ++i) a[i] = (u(i) <= 0.0 && g(i) > 0.0) || (u(i) >= 1.0 && g(i) < 0.0);
  return a;
}

std::string describe_point(const Vector& x) {
  std::ostringstream s;
  s << std::setprecision(17) << '(';
  for (Index i = 0; i < x.size(); ++i) s << (i ? ", " : "") << x(i);
  s << ')';
  return s.str();
}

}  // namespace

std::string_view status_name(SearchStatus status) {
  switch (status) {
    case SearchStatus::AlreadyFeasible:
      return "already-feasible";
    case SearchStatus::Feasible:
      return "feasible";
    case SearchStatus::SmallStep:
      return "small-step";
    case SearchStatus::Stationary:
      return "stationary";
    case SearchStatus::LineSearchFailed:
      return "line-search-failed";
    case SearchStatus::IterationLimit:
      return "iteration-limit";
  }
  return "";
}

bool feasibility_tolerance_check(double v) { return v <= defaults::kFeasibilityTolerance; }

std::optional<LocalSearchResult> local_search(const ProblemInstance& problem, const Vector& x0,
                                              const LocalSearchConfig& config, std::string* diagnostic) {
  const EvaluatedPoint start = [&] {
    try {
      return evaluate(problem, x0);
    } catch (const ComputationError&) {
      return EvaluatedPoint{x0, {}, {}, std::numeric_limits<double>::quiet_NaN(), false};
    }
  }();
  auto fail = [&](const Vector& where) -> std::optional<LocalSearchResult> {
    if (diagnostic) *diagnostic = problem.id() + ": non-finite violation at " + describe_point(where);
    return std::nullopt;
  };
  if (!std::isfinite(start.v)) return fail(x0);

  LocalSearchResult r;
  r.v_start = start.v;
  r.x = x0;
  r.f = start.f;
  r.v = start.v;
  if (start.v == 0.0) return r;

  Objective phi(problem);
  const Index d = x0.size();
  Vector u = project((x0 - problem.lower()).cwiseQuotient(problem.range()));
  double value = phi(u);
  if (!std::isfinite(value)) return fail(x0);
  Vector g(d);
  if (!gradient(phi, u, value, config.gradient_step, g)) return fail(phi.point(u));
  Matrix H = Matrix::Identity(d, d);
  r.status = SearchStatus::IterationLimit;

  for (r.iterations = 0; r.iterations < config.max_iterations;) {
    const Mask active = active_set(u, g);
    Vector pg = g;
    for (Index i = 0; i < d; ++i)
      if (active[i]) pg(i) = 0.0;
    if (pg.lpNorm<Eigen::Infinity>() < config.gradient_tolerance) {
      r.status = SearchStatus::Stationary;
      break;
    }

    Vector p = -(H * pg);
    for (Index i = 0; i < d; ++i)
      if (active[i]) p(i) = 0.0;
    if (!(pg.dot(p) < 0.0)) {
      H.setIdentity();
      p = -pg;
    }
    double alpha = std::min(1.0, config.max_step / p.lpNorm<Eigen::Infinity>());

    Vector trial;
    double trial_value = value;
    bool accepted = false;
    for (int k = 0; k < kBacktracks; ++k, alpha *= 0.5) {
      trial = project(u + alpha * p);
      trial_value = phi(trial);
      if (!std::isfinite(trial_value)) return fail(phi.point(trial));
      const double decrease = g.dot(trial - u);
      if (decrease < 0.0 && trial_value <= value + kArmijo * decrease) {
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      r.status = SearchStatus::LineSearchFailed;
      break;
    }
    ++r.iterations;
    const Vector s = trial - u;
    u = trial;
    value = trial_value;
    if (value == 0.0) {
      r.status = SearchStatus::Feasible;
      break;
    }
    if (s.norm() < config.step_tolerance) {
      r.status = SearchStatus::SmallStep;
      break;
    }

    Vector g_new(d);
    if (!gradient(phi, u, value, config.gradient_step, g_new)) return fail(phi.point(u));
    const Vector y = g_new - g;
    const double sy = s.dot(y);
    if (sy > 1e-12 * s.norm() * y.norm()) {
      const double rho = 1.0 / sy;
      const Matrix V = Matrix::Identity(d, d) - rho * y * s.transpose();
      H = V.transpose() * H * V + rho * s * s.transpose();
    }
    g = g_new;
  }

  r.x = phi.point(u);
  EvaluatedPoint end;
  try {
    end = evaluate(problem, r.x);
  } catch (const ComputationError&) {
    return fail(r.x);
  }
  r.f = end.f;
  r.v = end.v;
  // the clamp in point() can only move a coordinate by rounding; guard monotonicity anyway
  if (r.v > r.v_start) {
    r.x = x0;
    r.f = start.f;
    r.v = start.v;
  }
  return r;
}

void BasinFeatures::store(FeatureRecord& r) const {
  r["n_basin"] = n_basin;
  r["basin_min"] = basin_min;
  r["basin_med"] = basin_med;
  r["basin_max"] = basin_max;
  r["fbasin_min"] = fbasin_min;
  r["fbasin_med"] = fbasin_med;
  r["fbasin_max"] = fbasin_max;
  r["union_fbasin"] = union_fbasin;
  r["v_basin_med"] = v_basin_med;
  r["v_basin_max"] = v_basin_max;
  r["v_basin_of_max"] = v_basin_of_max;
  r["opt_basin_max"] = opt_basin_max;
  r["basin_opt"] = basin_opt;
}

BasinAnalysis analyze_basins(const ProblemInstance& problem, const SamplePlan& plan,
                             const LocalSearchConfig& ls, const DbscanParams& params, int workers) {
  BasinAnalysis a;
  a.starts = generate(plan, problem);
  const Index n = a.starts.cols();
  if (n == 0) throw ConfigError("adaptive walk needs a nonempty sample");
  a.results.resize(static_cast<std::size_t>(n));
  std::vector<std::string> why(static_cast<std::size_t>(n));
  parallel_for(n, workers, [&](long begin, long end) {
    for (long j = begin; j < end; ++j) a.results[j] = local_search(problem, a.starts.col(j), ls, &why[j]);
  });
  for (Index j = 0; j < n; ++j) {
    if (a.results[j]) {
      a.converged.push_back(j);
    } else {
      ++a.aborted;
      a.diagnostics.push_back(std::move(why[j]));
    }
  }
  if (a.converged.empty()) return a;

  const Index m = static_cast<Index>(a.converged.size());
  Matrix T(problem.dimension(), m), F(problem.num_objectives(), m);
  Mask feasible(static_cast<std::size_t>(m));
  for (Index k = 0; k < m; ++k) {
    const auto& r = *a.results[a.converged[k]];
    T.col(k) = r.x;
    F.col(k) = r.f;
    feasible[k] = feasibility_tolerance_check(r.v);
  }
  a.labeling = cluster(to_unit_box(T, problem.lower(), problem.upper()), params, workers);
  a.nondominated = nondominated_mask(F, feasible);

  const int nb = a.labeling.num_clusters;
  BasinFeatures& out = a.features;
  out.n_basin = static_cast<double>(nb);
  if (nb == 0) return a;

  const std::vector<Index> counts = a.labeling.cluster_sizes();
  a.basin_violation.assign(static_cast<std::size_t>(nb), std::numeric_limits<double>::infinity());
  std::vector<Index> nd_count(static_cast<std::size_t>(nb), 0);
  for (Index k = 0; k < m; ++k) {
    const int l = a.labeling.labels[k];
    if (l == ClusterLabeling::kNoise) continue;
    a.basin_violation[l] = std::min(a.basin_violation[l], a.results[a.converged[k]]->v);
    nd_count[l] += a.nondominated[k];
  }
  a.basin_feasible.resize(static_cast<std::size_t>(nb));
  std::vector<double> sizes, feasible_sizes;
  double union_feasible = 0.0;
  for (int l = 0; l < nb; ++l) {
    const double size = static_cast<double>(counts[l]) / static_cast<double>(n);
    sizes.push_back(size);
    a.basin_feasible[l] = feasibility_tolerance_check(a.basin_violation[l]);
    if (a.basin_feasible[l]) {
      feasible_sizes.push_back(size);
      union_feasible += size;
    }
  }
  out.basin_min = *std::min_element(sizes.begin(), sizes.end());
  out.basin_max = *std::max_element(sizes.begin(), sizes.end());
  out.basin_med = lower_median(sizes);
  if (!feasible_sizes.empty()) {
    out.fbasin_min = *std::min_element(feasible_sizes.begin(), feasible_sizes.end());
    out.fbasin_max = *std::max_element(feasible_sizes.begin(), feasible_sizes.end());
    out.fbasin_med = lower_median(feasible_sizes);
  }
  out.union_fbasin = union_feasible;
  out.v_basin_med = lower_median(a.basin_violation);
  out.v_basin_max = *std::max_element(a.basin_violation.begin(), a.basin_violation.end());

  const auto largest = std::max_element(counts.begin(), counts.end()) - counts.begin();
  out.v_basin_of_max = a.basin_violation[largest];
  out.opt_basin_max = static_cast<double>(nd_count[largest]) / static_cast<double>(counts[largest]);
  const auto best = std::max_element(nd_count.begin(), nd_count.end()) - nd_count.begin();
  if (nd_count[best] > 0) out.basin_opt = sizes[best];
  return a;
}

void write_terminals_csv(const std::filesystem::path& path, const BasinAnalysis& a) {
  std::ofstream out(path);
  if (!out) throw ComputationError("cannot write " + path.string());
  const Index d = a.starts.rows();
  for (Index i = 0; i < d; ++i) out << "start" << i + 1 << ',';
  for (Index i = 0; i < d; ++i) out << "x" << i + 1 << ',';
  out << "v,iterations,status,basin\n" << std::setprecision(17);
  std::vector<int> label_of(static_cast<std::size_t>(a.starts.cols()), ClusterLabeling::kNoise);
  for (std::size_t k = 0; k < a.converged.size(); ++k) label_of[a.converged[k]] = a.labeling.labels[k];
  for (Index j = 0; j < a.starts.cols(); ++j) {
    for (Index i = 0; i < d; ++i) out << a.starts(i, j) << ',';
    const auto& r = a.results[j];
    if (!r) {
      for (Index i = 0; i < d; ++i) out << ',';
      out << ",0,aborted,\n";
      continue;
    }
    for (Index i = 0; i < d; ++i) out << r->x(i) << ',';
    out << r->v << ',' << r->iterations << ',' << status_name(r->status) << ',' << label_of[j] << '\n';
  }
}

}  // namespace cmela

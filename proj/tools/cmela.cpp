// Command-line front end: list, features, gridscan, coverage, sensitivity.

#include "cmela/coverage.hpp"
#include "cmela/gridscan.hpp"
#include "cmela/pipeline.hpp"
#include "cmela/registry.hpp"
#include "cmela/sensitivity.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

using namespace cmela;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitComputation = 3;

struct Common {
  std::vector<std::string> problems;
  std::string suite;
  std::vector<int> dims;
  std::string das_difficulty;
  double equality_tolerance = ProblemInstance::kDefaultEqualityTolerance;
  int workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
};

DasDifficulty parse_triplet(const std::string& text) {
  if (text.empty()) return kDefaultDasDifficulty;
  std::istringstream in(text);
  std::array<double, 3> t{};
  char sep = 0;
  if (!(in >> t[0] >> sep >> t[1] >> sep >> t[2]) || !in.eof())
    throw ConfigError("--das-difficulty expects three comma-separated numbers, got '" + text + "'");
  return {t[0], t[1], t[2]};
}

// Explicit ids first, then every id of the matching suites; duplicates dropped.
std::vector<std::string> select_problems(const ProblemRegistry& reg, const Common& c) {
  std::vector<std::string> ids;
  std::set<std::string> seen;
  for (const auto& id : c.problems) {
    if (!reg.contains(id)) throw ConfigError("unknown problem id: " + id);
    if (seen.insert(id).second) ids.push_back(id);
  }
  if (!c.suite.empty())
    for (const auto& id : reg.ids_in_suite(c.suite))
      if (seen.insert(id).second) ids.push_back(id);
  if (ids.empty()) throw ConfigError("no problems selected (use --problem or --suite)");
  return ids;
}

ProblemOptions options_for(const Common& c, int d) {
  return {d, c.equality_tolerance, parse_triplet(c.das_difficulty)};
}

void add_problem_flags(CLI::App* app, Common& c, bool multi) {
  if (multi) {
    app->add_option("--problem", c.problems, "Problem ids")->delimiter(',');
    app->add_option("--suite", c.suite, "Suite name or glob");
    app->add_option("--dim", c.dims, "Dimensions")->delimiter(',');
  } else {
    app->add_option("--problem", c.problems, "Problem id")->required()->expected(1);
  }
  app->add_option("--das-difficulty", c.das_difficulty, "DAS-CMOP difficulty triplet a,b,c");
  app->add_option("--equality-tolerance", c.equality_tolerance, "Equality constraint relaxation")
      ->check(CLI::PositiveNumber);
  app->add_option("--workers", c.workers, "Worker threads")->check(CLI::PositiveNumber);
}

std::string fmt(const MaybeReal& v) {
  if (!v) return "null";
  std::ostringstream s;
  s << std::setprecision(6) << *v;
  return s.str();
}

int cmd_list(const ProblemRegistry& reg, const std::string& suite, bool as_json) {
  const auto ids = suite.empty() ? reg.ids() : reg.ids_in_suite(suite);
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& id : ids) {
    const auto& e = reg.entry(id);
    const int d = e.fixed_dimensions.empty() ? std::max(2, e.min_dimension) : e.fixed_dimensions.front();
    const auto p = reg.make(id, {.dimension = d});
    nlohmann::json dims;
    if (e.fixed_dimensions.empty()) dims = ">=" + std::to_string(e.min_dimension);
    else dims = e.fixed_dimensions;
    rows.push_back({{"id", id}, {"suite", e.suite}, {"M", e.num_objectives}, {"D", dims},
                    {"constraints", p.num_constraints()}});
  }
  if (as_json) {
    std::cout << rows.dump(2) << '\n';
    return 0;
  }
  std::cout << std::left << std::setw(14) << "id" << std::setw(10) << "suite" << std::setw(4) << "M" << std::setw(8)
            << "D" << "constraints\n";
  for (const auto& r : rows)
    std::cout << std::setw(14) << r["id"].get<std::string>() << std::setw(10) << r["suite"].get<std::string>()
              << std::setw(4) << r["M"].get<int>() << std::setw(8)
              << (r["D"].is_string() ? r["D"].get<std::string>() : r["D"].dump()) << r["constraints"].get<int>()
              << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Landscape features of constrained multiobjective problems"};
  app.require_subcommand(1);

  bool list_json = false;
  std::string list_suite;
  auto* list = app.add_subcommand("list", "Print the problem registry");
  list->add_option("--suite", list_suite, "Suite name or glob");
  list->add_flag("--json", list_json, "JSON output");

  Common fc;
  FeatureOptions fo;
  std::vector<std::string> only;
  std::string out_dir = "records", cache_dir;
  std::optional<Index> samples, adaptive, info;
  std::optional<double> eps;
  bool dump_terminals = false;
  auto* features = app.add_subcommand("features", "Compute feature records");
  add_problem_flags(features, fc, true);
  features->add_option("--seed", fo.seed, "Master seed");
  features->add_option("--samples", samples, "Space-filling sample size")->check(CLI::PositiveNumber);
  features->add_option("--adaptive-samples", adaptive, "Adaptive-walk start count")->check(CLI::PositiveNumber);
  features->add_option("--info-samples", info, "Information-content sample size")->check(CLI::Range(2, 1 << 30));
  features->add_option("--eps", eps, "DBSCAN radius (unit box)")->check(CLI::PositiveNumber);
  features->add_option("--walks", fo.walks, "Random walks")->check(CLI::PositiveNumber);
  features->add_option("--steps", fo.steps, "Points per walk")->check(CLI::Range(2, 1 << 30));
  features->add_option("--only", only, "Feature families")->delimiter(',');
  features->add_option("--out", out_dir, "Output directory");
  features->add_option("--cache", cache_dir, "Sample cache directory (default $CMOP_CACHE_DIR)");
  features->add_flag("--terminals", dump_terminals, "Also write adaptive-walk terminal points");

  Common gc;
  int resolution = 501;
  std::string grid_out = "gridscan";
  auto* gridscan = app.add_subcommand("gridscan", "Evaluate a 2-D problem on a grid");
  add_problem_flags(gridscan, gc, false);
  gridscan->add_option("--resolution", resolution, "Points per axis")->check(CLI::Range(2, 5001));
  gridscan->add_option("--out", grid_out, "Output directory");

  std::string records_dir, target = kAllSuites, coverage_out = "coverage";
  auto* cov = app.add_subcommand("coverage", "Suite coverage of normalized features");
  cov->add_option("records", records_dir, "Directory of feature records")->required();
  cov->add_option("--target", target, "Target suite or 'all'");
  cov->add_option("--out", coverage_out, "Output directory");

  Common sc;
  SensitivityConfig scfg;
  std::string sens_out = "sensitivity.csv", sens_cache;
  auto* sens = app.add_subcommand("sensitivity", "Component counts over sample sizes and radii");
  add_problem_flags(sens, sc, false);
  sens->add_option("--dim", sc.dims, "Dimension")->expected(1);
  sens->add_option("--samples", scfg.sample_sizes, "Sample sizes")->delimiter(',')->required();
  sens->add_option("--eps", scfg.epsilons, "DBSCAN radii")->delimiter(',')->required();
  sens->add_option("--repetitions", scfg.repetitions, "Runs per cell")->check(CLI::PositiveNumber);
  sens->add_option("--seed", scfg.seed, "First seed");
  sens->add_option("--expected", scfg.expected, "Reference component count")->required();
  sens->add_option("--out", sens_out, "Output CSV");
  sens->add_option("--cache", sens_cache, "Sample cache directory (default $CMOP_CACHE_DIR)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    const ProblemRegistry reg = register_builtin_problems();

    if (*list) return cmd_list(reg, list_suite, list_json);

    if (*features) {
      for (const auto& name : only) {
        if (&name == &only.front()) fo.families.fill(false);
        fo.families[static_cast<std::size_t>(parse_family(name))] = true;
      }
      fo.spacefill_samples = samples;
      fo.adaptive_samples = adaptive;
      fo.infocontent_samples = info;
      fo.epsilon = eps;
      fo.workers = fc.workers;
      fo.cache = SampleCache::from_option(cache_dir);
      const auto ids = select_problems(reg, fc);
      const std::vector<int> dims = fc.dims.empty() ? std::vector<int>{2} : fc.dims;
      // validate everything before the first long computation; suite members that lack a
      // dimension are skipped, explicitly named problems are errors
      std::vector<std::pair<std::string, int>> jobs;
      for (const auto& id : ids)
        for (int d : dims) {
          if (reg.entry(id).supports_dimension(d)) {
            jobs.emplace_back(id, d);
          } else if (std::find(fc.problems.begin(), fc.problems.end(), id) != fc.problems.end()) {
            throw ConfigError(id + " is not defined for D = " + std::to_string(d));
          } else {
            std::cerr << "skipping " << id << ": not defined for D = " << d << '\n';
          }
        }
      std::filesystem::create_directories(out_dir);
      for (const auto& [id, d] : jobs) {
        const auto problem = reg.make(id, options_for(fc, d));
        FeatureOptions o = fo;
        if (dump_terminals)
          o.terminals_csv = std::filesystem::path(out_dir) /
                            (id + "_D" + std::to_string(d) + "_s" + std::to_string(fo.seed) + "_terminals.csv");
        const FeatureRecord r = compute_features(problem, o);
        const auto path = std::filesystem::path(out_dir) / record_file_name(r);
        std::ofstream(path) << to_json(r).dump(2) << '\n';
        std::cout << id << " D=" << d << " n_com=" << fmt(r["n_com"]) << " h_max=" << fmt(r["h_max"])
                  << " rfb_med=" << fmt(r["rfb_med"]) << " n_basin=" << fmt(r["n_basin"]) << " -> " << path.string()
                  << '\n';
      }
      return 0;
    }

    if (*gridscan) {
      const auto problem = reg.make(gc.problems.front(), options_for(gc, 2));
      const GridScan s = grid_scan(problem, resolution, gc.workers);
      write_grid_scan(grid_out, s);
      std::cout << problem.id() << " " << resolution << "x" << resolution << " feasible="
                << std::count(s.feasible.begin(), s.feasible.end(), 1)
                << " components=" << grid_components(s, 5, gc.workers).num_clusters << " -> " << grid_out << '\n';
      return 0;
    }

    if (*cov) {
      const auto records = load_records(records_dir);
      const CoverageMatrix m = coverage_matrix(records, target);
      std::filesystem::create_directories(coverage_out);
      write_coverage_csv(std::filesystem::path(coverage_out) / "coverage.csv", m);
      std::ofstream(std::filesystem::path(coverage_out) / "normalization.json") << bounds_json(m).dump(2) << '\n';
      for (const auto& f : m.flagged_features()) std::cerr << "feature " << f << " has no values; cells left null\n";
      std::cout << records.size() << " records, " << m.suites.size() << " suites -> " << coverage_out << '\n';
      return 0;
    }

    if (*sens) {
      const int d = sc.dims.empty() ? 2 : sc.dims.front();
      const auto problem = reg.make(sc.problems.front(), options_for(sc, d));
      const auto cells = sensitivity_sweep(problem, scfg, sc.workers, SampleCache::from_option(sens_cache));
      write_sensitivity_csv(sens_out, cells, scfg.expected);
      for (const auto& c : cells)
        std::cout << "samples=" << c.samples << " eps=" << c.epsilon << " matches=" << c.matches(scfg.expected) << '/'
                  << c.counts.size() << '\n';
      return 0;
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitComputation;
  }
  return 0;
}

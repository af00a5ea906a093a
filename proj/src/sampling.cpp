#include "cmela/sampling.hpp"

#include "cmela/rng.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <vector>

namespace cmela {

namespace {

constexpr char kMagic[8] = {'C', 'M', 'E', 'L', 'A', 'S', '0', '1'};

void check_bounds(int dimension, const Vector& lower, const Vector& upper) {
  if (lower.size() != dimension || upper.size() != dimension)
    throw ConfigError("sample bounds do not match the dimension");
}

template <typename T>
void put(std::ofstream& out, const T& value) {
  out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <typename T>
bool get(std::ifstream& in, T& value) {
  return static_cast<bool>(in.read(reinterpret_cast<char*>(&value), sizeof(T)));
}

void put_matrix(std::ofstream& out, const Matrix& m) {
  put(out, static_cast<std::int64_t>(m.rows()));
  put(out, static_cast<std::int64_t>(m.cols()));
  out.write(reinterpret_cast<const char*>(m.data()), static_cast<std::streamsize>(sizeof(double) * m.size()));
}

bool get_matrix(std::ifstream& in, Matrix& m) {
  std::int64_t rows = 0, cols = 0;
  if (!get(in, rows) || !get(in, cols) || rows < 0 || cols < 0) return false;
  m.resize(rows, cols);
  return static_cast<bool>(
      in.read(reinterpret_cast<char*>(m.data()), static_cast<std::streamsize>(sizeof(double) * m.size())));
}

}  // namespace

Index SamplePlan::num_points() const {
  if (kind == SampleKind::LatinHypercube) return size;
  Index n = 1;
  for (int i = 0; i < dimension; ++i) n *= size;
  return n;
}

std::string SamplePlan::describe() const {
  std::ostringstream s;
  s << (kind == SampleKind::LatinHypercube ? "lhs" : "grid") << ":n=" << size << ":seed=" << seed
    << ":stream=" << stream << ":D=" << dimension;
  return s.str();
}

Matrix latin_hypercube(const SamplePlan& plan, const Vector& lower, const Vector& upper) {
  if (plan.size < 1) throw ConfigError("latin hypercube needs at least one point");
  check_bounds(plan.dimension, lower, upper);
  const Index n = plan.size;
  auto rng = make_stream(plan.seed, plan.stream);
  Matrix X(plan.dimension, n);
  std::vector<Index> strata(static_cast<std::size_t>(n));
  for (int axis = 0; axis < plan.dimension; ++axis) {
    std::iota(strata.begin(), strata.end(), Index{0});
    for (Index i = n - 1; i > 0; --i)
      std::swap(strata[i], strata[uniform_index(rng, static_cast<std::uint64_t>(i + 1))]);
    const double lo = lower(axis);
    const double width = upper(axis) - lo;
    for (Index j = 0; j < n; ++j) {
      // keep the offset off the stratum edges so rounding cannot move a point to a neighbour
      const double offset = 1e-9 + uniform01(rng) * (1.0 - 2e-9);
      const double t = (static_cast<double>(strata[j]) + offset) / static_cast<double>(n);
      X(axis, j) = std::min(upper(axis), lo + t * width);
    }
  }
  return X;
}

Matrix grid(Index points_per_axis, const Vector& lower, const Vector& upper) {
  if (points_per_axis < 2) throw ConfigError("grid needs at least 2 points per axis");
  const int d = static_cast<int>(lower.size());
  check_bounds(d, lower, upper);
  Index total = 1;
  for (int i = 0; i < d; ++i) total *= points_per_axis;
  Matrix X(d, total);
  const double last = static_cast<double>(points_per_axis - 1);
  for (Index j = 0; j < total; ++j) {
    Index rest = j;
    for (int axis = 0; axis < d; ++axis) {
      const Index k = rest % points_per_axis;
      rest /= points_per_axis;
      X(axis, j) = k == points_per_axis - 1
                       ? upper(axis)
                       : lower(axis) + (upper(axis) - lower(axis)) * (static_cast<double>(k) / last);
    }
  }
  return X;
}

Matrix generate(const SamplePlan& plan, const ProblemInstance& problem) {
  if (plan.dimension != problem.dimension())
    throw ConfigError(problem.id() + ": plan dimension does not match the problem");
  return plan.kind == SampleKind::LatinHypercube ? latin_hypercube(plan, problem.lower(), problem.upper())
                                                 : grid(plan.size, problem.lower(), problem.upper());
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string cache_key(const ProblemInstance& problem, const SamplePlan& plan) {
  std::ostringstream s;
  s << std::hex << std::setw(16) << std::setfill('0') << fnv1a(problem.signature() + "#" + plan.describe());
  return s.str();
}

void write_sample_csv(const std::filesystem::path& path, const EvaluatedSample& sample) {
  std::ofstream out(path);
  if (!out) throw ComputationError("cannot write " + path.string());
  for (Index i = 0; i < sample.X.rows(); ++i) out << 'x' << i + 1 << ',';
  for (Index i = 0; i < sample.F.rows(); ++i) out << 'f' << i + 1 << ',';
  for (Index i = 0; i < sample.G.rows(); ++i) out << 'g' << i + 1 << ',';
  out << "v\n" << std::setprecision(17);
  for (Index j = 0; j < sample.size(); ++j) {
    for (Index i = 0; i < sample.X.rows(); ++i) out << sample.X(i, j) << ',';
    for (Index i = 0; i < sample.F.rows(); ++i) out << sample.F(i, j) << ',';
    for (Index i = 0; i < sample.G.rows(); ++i) out << sample.G(i, j) << ',';
    out << sample.v(j) << '\n';
  }
  if (!out) throw ComputationError("failed writing " + path.string());
}

SampleCache::SampleCache(std::filesystem::path directory) : directory_(std::move(directory)) {}

SampleCache SampleCache::from_option(const std::string& option) {
  if (!option.empty()) return SampleCache(option);
  if (const char* env = std::getenv("CMOP_CACHE_DIR"); env && *env) return SampleCache(env);
  return {};
}

std::optional<EvaluatedSample> SampleCache::load(const std::string& key) const {
  if (!enabled()) return std::nullopt;
  std::ifstream in(directory_ / (key + ".bin"), std::ios::binary);
  if (!in) return std::nullopt;
  char magic[8];
  if (!in.read(magic, 8) || !std::equal(magic, magic + 8, kMagic)) return std::nullopt;
  EvaluatedSample s;
  Matrix v;
  if (!get_matrix(in, s.X) || !get_matrix(in, s.F) || !get_matrix(in, s.G) || !get_matrix(in, v))
    return std::nullopt;
  s.v = v.reshaped();
  if (s.F.cols() != s.X.cols() || s.G.cols() != s.X.cols() || s.v.size() != s.X.cols()) return std::nullopt;
  return s;
}

void SampleCache::store(const std::string& key, const EvaluatedSample& sample) const {
  if (!enabled()) return;
  std::error_code ec;
  std::filesystem::create_directories(directory_, ec);
  if (ec) throw ComputationError("cannot create cache directory " + directory_.string());
  // write then rename so a concurrent reader never sees a partial file
  const auto final_path = directory_ / (key + ".bin");
  auto tmp = final_path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ComputationError("cannot write cache file " + tmp.string());
    out.write(kMagic, 8);
    put_matrix(out, sample.X);
    put_matrix(out, sample.F);
    put_matrix(out, sample.G);
    put_matrix(out, Matrix(sample.v));
    if (!out) throw ComputationError("failed writing cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, final_path, ec);
  if (ec) throw ComputationError("cannot finalize cache file " + final_path.string());
}

EvaluatedSample evaluate_plan(const ProblemInstance& problem, const SamplePlan& plan, int workers,
                              const SampleCache& cache) {
  const std::string key = cache.enabled() ? cache_key(problem, plan) : std::string();
  if (cache.enabled())
    if (auto hit = cache.load(key)) return std::move(*hit);
  EvaluatedSample s = evaluate_sample(problem, generate(plan, problem), workers);
  cache.store(key, s);
  return s;
}

}  // namespace cmela

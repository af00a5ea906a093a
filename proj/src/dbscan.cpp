#include "cmela/dbscan.hpp"

#include "cmela/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace cmela {

namespace {

struct DisjointSets {
  std::vector<Index> parent;
  explicit DisjointSets(Index n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), Index{0});
  }
  Index find(Index i) {
    while (parent[i] != i) {
      parent[i] = parent[parent[i]];
      i = parent[i];
    }
    return i;
  }
  void unite(Index a, Index b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;  // root is always the lowest index in the set
  }
};

}  // namespace

std::vector<Index> ClusterLabeling::cluster_sizes() const {
  std::vector<Index> sizes(static_cast<std::size_t>(num_clusters), 0);
  for (int l : labels)
    if (l != kNoise) ++sizes[l];
  return sizes;
}

Index ClusterLabeling::noise_count() const {
  return std::count(labels.begin(), labels.end(), kNoise);
}

GridIndex::GridIndex(const Matrix& points, double cell_width)
    : points_(&points), width_(cell_width), dim_(static_cast<int>(points.rows())) {
  if (!(cell_width > 0.0) || !std::isfinite(cell_width)) throw ConfigError("grid cell width must be positive");
  if (dim_ > 16) throw ConfigError("grid index supports at most 16 dimensions");
  if (!points.allFinite()) throw ConfigError("grid index needs finite coordinates");
  const Index n = points.cols();
  if (n == 0) return;

  origin_.assign(dim_, std::numeric_limits<std::int64_t>::max());
  extent_.assign(dim_, 0);
  std::vector<std::int64_t> hi(dim_, std::numeric_limits<std::int64_t>::min());
  for (Index j = 0; j < n; ++j)
    for (int a = 0; a < dim_; ++a) {
      const auto c = static_cast<std::int64_t>(std::floor(points(a, j) / width_));
      origin_[a] = std::min(origin_[a], c);
      hi[a] = std::max(hi[a], c);
    }
  double cells = 1.0;
  for (int a = 0; a < dim_; ++a) {
    extent_[a] = hi[a] - origin_[a] + 1;
    cells *= static_cast<double>(extent_[a]);
  }
  if (cells > 9e18) throw ConfigError("epsilon too small for the grid index at this dimension");

  std::vector<std::uint64_t> keys(static_cast<std::size_t>(n));
  std::vector<std::int64_t> cell(dim_);
  for (Index j = 0; j < n; ++j) {
    for (int a = 0; a < dim_; ++a) cell[a] = cell_of(points(a, j), a);
    pack(cell.data(), keys[j]);
  }
  order_.resize(static_cast<std::size_t>(n));
  std::iota(order_.begin(), order_.end(), Index{0});
  std::stable_sort(order_.begin(), order_.end(), [&](Index a, Index b) { return keys[a] < keys[b]; });
  for (Index k = 0; k < n;) {
    Index e = k;
    while (e < n && keys[order_[e]] == keys[order_[k]]) ++e;
    cells_.emplace(keys[order_[k]], std::pair{k, e});
    k = e;
  }
}

std::int64_t GridIndex::cell_of(double value, int /*axis*/) const {
  const double c = std::floor(value / width_);
  // queries far outside the indexed range must not overflow
  if (c < -4e18 || c > 4e18) return c < 0 ? std::numeric_limits<std::int64_t>::min() / 2
                                          : std::numeric_limits<std::int64_t>::max() / 2;
  return static_cast<std::int64_t>(c);
}

bool GridIndex::pack(const std::int64_t* cell, std::uint64_t& key) const {
  std::uint64_t k = 0, stride = 1;
  for (int a = 0; a < dim_; ++a) {
    const std::int64_t rel = cell[a] - origin_[a];
    if (rel < 0 || rel >= extent_[a]) return false;
    k += static_cast<std::uint64_t>(rel) * stride;
    stride *= static_cast<std::uint64_t>(extent_[a]);
  }
  key = k;
  return true;
}

std::vector<Index> neighbor_query(const GridIndex& index, Index i, double epsilon) {
  if (epsilon > index.cell_width()) throw ConfigError("query radius exceeds the grid cell width");
  std::vector<Index> out;
  index.for_each_within(index.points().col(i).data(), epsilon, [&](Index j) {
    out.push_back(j);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

double default_epsilon(int dimension) {
  if (dimension <= 2) return 0.02;
  if (dimension == 3) return 0.04;
  return 0.12;
}

ClusterLabeling cluster(const Matrix& points, const DbscanParams& params, int workers) {
  if (!(params.epsilon > 0.0)) throw ConfigError("DBSCAN epsilon must be positive");
  if (params.min_samples < 1) throw ConfigError("DBSCAN min_samples must be at least 1");
  const Index n = points.cols();
  ClusterLabeling out;
  out.labels.assign(static_cast<std::size_t>(n), ClusterLabeling::kNoise);
  out.is_core.assign(static_cast<std::size_t>(n), 0);
  if (n == 0) return out;

  // slightly wider cells so points exactly epsilon apart never straddle two cell boundaries
  const GridIndex index(points, params.epsilon * (1.0 + 1e-9));
  const double eps = params.epsilon;

  parallel_for(n, workers, [&](long begin, long end) {
    for (long i = begin; i < end; ++i) {
      Index count = 0;
      index.for_each_within(points.col(i).data(), eps, [&](Index) { return ++count < params.min_samples; });
      out.is_core[i] = count >= params.min_samples;
    }
  });

  DisjointSets sets(n);
  for (Index i = 0; i < n; ++i) {
    if (!out.is_core[i]) continue;
    index.for_each_within(points.col(i).data(), eps, [&](Index j) {
      if (j > i && out.is_core[j]) sets.unite(i, j);
      return true;
    });
  }

  std::vector<int> root_label(static_cast<std::size_t>(n), ClusterLabeling::kNoise);
  for (Index i = 0; i < n; ++i) {
    if (!out.is_core[i]) continue;
    const Index r = sets.find(i);
    if (root_label[r] == ClusterLabeling::kNoise) root_label[r] = out.num_clusters++;
    out.labels[i] = root_label[r];
  }

  parallel_for(n, workers, [&](long begin, long end) {
    for (long i = begin; i < end; ++i) {
      if (out.is_core[i]) continue;
      int best = ClusterLabeling::kNoise;
      index.for_each_within(points.col(i).data(), eps, [&](Index j) {
        if (out.is_core[j]) {
          const int l = out.labels[j];
          if (best == ClusterLabeling::kNoise || l < best) best = l;
        }
        return true;
      });
      out.labels[i] = best;
    }
  });
  return out;
}

}  // namespace cmela

#pragma once

#include "cmela/types.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace cmela {

struct DbscanParams {
  double epsilon = 0.02;
  /// Core threshold, counting the point itself.
  Index min_samples = 5;
};

struct ClusterLabeling {
  static constexpr int kNoise = -1;

  /// -1 for noise, otherwise 0..num_clusters-1. Clusters are numbered by their lowest core index.
  std::vector<int> labels;
  std::vector<std::uint8_t> is_core;
  int num_clusters = 0;

  Index size() const { return static_cast<Index>(labels.size()); }
  /// Points per cluster, indexed by label.
  std::vector<Index> cluster_sizes() const;
  Index noise_count() const;
};

/// Uniform grid over a point set with a fixed cell width. Exact radius queries scan the 3^D
/// cells around the query, so they are correct for any radius up to the cell width.
class GridIndex {
 public:
  GridIndex(const Matrix& points, double cell_width);

  const Matrix& points() const { return *points_; }
  double cell_width() const { return width_; }

  /// Calls fn(j) for every indexed point within `radius` (inclusive) of `query`; stops early
  /// when fn returns false.
  template <typename Fn>
  void for_each_within(const double* query, double radius, Fn&& fn) const;

 private:
  std::int64_t cell_of(double value, int axis) const;
  bool pack(const std::int64_t* cell, std::uint64_t& key) const;

  const Matrix* points_;
  double width_;
  int dim_;
  std::vector<std::int64_t> origin_;
  std::vector<std::int64_t> extent_;
  std::unordered_map<std::uint64_t, std::pair<Index, Index>> cells_;  // key -> [begin, end) in order_
  std::vector<Index> order_;
};

/// Indices of all points within epsilon of point `i` (inclusive, itself included), ascending.
std::vector<Index> neighbor_query(const GridIndex& index, Index i, double epsilon);

/// DBSCAN on the columns of `points` with Euclidean distance. Deterministic for a fixed point
/// order: a border point joins the lowest-numbered cluster among its core neighbours.
ClusterLabeling cluster(const Matrix& points, const DbscanParams& params, int workers = 1);

/// Table defaults for epsilon by dimension: 0.02 (D=2), 0.04 (D=3), 0.12 (D>=4).
double default_epsilon(int dimension);

template <typename Fn>
void GridIndex::for_each_within(const double* query, double radius, Fn&& fn) const {
  if (order_.empty()) return;
  const double r2 = radius * radius;
  std::int64_t centre[16], cell[16];
  int offset[16];
  for (int a = 0; a < dim_; ++a) {
    centre[a] = cell_of(query[a], a);
    offset[a] = -1;
  }
  const Matrix& P = *points_;
  while (true) {
    for (int a = 0; a < dim_; ++a) cell[a] = centre[a] + offset[a];
    std::uint64_t key;
    if (pack(cell, key)) {
      if (auto it = cells_.find(key); it != cells_.end()) {
        for (Index k = it->second.first; k < it->second.second; ++k) {
          const Index j = order_[k];
          double d2 = 0.0;
          for (int a = 0; a < dim_; ++a) {
            const double t = P(a, j) - query[a];
            d2 += t * t;
          }
          if (d2 <= r2 && !fn(j)) return;
        }
      }
    }
    int a = 0;
    while (a < dim_ && offset[a] == 1) offset[a++] = -1;
    if (a == dim_) break;
    ++offset[a];
  }
}

}  // namespace cmela

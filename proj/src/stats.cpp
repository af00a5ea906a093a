#include "cmela/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cmela {

Vector average_ranks(const Vector& values) {
  const Index n = values.size();
  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) { return values(a) < values(b); });
  Vector ranks(n);
  for (Index k = 0; k < n;) {
    Index e = k;
    while (e < n && values(order[e]) == values(order[k])) ++e;
    const double r = 0.5 * static_cast<double>(k + 1 + e);  // mean of ranks k+1 .. e
    for (Index t = k; t < e; ++t) ranks(order[t]) = r;
    k = e;
  }
  return ranks;
}

MaybeReal spearman(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw ConfigError("spearman: vectors differ in length");
  if (a.size() < 2) throw ConfigError("spearman: need at least two values");
  if (!a.allFinite() || !b.allFinite()) throw ComputationError("spearman: non-finite input");
  const Vector ra = average_ranks(a);
  const Vector rb = average_ranks(b);
  const Vector da = ra.array() - ra.mean();
  const Vector db = rb.array() - rb.mean();
  const double saa = da.squaredNorm();
  const double sbb = db.squaredNorm();
  if (saa == 0.0 || sbb == 0.0) return std::nullopt;
  const double r = da.dot(db) / std::sqrt(saa * sbb);
  return std::clamp(r, -1.0, 1.0);
}

MaybeReal lower_median(std::vector<double> values) {
  if (values.empty()) return std::nullopt;
  const auto mid = values.begin() + static_cast<std::ptrdiff_t>((values.size() - 1) / 2);
  std::nth_element(values.begin(), mid, values.end());
  return *mid;
}

}  // namespace cmela

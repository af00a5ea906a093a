#include "cmela/pareto.hpp"

#include "cmela/parallel.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace cmela {

namespace {

bool lex_less(const Matrix& F, Index a, Index b) {
  for (Index m = 0; m < F.rows(); ++m) {
    if (F(m, a) < F(m, b)) return true;
    if (F(m, a) > F(m, b)) return false;
  }
  return a < b;
}

// Fenwick tree over ranks 1..n.
struct Fenwick {
  std::vector<Index> tree;
  explicit Fenwick(Index n) : tree(static_cast<std::size_t>(n + 1), 0) {}
  void add(Index i) {
    for (++i; i < static_cast<Index>(tree.size()); i += i & -i) ++tree[i];
  }
  Index prefix(Index i) const {  // count of ranks <= i
    Index s = 0;
    for (++i; i > 0; i -= i & -i) s += tree[i];
    return s;
  }
};

Vector dominator_counts_biobjective(const Matrix& F) {
  const Index n = F.cols();
  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  std::sort(order.begin(), order.end(), [&](Index a, Index b) { return lex_less(F, a, b); });

  std::vector<double> second(static_cast<std::size_t>(n));
  for (Index j = 0; j < n; ++j) second[j] = F(1, j);
  std::sort(second.begin(), second.end());
  second.erase(std::unique(second.begin(), second.end()), second.end());
  auto rank = [&](Index j) {
    return static_cast<Index>(std::lower_bound(second.begin(), second.end(), F(1, j)) - second.begin());
  };

  Vector counts(n);
  Fenwick tree(static_cast<Index>(second.size()));
  for (Index k = 0; k < n;) {
    Index e = k;
    while (e < n && F(0, order[e]) == F(0, order[k])) ++e;
    for (Index t = k; t < e; ++t) tree.add(rank(order[t]));
    // within a run of equal first objectives, exact duplicates share consecutive slots
    for (Index t = k; t < e;) {
      Index u = t;
      while (u < e && F(1, order[u]) == F(1, order[t])) ++u;
      const Index weakly = tree.prefix(rank(order[t]));
      for (Index w = t; w < u; ++w) counts(order[w]) = static_cast<double>(weakly - (u - t));
      t = u;
    }
    k = e;
  }
  return counts;
}

}  // namespace

Mask nondominated_mask(const Matrix& F) { return nondominated_mask(F, Mask(static_cast<std::size_t>(F.cols()), 1)); }

Mask nondominated_mask(const Matrix& F, const Mask& subset) {
  const Index n = F.cols();
  if (static_cast<Index>(subset.size()) != n) throw ConfigError("subset mask length differs from point count");
  std::vector<Index> order;
  for (Index j = 0; j < n; ++j)
    if (subset[j]) order.push_back(j);
  std::sort(order.begin(), order.end(), [&](Index a, Index b) { return lex_less(F, a, b); });

  // a dominator precedes its victim in lexicographic order, and dominance is transitive,
  // so comparing against the nondominated archive suffices
  Mask mask(static_cast<std::size_t>(n), 0);
  std::vector<Index> archive;
  for (Index j : order) {
    bool dominated = false;
    for (Index a : archive)
      if (dominates(F.col(a), F.col(j))) {
        dominated = true;
        break;
      }
    if (!dominated) {
      archive.push_back(j);
      mask[j] = 1;
    }
  }
  return mask;
}

Mask nondominated_filter(const EvaluatedSample& sample, bool feasible_only) {
  if (!feasible_only) return nondominated_mask(sample.F);
  Mask feasible(static_cast<std::size_t>(sample.size()));
  for (Index j = 0; j < sample.size(); ++j) feasible[j] = sample.feasible(j);
  return nondominated_mask(sample.F, feasible);
}

Vector dominance_ratio(const Matrix& F, int workers) {
  const Index n = F.cols();
  Vector counts;
  if (F.rows() == 2) {
    counts = dominator_counts_biobjective(F);
  } else {
    counts = Vector::Zero(n);
    parallel_for(n, workers, [&](long begin, long end) {
      for (long i = begin; i < end; ++i) {
        Index c = 0;
        for (Index j = 0; j < n; ++j)
          if (dominates(F.col(j), F.col(i))) ++c;
        counts(i) = static_cast<double>(c);
      }
    });
  }
  if (n <= 1) return Vector::Zero(n);
  return counts / static_cast<double>(n - 1);
}

DominanceSummary summarize_dominance(const Matrix& F, int workers) {
  DominanceSummary s;
  s.dominance_ratio = dominance_ratio(F, workers);
  s.nondominated_mask = nondominated_mask(F);
  return s;
}

}  // namespace cmela

#pragma once

#include "cmela/problem.hpp"

namespace cmela {

struct DominanceSummary {
  Mask nondominated_mask;
  /// Fraction of the other points that dominate each point.
  Vector dominance_ratio;
};

/// Nondominated flags over the columns of F (objectives in rows). Equal vectors do not
/// dominate each other.
Mask nondominated_mask(const Matrix& F);

/// Nondominated flags over a subset; points outside `subset` get false and are ignored.
Mask nondominated_mask(const Matrix& F, const Mask& subset);

/// Nondominated filter of an evaluated sample. With `feasible_only`, only feasible points are
/// considered and infeasible ones are never flagged.
Mask nondominated_filter(const EvaluatedSample& sample, bool feasible_only);

/// Per-point count of dominators divided by (n-1), ignoring feasibility. Exact; O(n log n) for
/// two objectives, O(n^2) split across workers otherwise.
Vector dominance_ratio(const Matrix& F, int workers = 1);

DominanceSummary summarize_dominance(const Matrix& F, int workers = 1);

}  // namespace cmela

#pragma once

#include "cmela/dbscan.hpp"
#include "cmela/features.hpp"
#include "cmela/problem.hpp"

#include <vector>

namespace cmela {

struct SpacefillFeatures {
  MaybeReal n_com, com_min, com_med, com_max, opt_com_max, com_opt;
  MaybeReal rho_f, corr_min, corr_max, rho_bound_opt;

  void store(FeatureRecord& record) const;
};

/// DBSCAN over the feasible points of a sample, in unit-box coordinates.
struct FeasibleClusters {
  std::vector<Index> members;  // sample indices of the feasible points
  ClusterLabeling labeling;    // one entry per member
};

FeasibleClusters cluster_feasible(const ProblemInstance& problem, const EvaluatedSample& sample,
                                  const DbscanParams& params, int workers = 1);

/// The ten space-filling design features of an evaluated LHS sample.
SpacefillFeatures spacefill_features(const ProblemInstance& problem, const EvaluatedSample& sample,
                                     const DbscanParams& params, int workers = 1);

}  // namespace cmela

#include "cmela/spacefill.hpp"

#include "cmela/pareto.hpp"
#include "cmela/stats.hpp"

#include <algorithm>

namespace cmela {

void SpacefillFeatures::store(FeatureRecord& r) const {
  r["n_com"] = n_com;
  r["com_min"] = com_min;
  r["com_med"] = com_med;
  r["com_max"] = com_max;
  r["opt_com_max"] = opt_com_max;
  r["com_opt"] = com_opt;
  r["rho_f"] = rho_f;
  r["corr_min"] = corr_min;
  r["corr_max"] = corr_max;
  r["rho_bound_opt"] = rho_bound_opt;
}

FeasibleClusters cluster_feasible(const ProblemInstance& problem, const EvaluatedSample& sample,
                                  const DbscanParams& params, int workers) {
  FeasibleClusters out;
  for (Index j = 0; j < sample.size(); ++j)
    if (sample.feasible(j)) out.members.push_back(j);
  Matrix P(sample.X.rows(), static_cast<Index>(out.members.size()));
  for (std::size_t k = 0; k < out.members.size(); ++k) P.col(k) = sample.X.col(out.members[k]);
  out.labeling = cluster(to_unit_box(P, problem.lower(), problem.upper()), params, workers);
  return out;
}

SpacefillFeatures spacefill_features(const ProblemInstance& problem, const EvaluatedSample& sample,
                                     const DbscanParams& params, int workers) {
  const Index n = sample.size();
  if (n < 2) throw ConfigError("space-filling features need at least two sample points");
  SpacefillFeatures out;

  for (Index m = 0; m < sample.F.rows(); ++m) {
    const MaybeReal r = spearman(sample.F.row(m).transpose(), sample.v);
    if (!r) continue;
    out.corr_min = out.corr_min ? std::min(*out.corr_min, *r) : *r;
    out.corr_max = out.corr_max ? std::max(*out.corr_max, *r) : *r;
  }

  const FeasibleClusters fc = cluster_feasible(problem, sample, params, workers);
  const auto& lab = fc.labeling;
  out.rho_f = static_cast<double>(fc.members.size()) / static_cast<double>(n);
  out.n_com = static_cast<double>(lab.num_clusters);

  const Mask nd = nondominated_filter(sample, true);
  std::vector<Index> nd_per_cluster(static_cast<std::size_t>(lab.num_clusters), 0);
  Index nd_total = 0, nd_border = 0;
  for (std::size_t k = 0; k < fc.members.size(); ++k) {
    if (!nd[fc.members[k]]) continue;
    ++nd_total;
    const int l = lab.labels[k];
    if (l == ClusterLabeling::kNoise) continue;
    ++nd_per_cluster[l];
    if (!lab.is_core[k]) ++nd_border;
  }
  if (nd_total > 0) out.rho_bound_opt = static_cast<double>(nd_border) / static_cast<double>(nd_total);

  if (lab.num_clusters == 0) return out;
  const std::vector<Index> sizes = lab.cluster_sizes();
  std::vector<double> fractions;
  for (Index s : sizes) fractions.push_back(static_cast<double>(s) / static_cast<double>(n));
  out.com_min = *std::min_element(fractions.begin(), fractions.end());
  out.com_max = *std::max_element(fractions.begin(), fractions.end());
  out.com_med = lower_median(fractions);

  // ties go to the lowest label
  const auto largest = std::max_element(sizes.begin(), sizes.end()) - sizes.begin();
  out.opt_com_max = static_cast<double>(nd_per_cluster[largest]) / static_cast<double>(sizes[largest]);
  const auto best = std::max_element(nd_per_cluster.begin(), nd_per_cluster.end()) - nd_per_cluster.begin();
  if (nd_per_cluster[best] > 0) out.com_opt = fractions[best];
  return out;
}

}  // namespace cmela

#pragma once

#include "cmela/features.hpp"
#include "cmela/problem.hpp"
#include "cmela/sampling.hpp"

#include <cstdint>
#include <vector>

namespace cmela {

enum class Symbol : std::int8_t { Down = 0, Flat = 1, Up = 2 };

struct InfoContentFeatures {
  MaybeReal h_max, eps_s, m0;

  void store(FeatureRecord& record) const;
};

/// Greedy tour over the columns of `points`: starts at `start`, then always moves to the nearest
/// unvisited point (Euclidean); ties go to the lowest index.
std::vector<Index> nearest_neighbor_tour(const Matrix& points, Index start);

/// Slopes dv / |dx| between consecutive tour points (length n-1).
Vector tour_slopes(const Matrix& points, const Vector& v, const std::vector<Index>& tour);

/// Down if s < -lambda, Flat if |s| <= lambda, Up if s > lambda.
std::vector<Symbol> symbolize(const Vector& slopes, double lambda);

/// Base-6 entropy of the six mixed blocks ab (a != b); probabilities over all len-1 blocks.
double entropy_H(const std::vector<Symbol>& symbols);

/// |phi'| / len, where phi' drops Flat symbols and collapses repeats.
double partial_information(const std::vector<Symbol>& symbols);

/// {0} followed by 10^k for k = -8, -7.75, ..., 16.
std::vector<double> lambda_grid();

/// Features from a violation sequence along a tour.
InfoContentFeatures info_features_from_slopes(const Vector& slopes);

/// Features of a problem: LHS of `sample_size` points, tour in unit-box coordinates.
InfoContentFeatures info_features(const ProblemInstance& problem, Index sample_size, std::uint64_t seed,
                                  int workers = 1, const SampleCache& cache = {});

}  // namespace cmela

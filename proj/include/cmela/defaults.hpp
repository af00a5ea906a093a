#pragma once

#include "cmela/types.hpp"

namespace cmela::defaults {

/// Experimental parameters by search-space dimension.
inline Index spacefill_samples(int d) { return d <= 2 ? 25000 : d == 3 ? 100000 : 250000; }
inline Index adaptive_samples(int d) { return d <= 2 ? 10000 : d == 3 ? 25000 : 50000; }
inline Index infocontent_samples(int d) { return 1000 * static_cast<Index>(d); }
inline double epsilon(int d) { return d <= 2 ? 0.02 : d == 3 ? 0.04 : 0.12; }

inline constexpr Index kMinSamples = 5;
inline constexpr int kWalks = 30;
inline constexpr Index kWalkSteps = 10000;
inline constexpr double kStepFraction = 0.01;
inline constexpr int kLocalSearchIterations = 500;
inline constexpr double kFeasibilityTolerance = 1e-10;

}  // namespace cmela::defaults

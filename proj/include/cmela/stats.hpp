#pragma once

#include "cmela/types.hpp"

#include <vector>

namespace cmela {

/// Fractional ranks starting at 1; ties share their average rank.
Vector average_ranks(const Vector& values);

/// Spearman rank correlation (Pearson correlation of average ranks). Undefined when either
/// vector has zero rank variance. Throws ConfigError on unequal lengths or fewer than 2 values.
MaybeReal spearman(const Vector& a, const Vector& b);

/// Lower-middle order statistic, sorted[(n-1)/2]: always an observed value. Empty input is undefined.
MaybeReal lower_median(std::vector<double> values);

}  // namespace cmela

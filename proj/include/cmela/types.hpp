#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cmela {

using Index = Eigen::Index;
using Vector = Eigen::VectorXd;

/// Point sets are stored column-wise: one point per column, one coordinate per row.
using Matrix = Eigen::MatrixXd;

/// Per-point boolean flags (bytes, so workers may write disjoint entries concurrently).
using Mask = std::vector<std::uint8_t>;

/// A feature value that may be undefined. Undefined is never encoded as 0 or NaN.
using MaybeReal = std::optional<double>;

/// Invalid input or configuration (unknown problem, bad dimension, out-of-bounds point).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation produced something it cannot continue with (non-finite values, I/O failure).
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cmela

#pragma once

#include "cmela/problem.hpp"

#include <json.hpp>

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cmela {

/// DAS-CMOP difficulty triplet (eta, zeta, gamma).
using DasDifficulty = std::array<double, 3>;

/// Default triplet. With it DAS-CMOP1 has three feasible components in 2-D and five in 3-D.
inline constexpr DasDifficulty kDefaultDasDifficulty{0.0, 0.0, 0.5};

struct ProblemOptions {
  int dimension = 2;
  double equality_tolerance = ProblemInstance::kDefaultEqualityTolerance;
  DasDifficulty das_difficulty = kDefaultDasDifficulty;
};

using ProblemFactory = std::function<ProblemInstance(const ProblemOptions&)>;

struct ProblemEntry {
  std::string id;
  std::string suite;
  int num_objectives = 2;
  int min_dimension = 2;
  /// Non-empty for problems that only exist at fixed dimensions.
  std::vector<int> fixed_dimensions;
  ProblemFactory make;

  bool supports_dimension(int d) const;
};

/// Lookup table of problem constructors. Unknown ids are reported, never defaulted.
class ProblemRegistry {
 public:
  /// Registers a problem; throws ConfigError on a duplicate id. This is the plugin point for
  /// suites whose formulas are not built in.
  void add(ProblemEntry entry);

  bool contains(const std::string& id) const { return entries_.count(id) != 0; }
  const ProblemEntry& entry(const std::string& id) const;
  ProblemInstance make(const std::string& id, const ProblemOptions& options) const;

  /// Ids in registration order.
  const std::vector<std::string>& ids() const { return order_; }
  /// Ids whose suite matches `pattern` (shell-style `*` and `?`).
  std::vector<std::string> ids_in_suite(const std::string& pattern) const;
  std::vector<std::string> suites() const;

 private:
  std::map<std::string, ProblemEntry> entries_;
  std::vector<std::string> order_;
};

ProblemRegistry register_builtin_problems();

/// Shell-style wildcard match supporting `*` and `?`.
bool glob_match(const std::string& pattern, const std::string& text);

/// JSON description of one instantiated problem: id, suite, D, M, I+J, bounds.
nlohmann::json describe(const ProblemInstance& problem);

}  // namespace cmela

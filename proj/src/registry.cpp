#include "cmela/registry.hpp"

#include "cmela/suites.hpp"

#include <algorithm>
#include <set>

namespace cmela {

bool ProblemEntry::supports_dimension(int d) const {
  if (!fixed_dimensions.empty())
    return std::find(fixed_dimensions.begin(), fixed_dimensions.end(), d) != fixed_dimensions.end();
  return d >= min_dimension;
}

void ProblemRegistry::add(ProblemEntry entry) {
  if (entry.id.empty()) throw ConfigError("problem id must not be empty");
  if (!entry.make) throw ConfigError(entry.id + ": missing factory");
  if (contains(entry.id)) throw ConfigError("duplicate problem id: " + entry.id);
  order_.push_back(entry.id);
  std::string id = entry.id;
  entries_.emplace(std::move(id), std::move(entry));
}

const ProblemEntry& ProblemRegistry::entry(const std::string& id) const {
  const auto it = entries_.find(id);
  if (it == entries_.end()) throw ConfigError("unknown problem id: " + id);
  return it->second;
}

ProblemInstance ProblemRegistry::make(const std::string& id, const ProblemOptions& options) const {
  const ProblemEntry& e = entry(id);
  if (!e.supports_dimension(options.dimension))
    throw ConfigError(id + " is not defined for D = " + std::to_string(options.dimension));
  return e.make(options);
}

std::vector<std::string> ProblemRegistry::ids_in_suite(const std::string& pattern) const {
  std::vector<std::string> out;
  for (const auto& id : order_)
    if (glob_match(pattern, entries_.at(id).suite)) out.push_back(id);
  return out;
}

std::vector<std::string> ProblemRegistry::suites() const {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& id : order_) {
    const auto& s = entries_.at(id).suite;
    if (seen.insert(s).second) out.push_back(s);
  }
  return out;
}

ProblemRegistry register_builtin_problems() {
  ProblemRegistry registry;
  suites::add_cdtlz(registry);
  suites::add_dcdtlz(registry);
  suites::add_dascmop(registry);
  suites::add_mw(registry);
  suites::add_ctp(registry);
  return registry;
}

bool glob_match(const std::string& pattern, const std::string& text) {
  // iterative matcher with single-star backtracking
  std::size_t p = 0, t = 0, star = std::string::npos, mark = 0;
  while (t < text.size()) {
    if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
      ++p;
      ++t;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = t;
    } else if (star != std::string::npos) {
      p = star + 1;
      t = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

nlohmann::json describe(const ProblemInstance& problem) {
  nlohmann::json bounds = nlohmann::json::array();
  for (int i = 0; i < problem.dimension(); ++i)
    bounds.push_back({problem.lower()(i), problem.upper()(i)});
  return {{"id", problem.id()},
          {"suite", problem.suite()},
          {"D", problem.dimension()},
          {"M", problem.num_objectives()},
          {"constraints", problem.num_constraints()},
          {"bounds", bounds}};
}

}  // namespace cmela

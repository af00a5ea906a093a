#pragma once

#include "cmela/types.hpp"

#include <functional>
#include <span>
#include <string>

namespace cmela {

/// Raw problem kernel. Writes M objective values, I inequality values (feasible when <= 0)
/// and J equality values (feasible when == 0). Must be pure.
using ProblemKernel = std::function<void(std::span<const double> x, std::span<double> f,
                                         std::span<double> g_ineq, std::span<double> h_eq)>;

struct ProblemShape {
  int dimension = 0;
  int num_objectives = 0;
  int num_inequality = 0;
  int num_equality = 0;
};

/// A box-constrained CMOP. Immutable after construction; safe to evaluate concurrently.
class ProblemInstance {
 public:
  static constexpr double kDefaultEqualityTolerance = 1e-4;

  ProblemInstance(std::string id, std::string suite, ProblemShape shape, Vector lower, Vector upper,
                  ProblemKernel kernel, double equality_tolerance = kDefaultEqualityTolerance);

  const std::string& id() const { return id_; }
  const std::string& suite() const { return suite_; }
  int dimension() const { return shape_.dimension; }
  int num_objectives() const { return shape_.num_objectives; }
  int num_inequality() const { return shape_.num_inequality; }
  int num_equality() const { return shape_.num_equality; }
  int num_constraints() const { return shape_.num_inequality + shape_.num_equality; }
  double equality_tolerance() const { return equality_tolerance_; }
  const Vector& lower() const { return lower_; }
  const Vector& upper() const { return upper_; }
  Vector range() const { return upper_ - lower_; }

  /// Evaluates without bounds checks. `g` receives I+J transformed constraint values
  /// (equalities as |h| - eta). Returns the overall constraint violation.
  double evaluate_into(std::span<const double> x, std::span<double> f, std::span<double> g) const;

  /// Throws ConfigError when `x` has the wrong length or leaves the closed box.
  void check_point(std::span<const double> x) const;

  /// Same problem with a different equality tolerance.
  ProblemInstance with_equality_tolerance(double eta) const;

  /// Free-form parameter tag (e.g. a difficulty setting) that distinguishes instances sharing an id.
  const std::string& variant() const { return variant_; }
  ProblemInstance with_variant(std::string variant) const;

  /// Same objectives with every constraint dropped; every point is feasible.
  ProblemInstance without_constraints() const;

  /// Stable text identifying everything that determines evaluation results; used for cache keys.
  std::string signature() const;

 private:
  std::string id_;
  std::string suite_;
  ProblemShape shape_;
  Vector lower_;
  Vector upper_;
  ProblemKernel kernel_;
  double equality_tolerance_;
  std::string variant_;
};

struct EvaluatedPoint {
  Vector x;
  Vector f;
  Vector g;
  double v = 0.0;
  bool is_feasible = true;
};

/// Sum of max(0, g_i).
template <typename Derived>
double overall_violation(const Eigen::DenseBase<Derived>& g) {
  double v = 0.0;
  for (Index i = 0; i < g.size(); ++i) v += std::max(0.0, static_cast<double>(g(i)));
  return v;
}

EvaluatedPoint evaluate(const ProblemInstance& problem, const Vector& x);

/// Pareto dominance on objective vectors (minimization).
template <typename DerivedA, typename DerivedB>
bool dominates(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  bool strict = false;
  for (Index m = 0; m < a.size(); ++m) {
    if (a(m) > b(m)) return false;
    if (a(m) < b(m)) strict = true;
  }
  return strict;
}

/// Dominance between evaluated points. Only a feasible point can dominate.
/// Throws ConfigError on mismatched objective counts.
bool dominates(const EvaluatedPoint& a, const EvaluatedPoint& b);

/// A batch of evaluated points, column-aligned: X is D x n, F is M x n, G is (I+J) x n.
struct EvaluatedSample {
  Matrix X;
  Matrix F;
  Matrix G;
  Vector v;

  Index size() const { return X.cols(); }
  bool feasible(Index i) const { return v(i) == 0.0; }
  Index feasible_count() const;
};

/// Evaluates every column of X (all must lie in bounds). Work is split across `workers` threads;
/// results do not depend on the worker count.
EvaluatedSample evaluate_sample(const ProblemInstance& problem, const Matrix& X, int workers = 1);

/// Maps points to the unit box using the problem bounds.
Matrix to_unit_box(const Matrix& X, const Vector& lower, const Vector& upper);
Matrix from_unit_box(const Matrix& U, const Vector& lower, const Vector& upper);

}  // namespace cmela

#include "cmela/problem.hpp"

#include "cmela/parallel.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace cmela {

ProblemInstance::ProblemInstance(std::string id, std::string suite, ProblemShape shape, Vector lower,
                                 Vector upper, ProblemKernel kernel, double equality_tolerance)
    : id_(std::move(id)),
      suite_(std::move(suite)),
      shape_(shape),
      lower_(std::move(lower)),
      upper_(std::move(upper)),
      kernel_(std::move(kernel)),
      equality_tolerance_(equality_tolerance) {
  if (shape_.dimension < 1) throw ConfigError(id_ + ": dimension must be positive");
  if (shape_.num_objectives < 1) throw ConfigError(id_ + ": need at least one objective");
  if (shape_.num_inequality < 0 || shape_.num_equality < 0)
    throw ConfigError(id_ + ": negative constraint count");
  if (lower_.size() != shape_.dimension || upper_.size() != shape_.dimension)
    throw ConfigError(id_ + ": bounds do not match dimension");
  if (!((upper_ - lower_).array() > 0.0).all())
    throw ConfigError(id_ + ": every lower bound must be below its upper bound");
  if (!(equality_tolerance_ > 0.0)) throw ConfigError(id_ + ": equality tolerance must be positive");
  if (!kernel_) throw ConfigError(id_ + ": missing evaluation kernel");
}

double ProblemInstance::evaluate_into(std::span<const double> x, std::span<double> f,
                                      std::span<double> g) const {
  const auto ineq = g.first(static_cast<std::size_t>(shape_.num_inequality));
  const auto eq = g.subspan(static_cast<std::size_t>(shape_.num_inequality));
  kernel_(x, f, ineq, eq);
  for (double& h : eq) h = std::abs(h) - equality_tolerance_;
  double v = 0.0;
  for (double gi : g) {
    if (std::isnan(gi)) return gi;
    v += std::max(0.0, gi);
  }
  return v;
}

void ProblemInstance::check_point(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != shape_.dimension) {
    std::ostringstream msg;
    msg << id_ << ": expected a vector of length " << shape_.dimension << ", got " << x.size();
    throw ConfigError(msg.str());
  }
  for (int i = 0; i < shape_.dimension; ++i) {
    if (!(x[i] >= lower_(i) && x[i] <= upper_(i))) {
      std::ostringstream msg;
      msg << id_ << ": component " << i << " = " << x[i] << " outside [" << lower_(i) << ", "
          << upper_(i) << "]";
      throw ConfigError(msg.str());
    }
  }
}

ProblemInstance ProblemInstance::with_equality_tolerance(double eta) const {
  ProblemInstance p(id_, suite_, shape_, lower_, upper_, kernel_, eta);
  p.variant_ = variant_;
  return p;
}

ProblemInstance ProblemInstance::with_variant(std::string variant) const {
  ProblemInstance p(*this);
  p.variant_ = std::move(variant);
  return p;
}

ProblemInstance ProblemInstance::without_constraints() const {
  const ProblemShape full = shape_;
  ProblemKernel inner = kernel_;
  ProblemKernel kernel = [full, inner](std::span<const double> x, std::span<double> f, std::span<double>,
                                       std::span<double>) {
    std::vector<double> g(static_cast<std::size_t>(full.num_inequality)), h(static_cast<std::size_t>(full.num_equality));
    inner(x, f, g, h);
  };
  ProblemInstance p(id_, suite_, {shape_.dimension, shape_.num_objectives, 0, 0}, lower_, upper_, std::move(kernel),
                    equality_tolerance_);
  p.variant_ = variant_.empty() ? "unconstrained" : variant_ + ";unconstrained";
  return p;
}

std::string ProblemInstance::signature() const {
  std::ostringstream s;
  s << std::hexfloat << id_ << '|' << suite_ << '|' << shape_.dimension << '|' << shape_.num_objectives
    << '|' << shape_.num_inequality << '|' << shape_.num_equality << '|' << equality_tolerance_ << '|'
    << variant_;
  for (int i = 0; i < shape_.dimension; ++i) s << '|' << lower_(i) << ',' << upper_(i);
  return s.str();
}

EvaluatedPoint evaluate(const ProblemInstance& problem, const Vector& x) {
  problem.check_point({x.data(), static_cast<std::size_t>(x.size())});
  EvaluatedPoint p;
  p.x = x;
  p.f.resize(problem.num_objectives());
  p.g.resize(problem.num_constraints());
  p.v = problem.evaluate_into({x.data(), static_cast<std::size_t>(x.size())},
                              {p.f.data(), static_cast<std::size_t>(p.f.size())},
                              {p.g.data(), static_cast<std::size_t>(p.g.size())});
  if (!p.f.allFinite() || !p.g.allFinite())
    throw ComputationError(problem.id() + ": non-finite evaluation result");
  p.is_feasible = p.v == 0.0;
  return p;
}

bool dominates(const EvaluatedPoint& a, const EvaluatedPoint& b) {
  if (a.f.size() != b.f.size()) throw ConfigError("dominates: objective vectors differ in length");
  if (!a.is_feasible) return false;
  return dominates(a.f, b.f);
}

Index EvaluatedSample::feasible_count() const { return (v.array() == 0.0).count(); }

EvaluatedSample evaluate_sample(const ProblemInstance& problem, const Matrix& X, int workers) {
  if (X.rows() != problem.dimension())
    throw ConfigError(problem.id() + ": sample dimension does not match the problem");
  const Index n = X.cols();
  for (Index j = 0; j < n; ++j)
    problem.check_point({X.col(j).data(), static_cast<std::size_t>(X.rows())});

  EvaluatedSample s;
  s.X = X;
  s.F.resize(problem.num_objectives(), n);
  s.G.resize(problem.num_constraints(), n);
  s.v.resize(n);
  const auto D = static_cast<std::size_t>(problem.dimension());
  const auto M = static_cast<std::size_t>(problem.num_objectives());
  const auto C = static_cast<std::size_t>(problem.num_constraints());
  parallel_for(n, workers, [&](long begin, long end) {
    for (long j = begin; j < end; ++j) {
      s.v(j) = problem.evaluate_into({s.X.col(j).data(), D}, {s.F.col(j).data(), M},
                                     {s.G.col(j).data(), C});
    }
  });
  if (!s.F.allFinite() || !s.G.allFinite())
    throw ComputationError(problem.id() + ": non-finite values in sample evaluation");
  return s;
}

Matrix to_unit_box(const Matrix& X, const Vector& lower, const Vector& upper) {
  const Vector range = upper - lower;
  return (X.colwise() - lower).array().colwise() / range.array();
}

Matrix from_unit_box(const Matrix& U, const Vector& lower, const Vector& upper) {
  const Vector range = upper - lower;
  Matrix X = U.array().colwise() * range.array();
  return X.colwise() + lower;
}

}  // namespace cmela

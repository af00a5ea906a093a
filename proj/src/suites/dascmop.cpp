// DAS-CMOP1-9 (Fan et al. 2019) with a configurable difficulty triplet.

#include "cmela/suites.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace cmela::suites {
namespace {

constexpr double kPi = std::numbers::pi;

struct Difficulty {
  double b;  // feasibility-ratio control
  double d;  // distance band lower edge
  double e;  // distance band upper edge
  double r;  // convergence-hardness radius
  bool equality_band;

  explicit Difficulty(const DasDifficulty& t)
      : b(2.0 * t[0] - 1.0),
        d(t[1] != 0.0 ? 0.5 : 0.0),
        e(t[1] > 0.0 ? d - std::log(t[1]) : 1e30),
        r(0.5 * t[2]),
        equality_band(t[1] == 1.0) {}

  double band(double g) const { return equality_band ? 1e-4 - std::abs(e - g) : (e - g) * (g - d); }
};

// distance functions; `m` is the number of objectives
double g_shifted(std::span<const double> x, int m) {
  double s = 0.0;
  const double target = std::sin(0.5 * kPi * x[0]);
  for (std::size_t i = m - 1; i < x.size(); ++i) s += (x[i] - target) * (x[i] - target);
  return s;
}

double g_multimodal(std::span<const double> x, int m) {
  double s = 0.0;
  for (std::size_t i = m - 1; i < x.size(); ++i) {
    const double z = x[i] - 0.5;
    s += z * z - std::cos(20.0 * kPi * z);
  }
  return static_cast<double>(static_cast<int>(x.size()) - m + 1) + s;
}

double g_linkage(std::span<const double> x, int m) {
  double s = 0.0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = m - 1; i < x.size(); ++i) {
    const double j = static_cast<double>(i + 1);
    const double t = x[i] - std::cos(0.25 * j / n * kPi * (x[0] + x[1]));
    s += t * t;
  }
  return s;
}

// Eleven constraints of the bi-objective problems, in "g <= 0 is feasible" form.
void biobjective_constraints(const Difficulty& k, std::span<const double> x, double f0, double f1,
                             double g, std::span<double> out) {
  static constexpr double p[9] = {0.0, 1.0, 0.0, 1.0, 2.0, 0.0, 1.0, 2.0, 3.0};
  static constexpr double q[9] = {1.5, 0.5, 2.5, 1.5, 0.5, 3.5, 2.5, 1.5, 0.5};
  constexpr double a2 = 0.3;
  constexpr double b2 = 1.2;
  const double theta = -0.25 * kPi;
  const double c = std::cos(theta);
  const double s = std::sin(theta);

  out[0] = -(std::sin(20.0 * kPi * x[0]) - k.b);
  out[1] = -k.band(g);
  for (int i = 0; i < 9; ++i) {
    const double u = (f0 - p[i]) * c - (f1 - q[i]) * s;
    const double w = (f0 - p[i]) * s + (f1 - q[i]) * c;
    out[2 + i] = -(u * u / a2 + w * w / b2 - k.r);
  }
}

void triobjective_constraints(const Difficulty& k, std::span<const double> x,
                              std::span<const double> f, double g, std::span<double> out) {
  const double t = 1.0 / std::sqrt(3.0);
  const double cx[4] = {1.0, 0.0, 0.0, t};
  const double cy[4] = {0.0, 1.0, 0.0, t};
  const double cz[4] = {0.0, 0.0, 1.0, t};

  out[0] = -(std::sin(20.0 * kPi * x[0]) - k.b);
  out[1] = -(std::cos(20.0 * kPi * x[1]) - k.b);
  out[2] = -k.band(g);
  for (int i = 0; i < 4; ++i) {
    const double d2 = (f[0] - cx[i]) * (f[0] - cx[i]) + (f[1] - cy[i]) * (f[1] - cy[i]) +
                      (f[2] - cz[i]) * (f[2] - cz[i]);
    out[3 + i] = -(d2 - k.r * k.r);
  }
}

enum class Distance { Shifted, Multimodal, Linkage };

double distance(Distance kind, std::span<const double> x, int m) {
  switch (kind) {
    case Distance::Shifted:
      return g_shifted(x, m);
    case Distance::Multimodal:
      return g_multimodal(x, m);
    case Distance::Linkage:
      return g_linkage(x, m);
  }
  return 0.0;
}

std::string triplet_tag(const DasDifficulty& t) {
  std::ostringstream s;
  s << "difficulty=" << t[0] << ',' << t[1] << ',' << t[2];
  return s.str();
}

enum class Front { Convex, Concave, Mixed };

void add_biobjective(ProblemRegistry& registry, int number, Distance dist, Front front) {
  const std::string id = "DAS-CMOP" + std::to_string(number);
  ProblemEntry e;
  e.id = id;
  e.suite = "DAS-CMOP";
  e.num_objectives = 2;
  e.min_dimension = 2;
  e.make = [id, dist, front](const ProblemOptions& o) {
    const Difficulty k(o.das_difficulty);
    auto kernel = [k, dist, front](std::span<const double> x, std::span<double> f,
                                   std::span<double> g, std::span<double>) {
      const double gx = distance(dist, x, 2);
      f[0] = x[0] + gx;
      switch (front) {
        case Front::Convex:
          f[1] = 1.0 - x[0] * x[0] + gx;
          break;
        case Front::Concave:
          f[1] = 1.0 - std::sqrt(x[0]) + gx;
          break;
        case Front::Mixed:
          f[1] = 1.0 - std::sqrt(x[0]) + 0.5 * std::abs(std::sin(5.0 * kPi * x[0])) + gx;
          break;
      }
      biobjective_constraints(k, x, f[0], f[1], gx, g);
    };
    return ProblemInstance(id, "DAS-CMOP", {o.dimension, 2, 11, 0}, Vector::Zero(o.dimension),
                           Vector::Ones(o.dimension), kernel, o.equality_tolerance)
        .with_variant(triplet_tag(o.das_difficulty));
  };
  registry.add(std::move(e));
}

void add_triobjective(ProblemRegistry& registry, int number, Distance dist, bool spherical) {
  const std::string id = "DAS-CMOP" + std::to_string(number);
  ProblemEntry e;
  e.id = id;
  e.suite = "DAS-CMOP";
  e.num_objectives = 3;
  e.min_dimension = 3;
  e.make = [id, dist, spherical](const ProblemOptions& o) {
    const Difficulty k(o.das_difficulty);
    auto kernel = [k, dist, spherical](std::span<const double> x, std::span<double> f,
                                       std::span<double> g, std::span<double>) {
      const double gx = distance(dist, x, 3);
      if (spherical) {
        const double c0 = std::cos(0.5 * kPi * x[0]);
        f[0] = c0 * std::cos(0.5 * kPi * x[1]) + gx;
        f[1] = c0 * std::sin(0.5 * kPi * x[1]) + gx;
        f[2] = std::sin(0.5 * kPi * x[0]) + gx;
      } else {
        f[0] = x[0] * x[1] + gx;
        f[1] = x[1] * (1.0 - x[0]) + gx;
        f[2] = 1.0 - x[1] + gx;
      }
      triobjective_constraints(k, x, f, gx, g);
    };
    return ProblemInstance(id, "DAS-CMOP", {o.dimension, 3, 7, 0}, Vector::Zero(o.dimension),
                           Vector::Ones(o.dimension), kernel, o.equality_tolerance)
        .with_variant(triplet_tag(o.das_difficulty));
  };
  registry.add(std::move(e));
}

}  // namespace

void add_dascmop(ProblemRegistry& registry) {
  add_biobjective(registry, 1, Distance::Shifted, Front::Convex);
  add_biobjective(registry, 2, Distance::Shifted, Front::Concave);
  add_biobjective(registry, 3, Distance::Shifted, Front::Mixed);
  add_biobjective(registry, 4, Distance::Multimodal, Front::Convex);
  add_biobjective(registry, 5, Distance::Multimodal, Front::Concave);
  add_biobjective(registry, 6, Distance::Multimodal, Front::Mixed);
  add_triobjective(registry, 7, Distance::Multimodal, false);
  add_triobjective(registry, 8, Distance::Multimodal, true);
  add_triobjective(registry, 9, Distance::Linkage, true);
}

}  // namespace cmela::suites

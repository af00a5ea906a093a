// C-DTLZ (Jain & Deb 2014) and DC-DTLZ (Li et al. 2019), bi-objective configuration.

#include "cmela/suites.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace cmela::suites {
namespace {

constexpr double kPi = std::numbers::pi;

// Multimodal distance function shared by DTLZ1 and DTLZ3.
double g_rastrigin(std::span<const double> xm) {
  double s = 0.0;
  for (double xi : xm) {
    const double z = xi - 0.5;
    s += z * z - std::cos(20.0 * kPi * z);
  }
  return 100.0 * (static_cast<double>(xm.size()) + s);
}

double g_sphere(std::span<const double> xm) {
  double s = 0.0;
  for (double xi : xm) s += (xi - 0.5) * (xi - 0.5);
  return s;
}

void linear_front(std::span<const double> xp, double g, std::span<double> f) {
  const int M = static_cast<int>(f.size());
  for (int i = 0; i < M; ++i) {
    double fi = 0.5 * (1.0 + g);
    for (int j = 0; j < M - 1 - i; ++j) fi *= xp[j];
    if (i > 0) fi *= 1.0 - xp[M - 1 - i];
    f[i] = fi;
  }
}

void spherical_front(std::span<const double> xp, double g, double alpha, std::span<double> f) {
  const int M = static_cast<int>(f.size());
  for (int i = 0; i < M; ++i) {
    double fi = 1.0 + g;
    for (int j = 0; j < M - 1 - i; ++j) fi *= std::cos(std::pow(xp[j], alpha) * kPi / 2.0);
    if (i > 0) fi *= std::sin(std::pow(xp[M - 1 - i], alpha) * kPi / 2.0);
    f[i] = fi;
  }
}

enum class Base { Dtlz1, Dtlz2, Dtlz3, Dtlz4 };

// Objectives of the base DTLZ problem; returns the distance function value.
double dtlz(Base base, std::span<const double> x, std::span<double> f) {
  const auto M = f.size();
  const auto xp = x.first(M - 1);
  const auto xm = x.subspan(M - 1);
  switch (base) {
    case Base::Dtlz1: {
      const double g = g_rastrigin(xm);
      linear_front(xp, g, f);
      return g;
    }
    case Base::Dtlz2: {
      const double g = g_sphere(xm);
      spherical_front(xp, g, 1.0, f);
      return g;
    }
    case Base::Dtlz3: {
      const double g = g_rastrigin(xm);
      spherical_front(xp, g, 1.0, f);
      return g;
    }
    case Base::Dtlz4: {
      const double g = g_sphere(xm);
      spherical_front(xp, g, 100.0, f);
      return g;
    }
  }
  return 0.0;
}

double sum_squares(std::span<const double> f) {
  double s = 0.0;
  for (double fi : f) s += fi * fi;
  return s;
}

constexpr int kObjectives = 2;

void add_dtlz_variant(ProblemRegistry& registry, const std::string& id, const std::string& suite,
                      int num_constraints, ProblemKernel kernel) {
  ProblemEntry e;
  e.id = id;
  e.suite = suite;
  e.num_objectives = kObjectives;
  e.min_dimension = kObjectives;
  e.make = [id, suite, num_constraints, kernel](const ProblemOptions& o) {
    const Vector lo = Vector::Zero(o.dimension);
    const Vector hi = Vector::Ones(o.dimension);
    return ProblemInstance(id, suite, {o.dimension, kObjectives, num_constraints, 0}, lo, hi, kernel,
                           o.equality_tolerance);
  };
  registry.add(std::move(e));
}

}  // namespace

void add_cdtlz(ProblemRegistry& registry) {
  const std::string suite = "C-DTLZ";

  add_dtlz_variant(registry, "C1-DTLZ1", suite, 1,
                   [](std::span<const double> x, std::span<double> f, std::span<double> g,
                      std::span<double>) {
                     dtlz(Base::Dtlz1, x, f);
                     const auto M = f.size();
                     double s = 0.0;
                     for (std::size_t i = 0; i + 1 < M; ++i) s += f[i] / 0.5;
                     g[0] = -(1.0 - f[M - 1] / 0.6 - s);
                   });

  add_dtlz_variant(registry, "C1-DTLZ3", suite, 1,
                   [](std::span<const double> x, std::span<double> f, std::span<double> g,
                      std::span<double>) {
                     dtlz(Base::Dtlz3, x, f);
                     const double r = f.size() < 5 ? 9.0 : (f.size() <= 12 ? 12.5 : 15.0);
                     const double radius = sum_squares(f);
                     g[0] = -(radius - 16.0) * (radius - r * r);
                   });

  add_dtlz_variant(registry, "C2-DTLZ2", suite, 1,
                   [](std::span<const double> x, std::span<double> f, std::span<double> g,
                      std::span<double>) {
                     dtlz(Base::Dtlz2, x, f);
                     const auto M = f.size();
                     const double r = M == 2 ? 0.2 : (M == 3 ? 0.4 : 0.5);
                     const double total = sum_squares(f);
                     double near_axis = std::numeric_limits<double>::infinity();
                     for (std::size_t i = 0; i < M; ++i) {
                       const double t = (f[i] - 1.0) * (f[i] - 1.0) + (total - f[i] * f[i]) - r * r;
                       near_axis = std::min(near_axis, t);
                     }
                     const double a = 1.0 / std::sqrt(static_cast<double>(M));
                     double centre = 0.0;
                     for (double fi : f) centre += (fi - a) * (fi - a);
                     g[0] = std::min(near_axis, centre - r * r);
                   });

  add_dtlz_variant(registry, "C3-DTLZ1", suite, kObjectives,
                   [](std::span<const double> x, std::span<double> f, std::span<double> g,
                      std::span<double>) {
                     dtlz(Base::Dtlz1, x, f);
                     double total = 0.0;
                     for (double fi : f) total += fi;
                     for (std::size_t i = 0; i < f.size(); ++i)
                       g[i] = 1.0 - f[i] / 0.5 - (total - f[i]);
                   });

  add_dtlz_variant(registry, "C3-DTLZ4", suite, kObjectives,
                   [](std::span<const double> x, std::span<double> f, std::span<double> g,
                      std::span<double>) {
                     dtlz(Base::Dtlz4, x, f);
                     const double total = sum_squares(f);
                     for (std::size_t i = 0; i < f.size(); ++i)
                       g[i] = 1.0 - f[i] * f[i] / 4.0 - (total - f[i] * f[i]);
                   });
}

void add_dcdtlz(ProblemRegistry& registry) {
  const std::string suite = "DC-DTLZ";

  for (const auto& [id, base] : {std::pair{"DC1-DTLZ1", Base::Dtlz1}, std::pair{"DC1-DTLZ3", Base::Dtlz3}}) {
    add_dtlz_variant(registry, id, suite, 1,
                     [base](std::span<const double> x, std::span<double> f, std::span<double> g,
                            std::span<double>) {
                       dtlz(base, x, f);
                       g[0] = 0.95 - std::cos(5.0 * kPi * x[0]);
                     });
  }

  for (const auto& [id, base] : {std::pair{"DC2-DTLZ1", Base::Dtlz1}, std::pair{"DC2-DTLZ3", Base::Dtlz3}}) {
    add_dtlz_variant(registry, id, suite, 2,
                     [base](std::span<const double> x, std::span<double> f, std::span<double> g,
                            std::span<double>) {
                       const double gx = dtlz(base, x, f);
                       g[0] = 0.9 - std::cos(gx / 100.0 * kPi * 3.0);
                       g[1] = 0.9 - std::exp(-gx / 100.0);
                     });
  }

  for (const auto& [id, base] : {std::pair{"DC3-DTLZ1", Base::Dtlz1}, std::pair{"DC3-DTLZ3", Base::Dtlz3}}) {
    add_dtlz_variant(registry, id, suite, kObjectives,
                     [base](std::span<const double> x, std::span<double> f, std::span<double> g,
                            std::span<double>) {
                       const double gx = dtlz(base, x, f);
                       g[0] = 0.5 - std::cos(5.0 * kPi * gx);
                       for (std::size_t j = 0; j + 1 < f.size(); ++j)
                         g[j + 1] = 0.5 - std::cos(5.0 * kPi * x[j]);
                     });
  }
}

}  // namespace cmela::suites

// CTP1-CTP8 (Deb, Pratap & Meyarivan 2001) with the linear distance function.

#include "cmela/suites.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace cmela::suites {
namespace {

constexpr double kPi = std::numbers::pi;

double g_linear(std::span<const double> x) {
  double s = 1.0;
  for (std::size_t i = 1; i < x.size(); ++i) s += x[i];
  return s;
}

struct Wave {
  double theta, a, b, c, d, e;
};

// Deb's form (exp2 - exp1); the NSGA-II C code divides by exp2, which can be zero.
double wave_constraint(const Wave& w, double f1, double f2) {
  const double ct = std::cos(w.theta);
  const double st = std::sin(w.theta);
  const double exp1 = (f2 - w.e) * ct - f1 * st;
  const double inner = (f2 - w.e) * st + f1 * ct;
  const double exp2 = w.a * std::pow(std::abs(std::sin(w.b * kPi * std::pow(inner, w.c))), w.d);
  return exp2 - exp1;
}

void objectives(std::span<const double> x, std::span<double> f) {
  const double g = g_linear(x);
  f[0] = x[0];
  f[1] = g * (1.0 - std::pow(f[0] / g, 0.5));
}

// Piecewise exponential constraints of CTP1 for J constraints.
struct Ctp1Coefficients {
  std::array<double, 2> a{}, b{};
  Ctp1Coefficients() {
    constexpr int J = 2;
    double ap = 1.0, bp = 1.0;
    const double delta = 1.0 / (J + 1);
    double alpha = delta;
    for (int j = 0; j < J; ++j) {
      const double beta = ap * std::exp(-bp * alpha);
      a[j] = (ap + beta) / 2.0;
      b[j] = -1.0 / alpha * std::log(beta / a[j]);
      ap = a[j];
      bp = b[j];
      alpha += delta;
    }
  }
};

void add(ProblemRegistry& registry, int number, int constraints, double tail_upper,
         ProblemKernel kernel) {
  const std::string id = "CTP" + std::to_string(number);
  ProblemEntry e;
  e.id = id;
  e.suite = "CTP";
  e.num_objectives = 2;
  e.min_dimension = 2;
  e.make = [id, constraints, tail_upper, kernel](const ProblemOptions& o) {
    Vector hi = Vector::Constant(o.dimension, tail_upper);
    hi(0) = 1.0;
    return ProblemInstance(id, "CTP", {o.dimension, 2, constraints, 0}, Vector::Zero(o.dimension),
                           hi, kernel, o.equality_tolerance);
  };
  registry.add(std::move(e));
}

ProblemKernel single_wave(Wave w) {
  return [w](std::span<const double> x, std::span<double> f, std::span<double> g, std::span<double>) {
    objectives(x, f);
    g[0] = wave_constraint(w, f[0], f[1]);
  };
}

}  // namespace

void add_ctp(ProblemRegistry& registry) {
  const Ctp1Coefficients k;
  add(registry, 1, 2, 1.0,
      [k](std::span<const double> x, std::span<double> f, std::span<double> g, std::span<double>) {
        const double gx = g_linear(x);
        f[0] = x[0];
        f[1] = gx * std::exp(-f[0] / gx);
        for (int j = 0; j < 2; ++j) g[j] = -(f[1] - k.a[j] * std::exp(-k.b[j] * f[0]));
      });
  add(registry, 2, 1, 1.0, single_wave({-0.2 * kPi, 0.2, 10.0, 1.0, 6.0, 1.0}));
  add(registry, 3, 1, 1.0, single_wave({-0.2 * kPi, 0.1, 10.0, 1.0, 0.5, 1.0}));
  add(registry, 4, 1, 1.0, single_wave({-0.2 * kPi, 0.75, 10.0, 1.0, 0.5, 1.0}));
  add(registry, 5, 1, 1.0, single_wave({-0.2 * kPi, 0.1, 10.0, 2.0, 0.5, 1.0}));
  add(registry, 6, 1, 20.0, single_wave({0.1 * kPi, 40.0, 0.5, 1.0, 2.0, -2.0}));
  add(registry, 7, 1, 1.0, single_wave({-0.05 * kPi, 40.0, 5.0, 1.0, 6.0, 0.0}));
  const Wave w1{0.1 * kPi, 40.0, 0.5, 1.0, 2.0, -2.0};
  const Wave w2{-0.05 * kPi, 40.0, 2.0, 1.0, 6.0, 0.0};
  add(registry, 8, 2, 20.0,
      [w1, w2](std::span<const double> x, std::span<double> f, std::span<double> g, std::span<double>) {
        objectives(x, f);
        g[0] = wave_constraint(w1, f[0], f[1]);
        g[1] = wave_constraint(w2, f[0], f[1]);
      });
}

}  // namespace cmela::suites

// MW1-MW14 (Ma & Wang 2019). MW4, MW8 and MW14 are scalable in M; registered bi-objective.

#include "cmela/suites.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace cmela::suites {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kM = 2;

double la1(double a, double b, double c, double d, double theta) {
  return a * std::pow(std::sin(b * kPi * std::pow(theta, c)), d);
}
double la2(double a, double b, double c, double d, double theta) {
  return a * std::pow(std::sin(b * std::pow(theta, c)), d);
}
double la3(double a, double b, double c, double d, double theta) {
  return a * std::pow(std::cos(b * std::pow(theta, c)), d);
}

double g1(std::span<const double> x) {
  const int d = static_cast<int>(x.size());
  const double n = d - kM;
  double s = 0.0;
  for (int i = kM - 1; i < d; ++i) {
    const double z = std::pow(x[i], n);
    const double t = z - 0.5 - i / (2.0 * d);
    s += 1.0 - std::exp(-10.0 * t * t);
  }
  return 1.0 + s;
}

double g2(std::span<const double> x) {
  const int d = static_cast<int>(x.size());
  const double n = d;
  double s = 0.0;
  for (int i = kM - 1; i < d; ++i) {
    const double t = x[i] - i / n;
    const double z = 1.0 - std::exp(-10.0 * t * t);
    s += (0.1 / n) * z * z + 1.5 - 1.5 * std::cos(2.0 * kPi * z);
  }
  return 1.0 + s;
}

double g3(std::span<const double> x) {
  const int d = static_cast<int>(x.size());
  double s = 0.0;
  for (int i = kM - 1; i < d; ++i) {
    const double t = x[i] + (x[i - 1] - 0.5) * (x[i - 1] - 0.5) - 1.0;
    s += 2.0 * t * t;
  }
  return 1.0 + s;
}

using Kernel = void (*)(std::span<const double>, std::span<double>, std::span<double>);

void mw1(std::span<const double> x, std::span<double> f, std::span<double> c) {
  const double g = g1(x);
  f[0] = x[0];
  f[1] = g * (1.0 - 0.85 * f[0] / g);
  const double l = std::sqrt(2.0) * f[1] - std::sqrt(2.0) * f[0];
  c[0] = f[0] + f[1] - 1.0 - la1(0.5, 2.0, 1.0, 8.0, l);
}

void mw2(std::span<const double> x, std::span<double> f, std::span<double> c) {
  const double g = g2(x);
  f[0] = x[0];
  f[1] = g * (1.0 - f[0] / g);
  const double l = std::sqrt(2.0) * f[1] - std::sqrt(2.0) * f[0];
  c[0] = f[0] + f[1] - 1.0 - la1(0.5, 3.0, 1.0, 8.0, l);
}

void mw3(std::span<const double> x, std::span<double> f, std::span<double> c) {
  const double g = g3(x);
  f[0] = x[0];
  f[1] = g * (1.0 - f[0] / g);
  const double l = std::sqrt(2.0) * f[1] - std::sqrt(2.0) * f[0];
  c[0] = f[0] + f[1] - 1.05 - la1(0.45, 0.75, 1.0, 6.0, l);
  c[1] = 0.85 - f[0] - f[1] + la1(0.3, 0.75, 1.0, 2.0, l);
}

void mw4(std::span<const double> x, std::span<double> f, std::span<double> c) {
  const double g = g1(x);
  f[0] = g * (1.0 - x[0]);
  f[1] = g * x[0];
  c[0] = f[0] + f[1] - 1.0 - la1(0.4, 2.5, 1.0, 8.0, f[1] - f[0]);
}

void mw5(std::span<const double> x, std::span<double> f, std::span<double> c) {
  const double g = g1(x);
  f[0] = g * x[0];
  const double ratio = f[0] / g;
  f[1] = g * std::sqrt(std::max(0.0, 1.0 - ratio * ratio));
  const double angle = std::atan2(f[1], f[0]);
  const double r2 = f[0] * f[0] + f[1] * f[1];
  c[0] = r2 - std::pow(1.7 - la2(0.2, 2.0, 1.0, 1.0, angle), 2.0);
  const double t = 0.5 * kPi - 2.0 * std::abs(angle - 0.25 * kPi);
  c[1] = std::pow(1.0 + la2(0.5, 6.0, 3.0, 1.0, t), 2.0) - r2;
  c[2] = std::pow(1.0 - la2(0.45, 6.0, 3.0, 1.0, t), 2.0) - r2;
}

void mw6(std::span<const double> x, std::span<double> f, std::span<double> c) {
  const double g = g2(x);
  f[0] = g * x[0];
  const double ratio = f[0] / g;
  // clamp: at x0 = 1.1 rounding can push the radicand just below zero
  f[1] = g * std::sqrt(std::max(0.0, 1.1 * 1.1 - ratio * ratio));
  const double angle = std::atan2(f[1], f[0]);
  const double a = 1.0 + la3(0.15, 6.0, 4.0, 10.0, angle);
  const double b = 1.0 + la3(0.75, 6.0, 4.0, 10.0, angle);
  c[0] = f[0] * f[0] / (a * a) + f[1] * f[1] / (b * b) - 1.0;
}

void mw7(std::span<const double> x, std::span<double> f, std::span<double> c) {
  const double g = g3(x);
  f[0] = g * x[0];
  const double ratio = f[0] / g;
  f[1] = g * std::sqrt(std::max(0.0, 1.0 - ratio * ratio));
  const double angle = std::atan2(f[1], f[0]);
  const double r2 = f[0] * f[0] + f[1] * f[1];
  c[0] = r2 - std::pow(1.2 + std::abs(la2(0.4, 4.0, 1.0, 16.0, angle)), 2.0);
  c[1] = std::pow(1.15 - la2(0.2, 4.0, 1.0, 8.0, angle), 2.0) - r2;
}

void mw8(std::span<const double> x, std::span<double> f, std::span<double> c) {
  const double g = g2(x);
  f[0] = g * std::cos(0.5 * kPi * x[0]);
  f[1] = g * std::sin(0.5 * kPi * x[0]);
  const double r2 = f[0] * f[0] + f[1] * f[1];
  const double t = 1.25 - la2(0.5, 6.0, 1.0, 2.0, std::asin(f[1] / std::sqrt(r2)));
  c[0] = r2 - t * t;
}

void mw9(std::span<const double> x, std::span<double> f, std::span<double> c) {
  const double g = g1(x);
  f[0] = g * x[0];
  f[1] = g * (1.0 - std::pow(f[0] / g, 0.6));
  const double a = f[0], b = f[1];
  const double t1 = (1.0 - 0.64 * a * a - b) * (1.0 - 0.36 * a * a - b);
  const double t2 = (1.35 * 1.35 - (a + 0.35) * (a + 0.35) - b) * (1.15 * 1.15 - (a + 0.15) * (a + 0.15) - b);
  c[0] = std::min(t1, t2);
}

void mw10(std::span<const double> x, std::span<double> f, std::span<double> c) {
  const double g = g2(x);
  f[0] = g * std::pow(x[0], static_cast<double>(x.size()));
  f[1] = g * (1.0 - std::pow(f[0] / g, 2.0));
  const double a2 = f[0] * f[0], b = f[1];
  c[0] = -1.0 * (2.0 - 4.0 * a2 - b) * (2.0 - 8.0 * a2 - b);
  c[1] = (2.0 - 2.0 * a2 - b) * (2.0 - 16.0 * a2 - b);
  c[2] = (1.0 - a2 - b) * (1.2 - 1.2 * a2 - b);
}

void mw11(std::span<const double> x, std::span<double> f, std::span<double> c) {
  const double g = g3(x);
  f[0] = g * x[0];
  const double ratio = f[0] / g;
  f[1] = g * std::sqrt(std::max(0.0, 2.0 - ratio * ratio));
  const double a2 = f[0] * f[0], b = f[1];
  c[0] = -1.0 * (3.0 - a2 - b) * (3.0 - 2.0 * a2 - b);
  c[1] = (3.0 - 0.625 * a2 - b) * (3.0 - 7.0 * a2 - b);
  c[2] = -1.0 * (1.62 - 0.18 * a2 - b) * (1.125 - 0.125 * a2 - b);
  c[3] = (2.07 - 0.23 * a2 - b) * (0.63 - 0.07 * a2 - b);
}

void mw12(std::span<const double> x, std::span<double> f, std::span<double> c) {
  const double g = g1(x);
  f[0] = g * x[0];
  const double ratio = f[0] / g;
  f[1] = g * (0.85 - 0.8 * ratio - 0.08 * std::abs(std::sin(3.2 * kPi * ratio)));
  const double a = f[0], b = f[1];
  c[0] = -1.0 * (1.0 - 0.625 * a - b + 0.08 * std::sin(2.0 * kPi * (b - a / 1.6))) *
         (1.4 - 0.875 * a - b + 0.08 * std::sin(2.0 * kPi * (b / 1.4 - a / 1.6)));
  c[1] = (1.0 - 0.8 * a - b + 0.08 * std::sin(2.0 * kPi * (b - a / 1.5))) *
         (1.8 - 1.125 * a - b + 0.08 * std::sin(2.0 * kPi * (b / 1.8 - a / 1.6)));
}

void mw13(std::span<const double> x, std::span<double> f, std::span<double> c) {
  const double g = g2(x);
  f[0] = g * x[0];
  const double ratio = f[0] / g;
  f[1] = g * (5.0 - std::exp(ratio) - std::abs(0.5 * std::sin(3.0 * kPi * ratio)));
  const double a = f[0], b = f[1];
  const double wave = 0.5 * std::sin(3.0 * kPi * a);
  c[0] = -1.0 * (5.0 - (1.0 + a + 0.5 * a * a) - wave - b) * (5.0 - (1.0 + 0.7 * a) - wave - b);
  c[1] = (5.0 - std::exp(a) - wave - b) * (5.0 - (1.0 + 0.4 * a) - wave - b);
}

void mw14(std::span<const double> x, std::span<double> f, std::span<double> c) {
  const double g = g3(x);
  f[0] = x[0];
  const double wave = la1(1.5, 1.1, 2.0, 1.0, f[0]);
  f[1] = g / (kM - 1) * (6.0 - std::exp(f[0]) - wave);
  const double alpha = 6.1 - 1.0 - f[0] - 0.5 * f[0] * f[0] - wave;
  c[0] = f[1] - 1.0 / (kM - 1) * alpha;
}

struct Definition {
  int number;
  int constraints;
  double upper;
  Kernel kernel;
};

}  // namespace

void add_mw(ProblemRegistry& registry) {
  const Definition defs[] = {
      {1, 1, 1.0, mw1},   {2, 1, 1.0, mw2},   {3, 2, 1.0, mw3},
      {4, 1, 1.0, mw4},   {5, 3, 1.0, mw5},   {6, 1, 1.1, mw6},
      {7, 2, 1.0, mw7},   {8, 1, 1.0, mw8},   {9, 1, 1.0, mw9},
      {10, 3, 1.0, mw10}, {11, 4, std::sqrt(2.0), mw11}, {12, 2, 1.0, mw12},
      {13, 2, 1.5, mw13}, {14, 1, 1.5, mw14},
  };
  for (const Definition& def : defs) {
    const std::string id = "MW" + std::to_string(def.number);
    ProblemEntry e;
    e.id = id;
    e.suite = "MW";
    e.num_objectives = kM;
    e.min_dimension = kM;
    e.make = [id, def](const ProblemOptions& o) {
      auto kernel = [k = def.kernel](std::span<const double> x, std::span<double> f,
                                     std::span<double> g, std::span<double>) { k(x, f, g); };
      return ProblemInstance(id, "MW", {o.dimension, kM, def.constraints, 0},
                             Vector::Zero(o.dimension), Vector::Constant(o.dimension, def.upper),
                             kernel, o.equality_tolerance);
    };
    registry.add(std::move(e));
  }
}

}  // namespace cmela::suites

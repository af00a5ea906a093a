#include "cmela/pareto.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace cmela;

namespace {

Matrix random_objectives(std::mt19937_64& rng, int m, Index n, int levels) {
  std::uniform_int_distribution<int> pick(0, levels);
  Matrix F(m, n);
  for (Index j = 0; j < n; ++j)
    for (int a = 0; a < m; ++a) F(a, j) = pick(rng);
  return F;
}

Vector brute_ratio(const Matrix& F) {
  const Index n = F.cols();
  Vector r = Vector::Zero(n);
  if (n < 2) return r;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (oracle::dominates(F, j, i)) r(i) += 1.0;
  return r / static_cast<double>(n - 1);
}

}  // namespace

TEST_CASE("small nondominated cases") {
  Matrix F(2, 3);
  F << 1, 2, 2, 2, 1, 2;
  CHECK(nondominated_mask(F) == Mask{1, 1, 0});
  CHECK(nondominated_mask(Matrix::Constant(2, 1, 3.0)) == Mask{1});
  Matrix dup(2, 2);
  dup << 1, 1, 1, 1;
  CHECK(nondominated_mask(dup) == Mask{1, 1});
}

TEST_CASE("nondominated mask equals brute force") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const int m = 2 + trial % 3;
    const Matrix F = random_objectives(rng, m, 200, trial % 2 ? 10 : 1000);
    const auto mask = nondominated_mask(F);
    const auto want = oracle::nondominated(F);
    for (Index j = 0; j < F.cols(); ++j) CHECK(static_cast<bool>(mask[j]) == want[j]);
  }
}

TEST_CASE("filter is idempotent and ignores added dominated points") {
  std::mt19937_64 rng(2);
  const Matrix F = random_objectives(rng, 2, 300, 100);
  const auto mask = nondominated_mask(F);
  std::vector<Index> keep;
  for (Index j = 0; j < F.cols(); ++j)
    if (mask[j]) keep.push_back(j);
  Matrix front(2, static_cast<Index>(keep.size()));
  for (std::size_t k = 0; k < keep.size(); ++k) front.col(k) = F.col(keep[k]);
  const auto again = nondominated_mask(front);
  CHECK(std::all_of(again.begin(), again.end(), [](auto b) { return b == 1; }));

  Matrix more(2, F.cols() + 1);
  more.leftCols(F.cols()) = F;
  more.col(F.cols()) = F.col(keep.front()).array() + 1.0;
  const auto extended = nondominated_mask(more);
  for (Index j = 0; j < F.cols(); ++j) CHECK(extended[j] == mask[j]);
  CHECK(extended.back() == 0);
}

TEST_CASE("feasible-only filtering") {
  EvaluatedSample s;
  s.F.resize(2, 3);
  s.F << 0, 1, 2, 0, 1, 2;
  s.v = Eigen::Vector3d(1.0, 0.0, 0.0);
  s.X = Matrix::Zero(1, 3);
  CHECK(nondominated_filter(s, true) == Mask{0, 1, 0});
  CHECK(nondominated_filter(s, false) == Mask{1, 0, 0});
}

TEST_CASE("dominance ratio hand cases") {
  Matrix chain(2, 3);
  chain << 1, 2, 3, 1, 2, 3;
  const Vector r = dominance_ratio(chain);
  CHECK(r(0) == 0.0);
  CHECK(r(1) == 0.5);
  CHECK(r(2) == 1.0);
  Matrix front(2, 4);
  front << 0, 1, 2, 3, 3, 2, 1, 0;
  CHECK(dominance_ratio(front).isZero());
  CHECK(dominance_ratio(Matrix::Zero(2, 1)).isZero());
}

TEST_CASE("dominance ratio equals brute force, with ties") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = trial % 4 == 3 ? 3 : 2;
    const Matrix F = random_objectives(rng, m, 250, trial % 2 ? 5 : 100000);
    const Vector got = dominance_ratio(F, 1 + trial % 3);
    CHECK((got - brute_ratio(F)).cwiseAbs().maxCoeff() == 0.0);
    const auto summary = summarize_dominance(F);
    for (Index j = 0; j < F.cols(); ++j) CHECK((summary.dominance_ratio(j) == 0.0) == (summary.nondominated_mask[j] == 1));
  }
}

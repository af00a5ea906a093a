#pragma once

// Brute-force reference implementations used only by tests.

#include "cmela/types.hpp"

#include <array>
#include <cmath>
#include <map>
#include <vector>

namespace oracle {

using cmela::Index;
using cmela::Matrix;

inline std::vector<Index> neighbors(const Matrix& P, Index i, double eps) {
  std::vector<Index> out;
  for (Index j = 0; j < P.cols(); ++j)
    if ((P.col(j) - P.col(i)).squaredNorm() <= eps * eps) out.push_back(j);
  return out;
}

inline bool dominates(const Matrix& F, Index a, Index b) {
  bool strict = false;
  for (Index m = 0; m < F.rows(); ++m) {
    if (F(m, a) > F(m, b)) return false;
    if (F(m, a) < F(m, b)) strict = true;
  }
  return strict;
}

inline std::vector<bool> nondominated(const Matrix& F) {
  std::vector<bool> out(F.cols(), true);
  for (Index i = 0; i < F.cols(); ++i)
    for (Index j = 0; j < F.cols(); ++j)
      if (dominates(F, j, i)) {
        out[i] = false;
        break;
      }
  return out;
}

/// Number of 8-connected components of true cells in a row-major n x n mask.
inline int flood_fill_components(const std::vector<bool>& mask, int n) {
  std::vector<int> seen(mask.size(), 0);
  int components = 0;
  std::vector<int> stack;
  for (int start = 0; start < n * n; ++start) {
    if (!mask[start] || seen[start]) continue;
    ++components;
    seen[start] = 1;
    stack.push_back(start);
    while (!stack.empty()) {
      const int c = stack.back();
      stack.pop_back();
      const int r = c / n, q = c % n;
      for (int dr = -1; dr <= 1; ++dr)
        for (int dq = -1; dq <= 1; ++dq) {
          const int rr = r + dr, qq = q + dq;
          if (rr < 0 || qq < 0 || rr >= n || qq >= n) continue;
          const int k = rr * n + qq;
          if (mask[k] && !seen[k]) {
            seen[k] = 1;
            stack.push_back(k);
          }
        }
    }
  }
  return components;
}

/// Plain-definition DBSCAN with quadratic neighbourhoods and breadth-first expansion in index order.
inline std::vector<int> dbscan(const Matrix& P, double eps, Index min_samples) {
  const Index n = P.cols();
  std::vector<std::vector<Index>> nb(n);
  std::vector<bool> core(n);
  for (Index i = 0; i < n; ++i) {
    nb[i] = neighbors(P, i, eps);
    core[i] = static_cast<Index>(nb[i].size()) >= min_samples;
  }
  std::vector<int> label(n, -1);
  int next = 0;
  for (Index i = 0; i < n; ++i) {
    if (!core[i] || label[i] != -1) continue;
    const int l = next++;
    std::vector<Index> queue{i};
    label[i] = l;
    for (std::size_t k = 0; k < queue.size(); ++k) {
      const Index c = queue[k];
      if (!core[c]) continue;
      for (Index j : nb[c])
        if (label[j] == -1) {
          label[j] = l;
          queue.push_back(j);
        }
    }
  }
  return label;
}

/// Entropy of mixed blocks by explicit histogram, base 6.
inline double block_entropy(const std::vector<int>& symbols) {
  if (symbols.size() < 2) return 0.0;
  std::map<std::array<int, 2>, int> hist;
  for (std::size_t i = 0; i + 1 < symbols.size(); ++i) hist[{symbols[i], symbols[i + 1]}]++;
  const double blocks = static_cast<double>(symbols.size() - 1);
  double h = 0.0;
  for (const auto& [block, count] : hist) {
    if (block[0] == block[1]) continue;
    const double p = count / blocks;
    h -= p * std::log(p) / std::log(6.0);
  }
  return h;
}

/// Index of the local minimum reached by stepping downhill on a dense 1-D grid.
inline double grid_descent(double (*f)(double), double x0, double lo, double hi, int cells) {
  const double h = (hi - lo) / cells;
  long k = std::lround((x0 - lo) / h);
  while (true) {
    const double here = f(lo + k * h);
    const double left = k > 0 ? f(lo + (k - 1) * h) : here;
    const double right = k < cells ? f(lo + (k + 1) * h) : here;
    if (left < here && left <= right) --k;
    else if (right < here) ++k;
    else break;
  }
  return lo + k * h;
}

}  // namespace oracle

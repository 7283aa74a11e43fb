#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

// Exact square assignment solvers, generic over the cost type (integers,
// binary64, or exact rationals). Both return assignment[row] = column.
namespace gpd {

template <class T>
using CostMatrix = std::vector<std::vector<T>>;

/// Minimum-sum perfect assignment (Hungarian method with potentials, O(n^3)).
template <class T>
std::vector<std::size_t> min_cost_assignment(const CostMatrix<T>& cost) {
  const std::size_t n = cost.size();
  for (const auto& row : cost)
    if (row.size() != n) throw std::invalid_argument("assignment needs a square cost matrix");
  if (n == 0) return {};

  // 1-based potentials; column 0 is a virtual source.
  std::vector<T> u(n + 1, T(0)), v(n + 1, T(0)), minv(n + 1, T(0));
  std::vector<std::size_t> match(n + 1, 0), way(n + 1, 0);
  std::vector<char> used(n + 1), reached(n + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    match[0] = i;
    std::size_t j0 = 0;
    std::fill(used.begin(), used.end(), 0);
    std::fill(reached.begin(), reached.end(), 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = match[j0];
      std::size_t j1 = 0;
      T delta(0);
      bool have_delta = false;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        T reduced = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (!reached[j] || reduced < minv[j]) {
          minv[j] = reduced;
          way[j] = j0;
          reached[j] = 1;
        }
        if (!have_delta || minv[j] < delta) {
          delta = minv[j];
          j1 = j;
          have_delta = true;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<std::size_t> assignment(n);
  for (std::size_t j = 1; j <= n; ++j) assignment[match[j] - 1] = j - 1;
  return assignment;
}

namespace detail {

inline bool augment(std::size_t row, const std::vector<std::vector<std::size_t>>& adj, std::vector<char>& seen,
                    std::vector<std::size_t>& col_owner, std::size_t none) {
  for (std::size_t col : adj[row]) {
    if (seen[col]) continue;
    seen[col] = 1;
    if (col_owner[col] == none || augment(col_owner[col], adj, seen, col_owner, none)) {
      col_owner[col] = row;
      return true;
    }
  }
  return false;
}

/// Perfect matching using only entries <= threshold, or empty if none exists.
template <class T>
std::vector<std::size_t> threshold_matching(const CostMatrix<T>& cost, const T& threshold) {
  const std::size_t n = cost.size();
  const std::size_t none = n;
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!(threshold < cost[i][j])) adj[i].push_back(j);
  std::vector<std::size_t> col_owner(n, none);
  std::vector<char> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    if (!augment(i, adj, seen, col_owner, none)) return {};
  }
  std::vector<std::size_t> assignment(n);
  for (std::size_t j = 0; j < n; ++j) assignment[col_owner[j]] = j;
  return assignment;
}

}  // namespace detail

/// Perfect assignment minimising the largest chosen entry: binary search over
/// the sorted distinct entries with a bipartite feasibility matching.
template <class T>
std::vector<std::size_t> bottleneck_assignment(const CostMatrix<T>& cost) {
  const std::size_t n = cost.size();
  for (const auto& row : cost)
    if (row.size() != n) throw std::invalid_argument("assignment needs a square cost matrix");
  if (n == 0) return {};
  std::vector<T> candidates;
  for (const auto& row : cost) candidates.insert(candidates.end(), row.begin(), row.end());
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  std::size_t lo = 0, hi = candidates.size() - 1;  // the largest entry is always feasible
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (detail::threshold_matching(cost, candidates[mid]).empty()) lo = mid + 1;
    else hi = mid;
  }
  return detail::threshold_matching(cost, candidates[lo]);
}

}  // namespace gpd

#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "ldt/feasible_set.hpp"

namespace ldt {

// Reference solvers used as correctness oracles and evaluation-time
// comparators. Value type T is Rat for exact checks and double for timing.

template <typename T>
struct BruteResult {
  int index = -1;  // smallest-index argmax
  T objective{};
};

template <typename T>
BruteResult<T> brute_force(const FeasibleSet& set, const std::vector<T>& c) {
  if (set.points.empty()) throw std::invalid_argument("brute_force: empty set");
  BruteResult<T> best;
  for (int i = 0; i < set.size(); ++i) {
    T obj{};
    const IntVec& x = set.points[i];
    for (int j = 0; j < set.n; ++j) {
      if (x[j] == 0) continue;
      if constexpr (std::is_same_v<T, double>)
        obj += static_cast<double>(x[j]) * c[j];
      else
        obj += T(x[j]) * c[j];
    }
    if (best.index < 0 || obj > best.objective) {
      best.index = i;
      best.objective = obj;
    }
  }
  return best;
}

// Capacity-indexed 0/1 knapsack optimum (integer weights, additive values).
template <typename T>
T knapsack_dp(const std::vector<long long>& weights, long long capacity,
              const std::vector<T>& values) {
  if (capacity < 0) throw std::invalid_argument("knapsack_dp: negative capacity");
  if (weights.size() != values.size())
    throw std::invalid_argument("knapsack_dp: weights/values size mismatch");
  std::vector<T> dp(static_cast<size_t>(capacity) + 1, T{});
  for (size_t i = 0; i < weights.size(); ++i) {
    const long long w = weights[i];
    if (w < 0) throw std::invalid_argument("knapsack_dp: negative weight");
    for (long long cap = capacity; cap >= w; --cap) {
      T cand = dp[cap - w] + values[i];
      if (cand > dp[cap]) dp[cap] = cand;
    }
  }
  return dp[capacity];
}

// Exact minimum Hamiltonian-cycle length by bitmask dynamic programming.
// dist is a flat d*d symmetric matrix. Returns (tour as vertex order
// starting at 0, length). 3 <= d <= 20.
template <typename T>
std::pair<std::vector<int>, T> held_karp(int d, const std::vector<T>& dist) {
  if (d < 3 || d > 20) throw std::invalid_argument("held_karp: d out of range");
  if (static_cast<int>(dist.size()) != d * d)
    throw std::invalid_argument("held_karp: bad distance matrix");
  const int m = d - 1;  // vertices 1..d-1; vertex 0 fixed as the tour anchor
  const size_t full = size_t{1} << m;
  std::vector<T> dp(full * m, T{});
  std::vector<char> set_flag(full * m, 0);
  std::vector<int> parent(full * m, -1);
  for (int v = 0; v < m; ++v) {
    dp[(size_t{1} << v) * m + v] = dist[0 * d + (v + 1)];
    set_flag[(size_t{1} << v) * m + v] = 1;
  }
  for (size_t mask = 1; mask < full; ++mask) {
    for (int last = 0; last < m; ++last) {
      if (!(mask >> last & 1) || !set_flag[mask * m + last]) continue;
      const T cur = dp[mask * m + last];
      for (int nxt = 0; nxt < m; ++nxt) {
        if (mask >> nxt & 1) continue;
        const size_t nmask = mask | (size_t{1} << nxt);
        T cand = cur + dist[(last + 1) * d + (nxt + 1)];
        const size_t slot = nmask * m + nxt;
        if (!set_flag[slot] || cand < dp[slot]) {
          dp[slot] = cand;
          set_flag[slot] = 1;
          parent[slot] = last;
        }
      }
    }
  }
  int best_last = -1;
  T best{};
  for (int last = 0; last < m; ++last) {
    T cand = dp[(full - 1) * m + last] + dist[(last + 1) * d + 0];
    if (best_last < 0 || cand < best) {
      best = cand;
      best_last = last;
    }
  }
  std::vector<int> tour;
  size_t mask = full - 1;
  int last = best_last;
  while (last >= 0) {
    tour.push_back(last + 1);
    int prev = parent[mask * m + last];
    mask &= ~(size_t{1} << last);
    last = prev;
  }
  tour.push_back(0);
  std::reverse(tour.begin(), tour.end());
  return {tour, best};
}

// Exact argmax of c'x over all cut vectors of the complete graph on d
// vertices, by enumeration of the 2^(d-1) bipartitions. Returns the cut
// vector (lexicographic edge order) and the objective.
template <typename T>
std::pair<std::vector<int>, T> best_cut(int d, const std::vector<T>& edge_costs) {
  if (d < 2 || d > 24) throw std::invalid_argument("best_cut: d out of range");
  const int n = d * (d - 1) / 2;
  if (static_cast<int>(edge_costs.size()) != n)
    throw std::invalid_argument("best_cut: bad cost dimension");
  T best{};
  uint32_t best_mask = 0;
  bool first = true;
  for (uint32_t mask = 0; mask < (uint32_t{1} << (d - 1)); ++mask) {
    // bit v of mask: vertex v+2 is on the selected side (vertex 1 never is)
    T obj{};
    int e = 0;
    for (int i = 1; i <= d; ++i) {
      const bool si = i >= 2 && (mask >> (i - 2) & 1);
      for (int j = i + 1; j <= d; ++j, ++e) {
        const bool sj = mask >> (j - 2) & 1;
        if (si != sj) obj += edge_costs[e];
      }
    }
    if (first || obj > best) {
      best = obj;
      best_mask = mask;
      first = false;
    }
  }
  std::vector<int> cut(n, 0);
  int e = 0;
  for (int i = 1; i <= d; ++i) {
    const bool si = i >= 2 && (best_mask >> (i - 2) & 1);
    for (int j = i + 1; j <= d; ++j, ++e) {
      const bool sj = best_mask >> (j - 2) & 1;
      cut[e] = si != sj ? 1 : 0;
    }
  }
  return {cut, best};
}

}  // namespace ldt

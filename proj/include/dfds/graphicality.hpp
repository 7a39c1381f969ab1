#pragma once

// Graphicality tests: Havel-Hakimi reduction and the Erdos-Gallai
// inequalities, kept independent so each can serve as the other's oracle.

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "dfds/graph.hpp"
#include "dfds/sequence.hpp"

namespace dfds {

namespace detail {

// Stable counting sort into non-increasing order over [0, bound].
inline void counting_sort_desc(std::vector<int> &values, int bound) {
  std::vector<int> counts(static_cast<std::size_t>(bound) + 1, 0);
  for (int v : values)
    ++counts[v];
  std::size_t pos = 0;
  for (int d = bound; d >= 0; --d)
    for (int k = 0; k < counts[d]; ++k)
      values[pos++] = d;
}

} // namespace detail

inline bool is_graphical_hh(const DegreeSequence &seq) {
  std::vector<int> residual = seq.values();
  if (residual.empty())
    return true;
  int bound = *std::max_element(residual.begin(), residual.end());
  if (residual.back() < 0)
    return false;
  while (!residual.empty()) {
    int d = residual.front();
    residual.erase(residual.begin());
    if (d == 0)
      return true; // everything left is zero
    if (d > static_cast<int>(residual.size()))
      return false;
    for (int i = 0; i < d; ++i)
      if (--residual[i] < 0)
        return false;
    detail::counting_sort_desc(residual, bound);
  }
  return true;
}

inline bool is_graphical_eg(const DegreeSequence &seq) {
  const auto &d = seq.values();
  const long n = static_cast<long>(d.size());
  if (n > 0 && d.back() < 0)
    return false;
  if (seq.sum() % 2 != 0)
    return false;
  long prefix = 0;
  for (long k = 1; k <= n; ++k) {
    prefix += d[k - 1];
    long rhs = k * (k - 1);
    for (long i = k; i < n; ++i)
      rhs += std::min<long>(d[i], k);
    if (prefix > rhs)
      return false;
  }
  return true;
}

/// Constructive Havel-Hakimi: vertex i of the result receives degree seq[i].
/// The vertex of largest residual degree (lowest index on ties) is joined to
/// the next largest residual vertices (lowest index on ties).
inline std::optional<Graph> realize_any(const DegreeSequence &seq) {
  const int n = static_cast<int>(seq.size());
  if (n > max_vertices)
    throw InputError("realize_any: sequence longer than 64");
  std::vector<int> residual = seq.values();
  std::vector<bool> done(n, false);
  Graph g(n);
  auto by_residual = [&](int a, int b) {
    if (residual[a] != residual[b])
      return residual[a] > residual[b];
    return a < b;
  };
  std::vector<int> order(n);
  for (int step = 0; step < n; ++step) {
    order.clear();
    for (int v = 0; v < n; ++v)
      if (!done[v])
        order.push_back(v);
    std::sort(order.begin(), order.end(), by_residual);
    int hub = order.front();
    int d = residual[hub];
    if (d < 0 || d > static_cast<int>(order.size()) - 1)
      return std::nullopt;
    for (int k = 1; k <= d; ++k) {
      int v = order[k];
      if (residual[v] <= 0)
        return std::nullopt;
      --residual[v];
      g.add_edge(hub, v);
    }
    residual[hub] = 0;
    done[hub] = true;
  }
  return g;
}

} // namespace dfds

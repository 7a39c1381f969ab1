#pragma once

// Single-stage model: degree variables deg_1 >= ... >= deg_n over [3, n-1]
// are branched on first, then the adjacency cells are searched for that
// degree assignment with no symmetry breaking. No graphicality filter and no
// shared enumeration code with the two-stage pipeline.

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "dfds/errors.hpp"
#include "dfds/realizer.hpp"
#include "dfds/sequence.hpp"

namespace dfds {

struct ModelAStats {
  std::uint64_t degree_nodes = 0;
  std::uint64_t leaves = 0;
  SearchStats adjacency;
};

/// Returns every degree sequence admitting a diamond-free graph under the
/// arithmetic constraints. A node_limit caps adjacency nodes over the whole
/// run; exceeding it throws InconclusiveError, never a partial answer.
inline std::set<DegreeSequence> solve_model_a(int n, std::optional<std::uint64_t> node_limit = {},
                                              ModelAStats *stats_out = nullptr) {
  if (n < 1)
    throw InputError("solve_model_a: n must be positive");
  if (n > max_vertices)
    throw InputError("solve_model_a: n must be at most 64");
  if (node_limit && *node_limit == 0)
    throw InputError("solve_model_a: node_limit must be positive");

  ModelAStats stats;
  std::set<DegreeSequence> found;
  std::vector<int> deg(n);

  auto leaf = [&] {
    ++stats.leaves;
    SearchConfig cfg;
    cfg.symmetry_breaking = false;
    if (node_limit) {
      if (stats.adjacency.nodes >= *node_limit)
        throw InconclusiveError("solve_model_a: node limit reached");
      cfg.node_limit = *node_limit - stats.adjacency.nodes;
    }
    auto r = find_diamond_free_realization(DegreeSequence(deg), cfg);
    stats.adjacency += r.stats;
    if (r.outcome == SearchOutcome::inconclusive)
      throw InconclusiveError("solve_model_a: node limit reached");
    if (r.outcome == SearchOutcome::found)
      found.insert(DegreeSequence(deg));
  };

  // deg[i] <= deg[i-1]; each deg[i] mod 3 == 0; sum mod 12 == 0 at the leaf.
  auto branch = [&](auto &self, int i, int upper, int sum) -> void {
    if (i == n) {
      if (sum % 12 == 0)
        leaf();
      return;
    }
    for (int d = upper; d >= 3; --d) {
      if (d % 3 != 0)
        continue;
      ++stats.degree_nodes;
      deg[i] = d;
      self(self, i + 1, d, sum + d);
    }
  };
  branch(branch, 0, n - 1, 0);
  if (stats_out)
    *stats_out = stats;
  return found;
}

} // namespace dfds

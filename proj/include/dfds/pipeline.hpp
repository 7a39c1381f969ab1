#pragma once

// Two-stage solve: enumerate arithmetic sequences, drop non-graphical ones,
// then search each survivor for a diamond-free realization.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "dfds/errors.hpp"
#include "dfds/graphicality.hpp"
#include "dfds/realizer.hpp"
#include "dfds/sequence.hpp"

namespace dfds {

struct PipelineOptions {
  int jobs = 1;
  std::optional<std::uint64_t> node_limit;
  bool symmetry_breaking = true;
};

struct SolvedSequence {
  DegreeSequence sequence;
  Graph witness;
  SearchStats stats;
};

struct PipelineResult {
  int n = 0;
  std::size_t candidates = 0;
  std::size_t graphical = 0;
  /// Ascending lexicographic order, the order of the published table.
  std::vector<SolvedSequence> solutions;
  SearchStats totals;
  std::chrono::nanoseconds wall_time{0};
};

/// Table order: ascending lexicographic on the non-increasing sequences.
inline void sort_table_order(std::vector<DegreeSequence> &seqs) {
  std::sort(seqs.begin(), seqs.end());
}

/// Throws InconclusiveError if any search hits its node limit, so a row can
/// never be dropped silently.
inline PipelineResult solve(int n, const PipelineOptions &opts = {}) {
  if (opts.jobs < 1)
    throw InputError("jobs must be at least 1");
  auto start = std::chrono::steady_clock::now();
  PipelineResult out;
  out.n = n;

  std::vector<DegreeSequence> work;
  for_each_arithmetic(ArithmeticConstraints::for_order(n), [&](const DegreeSequence &s) {
    ++out.candidates;
    if (is_graphical_hh(s))
      work.push_back(s);
    return true;
  });
  out.graphical = work.size();

  SearchConfig cfg;
  cfg.symmetry_breaking = opts.symmetry_breaking;
  cfg.node_limit = opts.node_limit;

  std::vector<SearchResult> results(work.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < work.size(); i = next++)
      results[i] = find_diamond_free_realization(work[i], cfg);
  };
  const int threads = std::min<int>(opts.jobs, static_cast<int>(work.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back(worker);
  }

  for (std::size_t i = 0; i < work.size(); ++i) {
    const auto &r = results[i];
    out.totals += r.stats;
    if (r.outcome == SearchOutcome::inconclusive)
      throw InconclusiveError("search for " + to_string(work[i]) + " exceeded the node limit");
    if (r.outcome == SearchOutcome::found)
      out.solutions.push_back({work[i], *r.graph, r.stats});
  }
  std::sort(out.solutions.begin(), out.solutions.end(),
            [](const SolvedSequence &a, const SolvedSequence &b) { return a.sequence < b.sequence; });
  out.wall_time = std::chrono::steady_clock::now() - start;
  return out;
}

inline std::vector<DegreeSequence> solution_sequences(const PipelineResult &r) {
  std::vector<DegreeSequence> out;
  for (const auto &s : r.solutions)
    out.push_back(s.sequence);
  return out;
}

} // namespace dfds

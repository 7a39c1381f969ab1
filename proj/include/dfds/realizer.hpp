#pragma once

// Backtracking search for a diamond-free graph with a prescribed degree
// sequence. Decision variables are the upper-triangle adjacency cells in
// row-major order; each assignment is checked incrementally against the
// degree bounds, the diamond (edge in two triangles) rule and, optionally,
// the row-lex ordering of adjacent equal-degree vertices.

#include <bit>
#include <chrono>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dfds/errors.hpp"
#include "dfds/graph.hpp"
#include "dfds/sequence.hpp"

namespace dfds {

enum class SearchMode { find_first, count_all };

enum class SearchOutcome { found, absent, inconclusive };

struct SearchConfig {
  bool symmetry_breaking = true;
  std::optional<std::uint64_t> node_limit;
  SearchMode mode = SearchMode::find_first;
  /// Value order per cell: 1 then 0 when set.
  bool edge_first = true;
  /// Largest order accepted for count_all without symmetry breaking.
  int unbroken_count_limit = 10;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t backtracks = 0;
  std::chrono::nanoseconds wall_time{0};
  bool found = false;

  SearchStats &operator+=(const SearchStats &o) {
    nodes += o.nodes;
    backtracks += o.backtracks;
    wall_time += o.wall_time;
    found = found || o.found;
    return *this;
  }
};

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::absent;
  /// First witness found (find_first, or the first of count_all).
  std::optional<Graph> graph;
  /// Number of complete assignments (count_all); 0 or 1 in find_first.
  std::uint64_t count = 0;
  SearchStats stats;
};

namespace detail {

class RealizationSearch {
public:
  RealizationSearch(const DegreeSequence &seq, const SearchConfig &cfg)
      : cfg_(cfg), n_(static_cast<int>(seq.size())), target_(seq.values()),
        adj_(n_, 0), known_(n_, 0), deg_(n_, 0), free_(n_, n_ - 1),
        lex_with_next_(n_, false) {
    for (int v = 0; v < n_; ++v)
      known_[v] = VertexMask{1} << v; // diagonal is fixed at 0
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        cells_.emplace_back(i, j);
    if (cfg_.symmetry_breaking)
      for (int v = 0; v + 1 < n_; ++v)
        lex_with_next_[v] = target_[v] == target_[v + 1];
  }

  SearchResult run() {
    auto start = std::chrono::steady_clock::now();
    SearchResult result;
    bool feasible_root = true;
    for (int v = 0; v < n_; ++v)
      if (target_[v] < 0 || target_[v] > n_ - 1)
        feasible_root = false;
    if (feasible_root) {
      try {
        descend(0, result);
        result.outcome = result.count > 0 ? SearchOutcome::found : SearchOutcome::absent;
      } catch (const NodeLimitReached &) {
        result.outcome = SearchOutcome::inconclusive;
      }
    }
    result.stats = stats_;
    result.stats.found = result.outcome == SearchOutcome::found;
    result.stats.wall_time = std::chrono::steady_clock::now() - start;
    return result;
  }

private:
  struct NodeLimitReached {};
  struct StopSearch {};

  static constexpr VertexMask bit(int v) { return VertexMask{1} << v; }

  bool descend(std::size_t k, SearchResult &result) {
    if (k == cells_.size()) {
      if (result.count == 0)
        result.graph = snapshot();
      ++result.count;
      return cfg_.mode == SearchMode::count_all;
    }
    auto [r, c] = cells_[k];
    for (int attempt = 0; attempt < 2; ++attempt) {
      bool value = (attempt == 0) == cfg_.edge_first;
      ++stats_.nodes;
      if (cfg_.node_limit && stats_.nodes > *cfg_.node_limit)
        throw NodeLimitReached{};
      assign(r, c, value);
      bool keep_going = true;
      if (consistent(r, c, value))
        keep_going = descend(k + 1, result);
      else
        ++stats_.backtracks;
      unassign(r, c, value);
      if (!keep_going)
        return false;
    }
    return true;
  }

  void assign(int r, int c, bool value) {
    known_[r] |= bit(c);
    known_[c] |= bit(r);
    --free_[r];
    --free_[c];
    if (value) {
      adj_[r] |= bit(c);
      adj_[c] |= bit(r);
      ++deg_[r];
      ++deg_[c];
    }
  }

  void unassign(int r, int c, bool value) {
    known_[r] &= ~bit(c);
    known_[c] &= ~bit(r);
    ++free_[r];
    ++free_[c];
    if (value) {
      adj_[r] &= ~bit(c);
      adj_[c] &= ~bit(r);
      --deg_[r];
      --deg_[c];
    }
  }

  bool degree_ok(int v) const {
    return deg_[v] <= target_[v] && deg_[v] + free_[v] >= target_[v];
  }

  // Only edges touching the new edge {r, c} can have gained a triangle.
  bool diamond_ok(int r, int c) const {
    VertexMask common = adj_[r] & adj_[c];
    int shared = std::popcount(common);
    if (shared >= 2)
      return false;
    if (shared == 1) {
      int w = std::countr_zero(common);
      if (std::popcount(adj_[r] & adj_[w]) >= 2 || std::popcount(adj_[c] & adj_[w]) >= 2)
        return false;
    }
    return true;
  }

  // Row a must be lexicographically <= row a+1. Decided by the first
  // differing column inside the prefix known in both rows.
  bool lex_ok(int a) const {
    int b = a + 1;
    VertexMask both = known_[a] & known_[b];
    int first_unknown = std::countr_one(both);
    VertexMask prefix = first_unknown >= 64 ? ~VertexMask{0} : bit(first_unknown) - 1;
    VertexMask diff = (adj_[a] ^ adj_[b]) & prefix;
    if (!diff)
      return true;
    return (adj_[b] >> std::countr_zero(diff)) & 1U;
  }

  bool lex_around(int v) const {
    if (v > 0 && lex_with_next_[v - 1] && !lex_ok(v - 1))
      return false;
    if (lex_with_next_[v] && !lex_ok(v))
      return false;
    return true;
  }

  bool consistent(int r, int c, bool value) const {
    if (!degree_ok(r) || !degree_ok(c))
      return false;
    if (value && !diamond_ok(r, c))
      return false;
    if (cfg_.symmetry_breaking && (!lex_around(r) || !lex_around(c)))
      return false;
    return true;
  }

  Graph snapshot() const {
    Graph g(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (adj_[i] & bit(j))
          g.add_edge(i, j);
    return g;
  }

  SearchConfig cfg_;
  int n_;
  std::vector<int> target_;
  std::vector<VertexMask> adj_;
  std::vector<VertexMask> known_;
  std::vector<int> deg_;
  std::vector<int> free_;
  std::vector<bool> lex_with_next_;
  std::vector<std::pair<int, int>> cells_;
  SearchStats stats_;
};

inline void check_search_config(const SearchConfig &cfg) {
  if (cfg.node_limit && *cfg.node_limit == 0)
    throw InputError("node_limit must be positive");
}

} // namespace detail

/// Vertex i of a returned graph has degree seq[i]. With symmetry breaking on,
/// row i <=lex row i+1 whenever seq[i] == seq[i+1].
inline SearchResult find_diamond_free_realization(const DegreeSequence &seq, SearchConfig cfg = {}) {
  detail::check_search_config(cfg);
  if (static_cast<int>(seq.size()) > max_vertices)
    throw InputError("sequence longer than 64");
  cfg.mode = SearchMode::find_first;
  return detail::RealizationSearch(seq, cfg).run();
}

/// Counts adjacency matrices that realize seq diamond-free (and satisfy the
/// row-lex constraints when symmetry_breaking is on). Without symmetry
/// breaking this is the number of labelled realizations, and orders above
/// cfg.unbroken_count_limit are refused.
inline SearchResult count_realizations(const DegreeSequence &seq, SearchConfig cfg = {}) {
  detail::check_search_config(cfg);
  if (!cfg.symmetry_breaking && static_cast<int>(seq.size()) > cfg.unbroken_count_limit)
    throw InputError("count_realizations: order " + std::to_string(seq.size()) +
                     " exceeds the exhaustive bound " + std::to_string(cfg.unbroken_count_limit));
  if (static_cast<int>(seq.size()) > max_vertices)
    throw InputError("sequence longer than 64");
  cfg.mode = SearchMode::count_all;
  return detail::RealizationSearch(seq, cfg).run();
}

} // namespace dfds

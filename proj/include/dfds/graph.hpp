#pragma once

// Simple undirected graphs stored as one 64-bit neighbourhood mask per vertex.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "dfds/errors.hpp"
#include "dfds/sequence.hpp"

namespace dfds {

using VertexMask = std::uint64_t;

inline constexpr int max_vertices = 64;

class Graph {
public:
  Graph() = default;

  explicit Graph(int n) : rows_(check_order(n), 0) {}

  Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n) {
    for (auto [u, v] : edges)
      add_edge(u, v);
  }

  int order() const { return static_cast<int>(rows_.size()); }

  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1U; }

  VertexMask neighbours(int v) const { return rows_[v]; }

  int degree(int v) const { return std::popcount(rows_[v]); }

  int edge_count() const {
    int twice = 0;
    for (auto row : rows_)
      twice += std::popcount(row);
    return twice / 2;
  }

  void add_edge(int u, int v) {
    check_pair(u, v);
    rows_[u] |= VertexMask{1} << v;
    rows_[v] |= VertexMask{1} << u;
  }

  void remove_edge(int u, int v) {
    check_pair(u, v);
    rows_[u] &= ~(VertexMask{1} << v);
    rows_[v] &= ~(VertexMask{1} << u);
  }

  void set_edge(int u, int v, bool present) {
    if (present)
      add_edge(u, v);
    else
      remove_edge(u, v);
  }

  /// Edges as (i, j) with i < j in lexicographic order.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < order(); ++i)
      for (int j = i + 1; j < order(); ++j)
        if (adjacent(i, j))
          out.emplace_back(i, j);
    return out;
  }

  /// Per-vertex degrees in vertex order (unsorted).
  std::vector<int> vertex_degrees() const {
    std::vector<int> out(rows_.size());
    for (int v = 0; v < order(); ++v)
      out[v] = degree(v);
    return out;
  }

  friend bool operator==(const Graph &, const Graph &) = default;

private:
  static std::size_t check_order(int n) {
    if (n < 0 || n > max_vertices)
      throw InputError("graph order must be in [0, 64], got " + std::to_string(n));
    return static_cast<std::size_t>(n);
  }

  void check_pair(int u, int v) const {
    if (u < 0 || v < 0 || u >= order() || v >= order())
      throw InputError("vertex out of range");
    if (u == v)
      throw InputError("loops are not allowed");
  }

  std::vector<VertexMask> rows_;
};

inline DegreeSequence degrees(const Graph &g) {
  return DegreeSequence(g.vertex_degrees());
}

inline int edges_among(const Graph &g, std::array<int, 4> quad) {
  for (int i = 0; i < 4; ++i) {
    if (quad[i] < 0 || quad[i] >= g.order())
      throw InputError("quad vertex out of range");
    for (int j = 0; j < i; ++j)
      if (quad[i] == quad[j])
        throw InputError("quad vertices must be distinct");
  }
  int count = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      count += g.adjacent(quad[i], quad[j]);
  return count;
}

/// A diamond exists iff some edge lies in two or more triangles, i.e. the
/// endpoints of an edge share at least two neighbours.
inline bool is_diamond_free(const Graph &g) {
  for (int u = 0; u < g.order(); ++u) {
    VertexMask later = g.neighbours(u) & ~((VertexMask{2} << u) - 1);
    while (later) {
      int v = std::countr_zero(later);
      later &= later - 1;
      if (std::popcount(g.neighbours(u) & g.neighbours(v)) >= 2)
        return false;
    }
  }
  return true;
}

inline Graph complement(const Graph &g) {
  Graph out(g.order());
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j)
      if (!g.adjacent(i, j))
        out.add_edge(i, j);
  return out;
}

// Serialization ------------------------------------------------------------

/// "n" on the first line, then n rows of space separated 0/1 entries.
inline std::string to_matrix_text(const Graph &g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (int i = 0; i < g.order(); ++i) {
    for (int j = 0; j < g.order(); ++j) {
      if (j)
        out += ' ';
      out += g.adjacent(i, j) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

inline Graph from_matrix_text(const std::string &text) {
  std::istringstream in(text);
  int n = -1;
  if (!(in >> n) || n < 0 || n > max_vertices)
    throw InputError("matrix text: missing or invalid vertex count");
  std::vector<std::vector<int>> cells(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!(in >> cells[i][j]) || (cells[i][j] != 0 && cells[i][j] != 1))
        throw InputError("matrix text: expected 0/1 entry at row " + std::to_string(i));
    }
  std::string trailing;
  if (in >> trailing)
    throw InputError("matrix text: trailing data");
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    if (cells[i][i])
      throw InputError("matrix text: nonzero diagonal");
    for (int j = i + 1; j < n; ++j) {
      if (cells[i][j] != cells[j][i])
        throw InputError("matrix text: matrix is not symmetric");
      if (cells[i][j])
        g.add_edge(i, j);
    }
  }
  return g;
}

inline nlohmann::json to_json(const Graph &g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [i, j] : g.edges())
    edges.push_back({i, j});
  return {{"n", g.order()}, {"edges", std::move(edges)}};
}

inline std::string to_json_text(const Graph &g) { return to_json(g).dump(); }

inline Graph graph_from_json(const nlohmann::json &doc) {
  try {
    int n = doc.at("n").get<int>();
    if (n < 0 || n > max_vertices)
      throw InputError("graph json: invalid vertex count");
    Graph g(n);
    for (const auto &e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2)
        throw InputError("graph json: edge must be a pair");
      int i = e[0].get<int>(), j = e[1].get<int>();
      if (i >= j)
        throw InputError("graph json: edges must be written with i < j");
      g.add_edge(i, j);
    }
    return g;
  } catch (const nlohmann::json::exception &ex) {
    throw InputError(std::string("graph json: ") + ex.what());
  }
}

inline Graph graph_from_json_text(const std::string &text) {
  try {
    return graph_from_json(nlohmann::json::parse(text));
  } catch (const nlohmann::json::parse_error &ex) {
    throw InputError(std::string("graph json: ") + ex.what());
  }
}

} // namespace dfds

#pragma once

// Stinson-style hill climbing for Steiner triple systems and for partial
// linear spaces with blocks of size 4, plus classification of the latter
// through the graph of pairs left uncovered.
//
// The block-size-4 climb works on the uncovered-pairs graph U. A live triple
// is a triangle of U; two live triples overlap when they share a pair, which
// is exactly a diamond in U. The climb stops once U has no diamond.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "dfds/errors.hpp"
#include "dfds/graph.hpp"

namespace dfds {

/// Seeded choice stream: std::mt19937_64 (bit-exact by the standard) with
/// rejection sampling for bounded draws, so the stream is identical on every
/// platform.
class SeededRng {
public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0)
      throw InputError("SeededRng::below: empty range");
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

private:
  std::mt19937_64 engine_;
};

struct RngSpec {
  std::uint64_t seed = 0;
  static constexpr const char *algorithm = "mt19937_64+rejection";
};

inline constexpr std::uint64_t default_max_iterations = 10'000'000;

struct Design {
  int n = 0;
  /// Each block ascending; blocks in lexicographic order.
  std::vector<std::vector<int>> blocks;

  friend bool operator==(const Design &, const Design &) = default;
};

inline void canonicalize(Design &d) {
  for (auto &b : d.blocks)
    std::sort(b.begin(), b.end());
  std::sort(d.blocks.begin(), d.blocks.end());
}

/// Number of blocks containing each pair; n x n, row-major.
inline std::vector<int> pair_multiplicity(const Design &d) {
  std::vector<int> mult(static_cast<std::size_t>(d.n) * d.n, 0);
  for (const auto &b : d.blocks)
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j) {
        ++mult[b[i] * d.n + b[j]];
        ++mult[b[j] * d.n + b[i]];
      }
  return mult;
}

/// Every pair in at most one block, blocks well formed.
inline bool is_partial_linear_space(const Design &d) {
  for (const auto &b : d.blocks) {
    for (int p : b)
      if (p < 0 || p >= d.n)
        return false;
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j)
        if (b[i] == b[j])
          return false;
  }
  auto mult = pair_multiplicity(d);
  return std::all_of(mult.begin(), mult.end(), [](int m) { return m <= 1; });
}

/// Every pair in exactly one block.
inline bool covers_every_pair_once(const Design &d) {
  if (!is_partial_linear_space(d))
    return false;
  auto mult = pair_multiplicity(d);
  for (int i = 0; i < d.n; ++i)
    for (int j = i + 1; j < d.n; ++j)
      if (mult[i * d.n + j] != 1)
        return false;
  return true;
}

inline Graph uncovered_pairs_graph(const Design &d) {
  auto mult = pair_multiplicity(d);
  Graph g(d.n);
  for (int i = 0; i < d.n; ++i)
    for (int j = i + 1; j < d.n; ++j)
      if (mult[i * d.n + j] == 0)
        g.add_edge(i, j);
  return g;
}

struct StructureReport {
  bool is_complete_design = false;
  int s4 = 0;
  Graph complement;
  bool complement_diamond_free = false;
  bool complement_degrees_div3 = false;
  bool complement_edges_div6 = false;
  /// Points lying in the maximum possible number of blocks, (n-1)/3.
  int points_in_max_blocks = 0;
};

inline StructureReport classify_structure(const Design &d) {
  StructureReport rep;
  rep.s4 = static_cast<int>(d.blocks.size());
  rep.complement = uncovered_pairs_graph(d);
  rep.is_complete_design = rep.complement.edge_count() == 0 && is_partial_linear_space(d);
  rep.complement_diamond_free = is_diamond_free(rep.complement);
  rep.complement_degrees_div3 = true;
  for (int v = 0; v < d.n; ++v)
    if (rep.complement.degree(v) % 3 != 0)
      rep.complement_degrees_div3 = false;
  rep.complement_edges_div6 = rep.complement.edge_count() % 6 == 0;
  std::vector<int> blocks_through(d.n, 0);
  for (const auto &b : d.blocks)
    for (int p : b)
      ++blocks_through[p];
  const int max_blocks = (d.n - 1) / 3;
  rep.points_in_max_blocks =
      static_cast<int>(std::count(blocks_through.begin(), blocks_through.end(), max_blocks));
  return rep;
}

// Serialization ------------------------------------------------------------

inline nlohmann::json to_json(const Design &d) {
  return {{"n", d.n}, {"blocks", d.blocks}};
}

/// One block per line in "(0,1,2)" style.
inline std::string to_block_text(const Design &d) {
  std::string out;
  for (const auto &b : d.blocks) {
    out += '(';
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i)
        out += ',';
      out += std::to_string(b[i]);
    }
    out += ")\n";
  }
  return out;
}

inline nlohmann::json to_json(const StructureReport &r) {
  nlohmann::json degrees = nlohmann::json::array();
  for (int d : dfds::degrees(r.complement))
    degrees.push_back(d);
  return {{"is_complete_design", r.is_complete_design},
          {"s4", r.s4},
          {"complement", to_json(r.complement)},
          {"complement_degrees", std::move(degrees)},
          {"complement_diamond_free", r.complement_diamond_free},
          {"complement_degrees_div3", r.complement_degrees_div3},
          {"complement_edges_div6", r.complement_edges_div6},
          {"points_in_max_blocks", r.points_in_max_blocks}};
}

namespace detail {

/// Blocks with O(1) lookup of the block covering a pair and swap-remove.
template <std::size_t K>
class BlockStore {
public:
  explicit BlockStore(int n) : n_(n), owner_(static_cast<std::size_t>(n) * n, -1) {}

  int owner(int a, int b) const { return owner_[a * n_ + b]; }

  const std::array<int, K> &block(int id) const { return blocks_[id]; }

  void add(const std::array<int, K> &b) {
    int id = static_cast<int>(blocks_.size());
    blocks_.push_back(b);
    mark(b, id);
  }

  void remove(int id) {
    mark(blocks_[id], -1);
    int last = static_cast<int>(blocks_.size()) - 1;
    if (id != last) {
      blocks_[id] = blocks_[last];
      mark(blocks_[id], id);
    }
    blocks_.pop_back();
  }

  Design to_design() const {
    Design d{n_, {}};
    for (const auto &b : blocks_)
      d.blocks.emplace_back(b.begin(), b.end());
    canonicalize(d);
    return d;
  }

private:
  void mark(const std::array<int, K> &b, int id) {
    for (std::size_t i = 0; i < K; ++i)
      for (std::size_t j = i + 1; j < K; ++j) {
        owner_[b[i] * n_ + b[j]] = id;
        owner_[b[j] * n_ + b[i]] = id;
      }
  }

  int n_;
  std::vector<int> owner_;
  std::vector<std::array<int, K>> blocks_;
};

inline int nth_set_bit(VertexMask m, std::uint64_t k) {
  for (; k > 0; --k)
    m &= m - 1;
  return std::countr_zero(m);
}

// Decodes index k in [0, C(m,2)) into the pair (i, j), i < j < m.
inline std::pair<int, int> nth_pair(std::uint64_t k, int m) {
  for (int i = 0; i < m; ++i) {
    std::uint64_t row = static_cast<std::uint64_t>(m - 1 - i);
    if (k < row)
      return {i, i + 1 + static_cast<int>(k)};
    k -= row;
  }
  throw std::logic_error("nth_pair: index out of range");
}

inline std::uint64_t choose2(int m) { return m < 2 ? 0 : std::uint64_t(m) * (m - 1) / 2; }

} // namespace detail

struct ClimbOptions {
  std::uint64_t max_iterations = default_max_iterations;
  /// Re-checks the lambda = 1 invariant from scratch after every move.
  bool check_invariants = false;
};

/// Stinson's hill climb for an STS(n). Each step picks a point x and two live
/// pairs {x,y}, {x,z}, uniformly over all such choices. If {y,z} is live the
/// block {x,y,z} is added; otherwise the block {w,y,z} is replaced by
/// {x,y,z} and the pairs {w,y}, {w,z} return to the live set.
inline Design stinson_sts(int n, RngSpec rng_spec, ClimbOptions opts = {}) {
  if (n < 1 || n > max_vertices || (n % 6 != 1 && n % 6 != 3))
    throw InputError("stinson_sts: n must be 1 or 3 mod 6 (and at most 64), got " + std::to_string(n));
  if (opts.max_iterations == 0)
    throw InputError("stinson_sts: max_iterations must be positive");
  SeededRng rng(rng_spec.seed);
  std::vector<VertexMask> live(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j)
        live[i] |= VertexMask{1} << j;
  detail::BlockStore<3> store(n);
  auto kill = [&](int a, int b) {
    live[a] &= ~(VertexMask{1} << b);
    live[b] &= ~(VertexMask{1} << a);
  };
  auto revive = [&](int a, int b) {
    live[a] |= VertexMask{1} << b;
    live[b] |= VertexMask{1} << a;
  };

  for (std::uint64_t iter = 0;; ++iter) {
    std::uint64_t total = 0;
    for (int x = 0; x < n; ++x)
      total += detail::choose2(std::popcount(live[x]));
    if (total == 0)
      break;
    if (iter >= opts.max_iterations)
      throw InconclusiveError("stinson_sts: iteration cap reached");
    std::uint64_t pick = rng.below(total);
    int x = 0;
    for (;; ++x) {
      std::uint64_t here = detail::choose2(std::popcount(live[x]));
      if (pick < here)
        break;
      pick -= here;
    }
    auto [yi, zi] = detail::nth_pair(pick, std::popcount(live[x]));
    int y = detail::nth_set_bit(live[x], yi);
    int z = detail::nth_set_bit(live[x], zi);
    kill(x, y);
    kill(x, z);
    if ((live[y] >> z) & 1U) {
      kill(y, z);
    } else {
      int id = store.owner(y, z);
      auto old = store.block(id);
      int w = old[0] + old[1] + old[2] - y - z;
      store.remove(id);
      revive(w, y);
      revive(w, z);
    }
    store.add({x, y, z});
    if (opts.check_invariants && !is_partial_linear_space(store.to_design()))
      throw std::logic_error("stinson_sts: pair covered twice");
  }
  return store.to_design();
}

inline Design stinson_sts(int n, RngSpec rng, std::uint64_t max_iterations) {
  return stinson_sts(n, rng, ClimbOptions{max_iterations, false});
}

struct FourResult {
  Design design;
  StructureReport report;
  std::uint64_t iterations = 0;
};

/// Hill climb for block size 4. Each step picks two overlapping live triples
/// {x,y,z}, {x,y,w} uniformly over all such choices (an uncovered pair {x,y}
/// with two common uncovered neighbours). If {z,w} is uncovered the block
/// {x,y,z,w} is added. Otherwise the block holding {z,w} is removed, its other
/// five pairs return to the uncovered set, and {x,y,z,w} takes its place. The
/// climb stops when no overlapping live triples remain.
inline FourResult stinson_four(int n, RngSpec rng_spec, ClimbOptions opts = {}) {
  if (n < 1 || n > max_vertices)
    throw InputError("stinson_four: n must be in [1, 64], got " + std::to_string(n));
  if (opts.max_iterations == 0)
    throw InputError("stinson_four: max_iterations must be positive");
  SeededRng rng(rng_spec.seed);
  std::vector<VertexMask> uncovered(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j)
        uncovered[i] |= VertexMask{1} << j;
  detail::BlockStore<4> store(n);
  auto cover = [&](const std::array<int, 4> &b, bool covered) {
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        if (covered) {
          uncovered[b[i]] &= ~(VertexMask{1} << b[j]);
          uncovered[b[j]] &= ~(VertexMask{1} << b[i]);
        } else {
          uncovered[b[i]] |= VertexMask{1} << b[j];
          uncovered[b[j]] |= VertexMask{1} << b[i];
        }
      }
  };

  std::uint64_t iter = 0;
  for (;; ++iter) {
    std::uint64_t total = 0;
    for (int x = 0; x < n; ++x) {
      VertexMask later = uncovered[x] & ~((VertexMask{2} << x) - 1);
      for (; later; later &= later - 1) {
        int y = std::countr_zero(later);
        total += detail::choose2(std::popcount(uncovered[x] & uncovered[y]));
      }
    }
    if (total == 0)
      break;
    if (iter >= opts.max_iterations)
      throw InconclusiveError("stinson_four: iteration cap reached");
    std::uint64_t pick = rng.below(total);
    int x = -1, y = -1;
    VertexMask common = 0;
    for (int a = 0; a < n && x < 0; ++a) {
      VertexMask later = uncovered[a] & ~((VertexMask{2} << a) - 1);
      for (; later; later &= later - 1) {
        int b = std::countr_zero(later);
        VertexMask c = uncovered[a] & uncovered[b];
        std::uint64_t here = detail::choose2(std::popcount(c));
        if (pick < here) {
          x = a;
          y = b;
          common = c;
          break;
        }
        pick -= here;
      }
    }
    auto [zi, wi] = detail::nth_pair(pick, std::popcount(common));
    int z = detail::nth_set_bit(common, zi);
    int w = detail::nth_set_bit(common, wi);
    if (!((uncovered[z] >> w) & 1U)) {
      int id = store.owner(z, w);
      auto old = store.block(id);
      store.remove(id);
      cover(old, false);
    }
    std::array<int, 4> block{x, y, z, w};
    store.add(block);
    cover(block, true);
    if (opts.check_invariants && !is_partial_linear_space(store.to_design()))
      throw std::logic_error("stinson_four: pair covered twice");
  }
  FourResult out;
  out.design = store.to_design();
  out.report = classify_structure(out.design);
  out.iterations = iter;
  return out;
}

inline FourResult stinson_four(int n, RngSpec rng, std::uint64_t max_iterations) {
  return stinson_four(n, rng, ClimbOptions{max_iterations, false});
}

} // namespace dfds

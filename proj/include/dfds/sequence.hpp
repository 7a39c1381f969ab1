#pragma once

// Degree sequences and enumeration of the sequences meeting the arithmetic
// constraints: every degree in [3, n-1] and divisible by 3, degree sum
// divisible by 12.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "dfds/errors.hpp"

namespace dfds {

/// Multiset of vertex degrees, always held in non-increasing order.
class DegreeSequence {
public:
  DegreeSequence() = default;

  /// Canonicalizes: the input is sorted into non-increasing order.
  explicit DegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees)) {
    std::sort(degrees_.begin(), degrees_.end(), std::greater<>());
  }

  DegreeSequence(std::initializer_list<int> degrees)
      : DegreeSequence(std::vector<int>(degrees)) {}

  std::size_t size() const { return degrees_.size(); }
  bool empty() const { return degrees_.empty(); }
  int operator[](std::size_t i) const { return degrees_[i]; }
  auto begin() const { return degrees_.begin(); }
  auto end() const { return degrees_.end(); }
  const std::vector<int> &values() const { return degrees_; }

  long sum() const { return std::accumulate(degrees_.begin(), degrees_.end(), 0L); }

  /// Removes zero entries (isolated vertices).
  DegreeSequence without_zeros() const {
    std::vector<int> nz;
    for (int d : degrees_)
      if (d != 0)
        nz.push_back(d);
    return DegreeSequence(std::move(nz));
  }

  friend bool operator==(const DegreeSequence &, const DegreeSequence &) = default;
  friend auto operator<=>(const DegreeSequence &a, const DegreeSequence &b) {
    return a.degrees_ <=> b.degrees_;
  }

private:
  std::vector<int> degrees_;
};

/// Space separated, e.g. "9 6 6 3 3 3 3 3 3 3 3 3".
inline std::string to_string(const DegreeSequence &seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i)
      out += ' ';
    out += std::to_string(seq[i]);
  }
  return out;
}

/// Parses whitespace (or comma) separated integers. Negative entries are
/// rejected; order is canonicalized.
inline DegreeSequence parse_sequence(const std::string &text) {
  std::string cleaned = text;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream in(cleaned);
  std::vector<int> values;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception &) {
      throw InputError("sequence: not an integer: '" + token + "'");
    }
    if (used != token.size() || v < 0)
      throw InputError("sequence: invalid entry '" + token + "'");
    values.push_back(v);
  }
  return DegreeSequence(std::move(values));
}

struct ArithmeticConstraints {
  int n = 0;
  int min_degree = 3;
  int max_degree = 0;
  int degree_modulus = 3;
  int sum_modulus = 12;

  static ArithmeticConstraints for_order(int n) {
    ArithmeticConstraints c;
    c.n = n;
    c.max_degree = n - 1;
    return c;
  }

  bool admits_degree(int d) const {
    return d >= min_degree && d <= max_degree && d % degree_modulus == 0;
  }
};

inline bool satisfies_arithmetic(const DegreeSequence &seq, const ArithmeticConstraints &c) {
  if (static_cast<int>(seq.size()) != c.n)
    return false;
  for (int d : seq)
    if (!c.admits_degree(d))
      return false;
  return seq.sum() % c.sum_modulus == 0;
}

inline bool satisfies_arithmetic(const DegreeSequence &seq, int n) {
  return satisfies_arithmetic(seq, ArithmeticConstraints::for_order(n));
}

/// Streams every sequence meeting the constraints in decreasing
/// lexicographic order. The visitor returns false to stop early.
/// Returns the number of sequences visited.
inline std::size_t for_each_arithmetic(const ArithmeticConstraints &c,
                                       const std::function<bool(const DegreeSequence &)> &visit) {
  if (c.n < 1 || c.min_degree <= 0 || c.degree_modulus <= 0 || c.sum_modulus <= 0)
    return 0;
  std::vector<int> domain; // descending
  for (int d = c.max_degree; d >= c.min_degree; --d)
    if (d % c.degree_modulus == 0)
      domain.push_back(d);
  if (domain.empty())
    return 0;

  std::vector<int> current(c.n);
  std::size_t visited = 0;
  bool stopped = false;
  // pos: next slot; first: smallest domain index allowed (keeps order non-increasing).
  std::function<void(int, std::size_t, long)> descend = [&](int pos, std::size_t first, long sum) {
    if (stopped)
      return;
    if (pos == c.n) {
      if (sum % c.sum_modulus == 0) {
        ++visited;
        if (!visit(DegreeSequence(current)))
          stopped = true;
      }
      return;
    }
    for (std::size_t k = first; k < domain.size() && !stopped; ++k) {
      current[pos] = domain[k];
      descend(pos + 1, k, sum + domain[k]);
    }
  };
  descend(0, 0, 0);
  return visited;
}

inline std::vector<DegreeSequence> enumerate_arithmetic(const ArithmeticConstraints &c) {
  std::vector<DegreeSequence> out;
  for_each_arithmetic(c, [&](const DegreeSequence &s) {
    out.push_back(s);
    return true;
  });
  return out;
}

inline std::vector<DegreeSequence> enumerate_arithmetic(int n) {
  return enumerate_arithmetic(ArithmeticConstraints::for_order(n));
}

} // namespace dfds

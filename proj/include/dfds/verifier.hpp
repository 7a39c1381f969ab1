#pragma once

// Witness verification from the serialized form. This header re-parses the
// text itself and checks everything with literal loops over the matrix; it
// does not use the Graph type or any of the search code.

#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace dfds {

struct VerificationReport {
  bool parsed_ok = false;
  bool simple_ok = false;
  bool diamond_free_ok = false;
  bool degrees_match_ok = false;
  bool arithmetic_ok = false;
  std::optional<std::string> failure_detail;

  bool passed() const { return simple_ok && diamond_free_ok && degrees_match_ok && arithmetic_ok; }
};

namespace verify_detail {

using Matrix = std::vector<std::vector<int>>;

inline bool parse_matrix_text(const std::string &text, Matrix &m, std::string &why) {
  std::istringstream in(text);
  long n = -1;
  if (!(in >> n) || n < 0 || n > 4096) {
    why = "missing or invalid vertex count";
    return false;
  }
  m.assign(n, std::vector<int>(n, 0));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      long v;
      if (!(in >> v)) {
        why = "truncated matrix at row " + std::to_string(i) + ", column " + std::to_string(j);
        return false;
      }
      if (v != 0 && v != 1) {
        why = "non 0/1 entry at row " + std::to_string(i) + ", column " + std::to_string(j);
        return false;
      }
      m[i][j] = static_cast<int>(v);
    }
  std::string extra;
  if (in >> extra) {
    why = "trailing data after matrix";
    return false;
  }
  return true;
}

inline bool parse_matrix_json(const std::string &text, Matrix &m, std::string &why) {
  try {
    auto doc = nlohmann::json::parse(text);
    long n = doc.at("n").get<long>();
    if (n < 0 || n > 4096) {
      why = "invalid vertex count";
      return false;
    }
    m.assign(n, std::vector<int>(n, 0));
    for (const auto &e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2) {
        why = "edge is not a pair";
        return false;
      }
      long i = e[0].get<long>(), j = e[1].get<long>();
      if (i < 0 || j < 0 || i >= n || j >= n) {
        why = "edge endpoint out of range";
        return false;
      }
      // Loops and repeated edges are recorded, not rejected, so the
      // simplicity check reports them.
      m[i][j] += 1;
      if (i != j)
        m[j][i] += 1;
    }
    return true;
  } catch (const nlohmann::json::exception &ex) {
    why = std::string("json: ") + ex.what();
    return false;
  }
}

} // namespace verify_detail

/// Checks a serialized witness (adjacency-matrix text or graph JSON) against
/// a degree sequence for an order-n graph. Never throws on malformed input;
/// parsed_ok is false instead.
inline VerificationReport verify_witness(const std::string &serialized, const std::vector<int> &sequence,
                                         int n) {
  using verify_detail::Matrix;
  VerificationReport rep;
  Matrix m;
  std::string why;
  std::size_t first = serialized.find_first_not_of(" \t\r\n");
  bool is_json = first != std::string::npos && serialized[first] == '{';
  bool ok = is_json ? verify_detail::parse_matrix_json(serialized, m, why)
                    : verify_detail::parse_matrix_text(serialized, m, why);
  if (!ok) {
    rep.failure_detail = "malformed input: " + why;
    return rep;
  }
  const long order = static_cast<long>(m.size());
  if (order != n || static_cast<long>(sequence.size()) != n) {
    rep.failure_detail = "dimension mismatch: matrix order " + std::to_string(order) + ", sequence length " +
                         std::to_string(sequence.size()) + ", expected n " + std::to_string(n);
    return rep;
  }
  rep.parsed_ok = true;
  std::vector<std::string> problems;

  rep.simple_ok = true;
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      if (i == j && m[i][j] != 0) {
        rep.simple_ok = false;
        problems.push_back("loop at vertex " + std::to_string(i));
      } else if (m[i][j] != m[j][i] || m[i][j] > 1) {
        rep.simple_ok = false;
        if (i < j)
          problems.push_back("cell (" + std::to_string(i) + "," + std::to_string(j) + ") not simple/symmetric");
      }
    }

  // Every 4-subset, all six pairs counted.
  rep.diamond_free_ok = true;
  for (long a = 0; a < n && rep.diamond_free_ok; ++a)
    for (long b = a + 1; b < n && rep.diamond_free_ok; ++b)
      for (long c = b + 1; c < n && rep.diamond_free_ok; ++c)
        for (long d = c + 1; d < n; ++d) {
          int edges = m[a][b] + m[a][c] + m[a][d] + m[b][c] + m[b][d] + m[c][d];
          if (edges > 4) {
            rep.diamond_free_ok = false;
            problems.push_back("diamond on {" + std::to_string(a) + "," + std::to_string(b) + "," +
                               std::to_string(c) + "," + std::to_string(d) + "}");
            break;
          }
        }

  std::vector<int> counted;
  for (long i = 0; i < n; ++i) {
    int row = 0;
    for (long j = 0; j < n; ++j)
      row += m[i][j];
    counted.push_back(row);
  }
  std::vector<int> expected = sequence;
  // insertion sorts, descending
  for (auto *v : {&counted, &expected})
    for (std::size_t i = 1; i < v->size(); ++i)
      for (std::size_t j = i; j > 0 && (*v)[j - 1] < (*v)[j]; --j)
        std::swap((*v)[j - 1], (*v)[j]);
  rep.degrees_match_ok = counted == expected;
  if (!rep.degrees_match_ok)
    problems.push_back("degree sequence of the matrix differs from the claimed sequence");

  rep.arithmetic_ok = true;
  long total = 0;
  for (int d : sequence) {
    total += d;
    if (d <= 0 || d % 3 != 0 || d > n - 1)
      rep.arithmetic_ok = false;
  }
  if (total % 12 != 0)
    rep.arithmetic_ok = false;
  if (!rep.arithmetic_ok)
    problems.push_back("sequence violates the arithmetic constraints");

  if (!problems.empty()) {
    std::string detail;
    for (std::size_t i = 0; i < problems.size() && i < 8; ++i)
      detail += (i ? "; " : "") + problems[i];
    rep.failure_detail = detail;
  }
  return rep;
}

} // namespace dfds

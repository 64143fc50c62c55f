/**
 * @file graph.hpp
 * @brief Simple undirected graphs on at most 64 vertices, one bit row per vertex.
 */
#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "permutation.hpp"

namespace vtmotion {

inline constexpr std::size_t kMaxVertices = 64;

using Row = std::uint64_t;

inline Row bit(std::size_t v) { return Row{1} << v; }

inline Row low_bits(std::size_t n) { return n >= 64 ? ~Row{0} : (Row{1} << n) - 1; }

/// Calls f(v) for every set bit of `row` in increasing order.
template <class F>
void for_each_bit(Row row, F&& f) {
  while (row) {
    f(static_cast<std::size_t>(std::countr_zero(row)));
    row &= row - 1;
  }
}

class Graph {
 public:
  Graph() = default;

  explicit Graph(std::size_t n) : adj_(n, 0) {
    if (n > kMaxVertices) raise(ErrorKind::cap_exceeded, "graphs are limited to 64 vertices");
  }

  Graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  std::size_t order() const noexcept { return adj_.size(); }

  std::size_t size() const noexcept {
    std::size_t twice = 0;
    for (Row r : adj_) twice += static_cast<std::size_t>(std::popcount(r));
    return twice / 2;
  }

  bool adjacent(std::size_t u, std::size_t v) const { return (adj_[u] >> v) & 1U; }

  void add_edge(std::size_t u, std::size_t v) {
    check_pair(u, v);
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
  }

  void remove_edge(std::size_t u, std::size_t v) {
    check_pair(u, v);
    adj_[u] &= ~bit(v);
    adj_[v] &= ~bit(u);
  }

  Row neighbors(std::size_t v) const { return adj_[v]; }
  std::size_t degree(std::size_t v) const { return static_cast<std::size_t>(std::popcount(adj_[v])); }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < order(); ++u) {
      for_each_bit(adj_[u] & ~low_bits(u + 1), [&](std::size_t v) { out.emplace_back(u, v); });
    }
    return out;
  }

  bool is_regular() const {
    for (std::size_t v = 1; v < order(); ++v) {
      if (degree(v) != degree(0)) return false;
    }
    return true;
  }

  /// Image row of `row` under the vertex map g.
  static Row map_row(Row row, const Permutation& g) {
    Row out = 0;
    for_each_bit(row, [&](std::size_t v) { out |= bit(g(static_cast<Point>(v))); });
    return out;
  }

  bool is_automorphism(const Permutation& g) const {
    if (g.degree() != order()) return false;
    for (std::size_t v = 0; v < order(); ++v) {
      if (map_row(adj_[v], g) != adj_[g(static_cast<Point>(v))]) return false;
    }
    return true;
  }

  /// The graph with vertex v renamed g(v).
  Graph relabel(const Permutation& g) const {
    if (g.degree() != order()) raise(ErrorKind::invalid_input, "relabelling has the wrong degree");
    Graph out(order());
    for (std::size_t v = 0; v < order(); ++v) out.adj_[g(static_cast<Point>(v))] = map_row(adj_[v], g);
    return out;
  }

  /// Subgraph induced on `vertices`; vertex i of the result is vertices[i].
  Graph induced(const std::vector<std::size_t>& vertices) const {
    Graph out(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      for (std::size_t j = i + 1; j < vertices.size(); ++j) {
        if (adjacent(vertices[i], vertices[j])) out.add_edge(i, j);
      }
    }
    return out;
  }

  const std::vector<Row>& rows() const noexcept { return adj_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_pair(std::size_t u, std::size_t v) const {
    if (u >= order() || v >= order()) raise(ErrorKind::invalid_input, "vertex out of range");
    if (u == v) raise(ErrorKind::invalid_input, "loops are not allowed");
  }

  std::vector<Row> adj_;
};

inline Graph complement(const Graph& g) {
  Graph out(g.order());
  for (std::size_t u = 0; u < g.order(); ++u) {
    for (std::size_t v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  Row seen = 1, frontier = 1;
  while (frontier) {
    Row next = 0;
    for_each_bit(frontier, [&](std::size_t v) { next |= g.neighbors(v); });
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == low_bits(g.order());
}

/// Number of triangles, used as a cheap invariant in tests.
inline std::size_t triangle_count(const Graph& g) {
  std::size_t count = 0;
  for (auto [u, v] : g.edges()) {
    count += static_cast<std::size_t>(std::popcount(g.neighbors(u) & g.neighbors(v) & ~low_bits(v + 1)));
  }
  return count;
}

/// A perfect matching of the vertex set into unordered pairs.
class PairPartition {
 public:
  PairPartition() = default;

  PairPartition(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> pairs) : partner_(n, n) {
    if (n % 2 != 0) raise(ErrorKind::invalid_input, "a pair partition needs an even number of vertices");
    for (auto& [a, b] : pairs) {
      if (a >= n || b >= n || a == b) raise(ErrorKind::invalid_input, "invalid pair in matching");
      if (partner_[a] != n || partner_[b] != n) raise(ErrorKind::invalid_input, "pairs of a matching must be disjoint");
      if (a > b) std::swap(a, b);
      partner_[a] = b;
      partner_[b] = a;
    }
    if (pairs.size() * 2 != n) raise(ErrorKind::invalid_input, "matching does not cover every vertex");
    std::sort(pairs.begin(), pairs.end());
    pairs_ = std::move(pairs);
  }

  std::size_t order() const noexcept { return partner_.size(); }
  const std::vector<std::pair<std::size_t, std::size_t>>& pairs() const noexcept { return pairs_; }
  std::size_t partner(std::size_t v) const { return partner_[v]; }
  bool is_pair(std::size_t a, std::size_t b) const { return a < order() && partner_[a] == b; }

  /// Whether g maps pairs onto pairs.
  bool preserved_by(const Permutation& g) const {
    for (auto [a, b] : pairs_) {
      if (!is_pair(g(static_cast<Point>(a)), g(static_cast<Point>(b)))) return false;
    }
    return true;
  }

  friend bool operator==(const PairPartition&, const PairPartition&) = default;

 private:
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  std::vector<std::size_t> partner_;
};

struct InfParams {
  int lambda = 1;
  int kappa = 0;
  std::size_t m = 2;

  void validate() const {
    if ((lambda != 0 && lambda != 1) || (kappa != 0 && kappa != 1)) {
      raise(ErrorKind::invalid_input, "lambda and kappa must be 0 or 1");
    }
    if (m < 2) raise(ErrorKind::invalid_input, "Inf needs m >= 2");
  }
};

}  // namespace vtmotion

/**
 * @file graph_constructions.hpp
 * @brief Named graph families, products, Inf graphs, quotients and invariant graphs of a group.
 *
 * Indexing is fixed so results can be compared for equality:
 *   lex(D, T):       vertex (delta, gamma) is gamma * |D| + delta
 *   cartesian(A, B): vertex (a, b) is a * |B| + b
 *   inf(..., S, ...): vertex (alpha, i) is alpha * m + i
 */
#pragma once

#include <charconv>
#include <map>
#include <set>

#include "group_io.hpp"
#include "graph.hpp"
#include "perm_group.hpp"

namespace vtmotion {

inline Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

inline Graph empty_graph(std::size_t n) { return Graph(n); }

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) raise(ErrorKind::invalid_input, "a cycle needs at least 3 vertices");
  Graph g(n);
  for (std::size_t v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

inline Graph path_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

/// Connection set reduced to {1..floor(n/2)}; s and n-s are the same jump.
inline std::vector<std::size_t> canonical_connection_set(std::size_t n, const std::vector<std::size_t>& jumps) {
  std::set<std::size_t> out;
  for (std::size_t s : jumps) {
    if (n == 0 || s % n == 0) raise(ErrorKind::invalid_input, "connection set must avoid 0 mod n");
    const std::size_t r = s % n;
    out.insert(std::min(r, n - r));
  }
  return {out.begin(), out.end()};
}

inline Graph circulant_graph(std::size_t n, const std::vector<std::size_t>& jumps) {
  Graph g(n);
  for (std::size_t s : canonical_connection_set(n, jumps)) {
    for (std::size_t v = 0; v < n; ++v) g.add_edge(v, (v + s) % n);
  }
  return g;
}

inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  Graph g(a + b);
  for (std::size_t u = 0; u < a; ++u) {
    for (std::size_t v = 0; v < b; ++v) g.add_edge(u, a + v);
  }
  return g;
}

/// mK2 on vertices 2i, 2i+1.
inline Graph matching_graph(std::size_t m) {
  Graph g(2 * m);
  for (std::size_t i = 0; i < m; ++i) g.add_edge(2 * i, 2 * i + 1);
  return g;
}

inline Graph petersen_graph() {
  Graph g(10);
  for (std::size_t i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return g;
}

/// vertex (delta, gamma) = gamma * |D| + delta; adjacent iff
/// (delta1 ~ delta2 and gamma1 = gamma2) or gamma1 ~ gamma2.
inline Graph lex_product(const Graph& delta, const Graph& theta) {
  const std::size_t d = delta.order(), t = theta.order();
  Graph g(d * t);
  for (std::size_t g1 = 0; g1 < t; ++g1) {
    for (std::size_t d1 = 0; d1 < d; ++d1) {
      for (std::size_t g2 = g1; g2 < t; ++g2) {
        for (std::size_t d2 = 0; d2 < d; ++d2) {
          const std::size_t u = g1 * d + d1, v = g2 * d + d2;
          if (u >= v) continue;
          if ((g1 == g2 && delta.adjacent(d1, d2)) || (g1 != g2 && theta.adjacent(g1, g2))) g.add_edge(u, v);
        }
      }
    }
  }
  return g;
}

inline Graph cartesian_product(const Graph& a, const Graph& b) {
  const std::size_t na = a.order(), nb = b.order();
  Graph g(na * nb);
  for (std::size_t a1 = 0; a1 < na; ++a1) {
    for (std::size_t b1 = 0; b1 < nb; ++b1) {
      for (std::size_t b2 = b1 + 1; b2 < nb; ++b2) {
        if (b.adjacent(b1, b2)) g.add_edge(a1 * nb + b1, a1 * nb + b2);
      }
      for (std::size_t a2 = a1 + 1; a2 < na; ++a2) {
        if (a.adjacent(a1, a2)) g.add_edge(a1 * nb + b1, a2 * nb + b1);
      }
    }
  }
  return g;
}

/// K_m box K_2; vertex (i, s) is 2i + s, so the matching pairs are {2i, 2i+1}.
inline Graph prism_graph(std::size_t m) { return cartesian_product(complete_graph(m), complete_graph(2)); }

inline Graph coprism_graph(std::size_t m) { return complement(prism_graph(m)); }

/// Pairs {2i, 2i+1}. On a cycle these are every second edge.
inline PairPartition alternate_matching(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; 2 * i + 1 < n; ++i) pairs.emplace_back(2 * i, 2 * i + 1);
  return PairPartition(n, std::move(pairs));
}

/// Pairs {i, i + n/2}.
inline PairPartition antipodal_matching(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n / 2; ++i) pairs.emplace_back(i, i + n / 2);
  return PairPartition(n, std::move(pairs));
}

/// All perfect matchings of {0..n-1}, each listed once.
inline std::vector<PairPartition> all_perfect_matchings(std::size_t n) {
  std::vector<PairPartition> out;
  if (n % 2 != 0) return out;
  std::vector<std::pair<std::size_t, std::size_t>> current;
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self) -> void {
    std::size_t first = 0;
    while (first < n && used[first]) ++first;
    if (first == n) {
      out.emplace_back(n, current);
      return;
    }
    used[first] = 1;
    for (std::size_t v = first + 1; v < n; ++v) {
      if (used[v]) continue;
      used[v] = 1;
      current.emplace_back(first, v);
      self(self);
      current.pop_back();
      used[v] = 0;
    }
    used[first] = 0;
  };
  rec(rec);
  return out;
}

/// Inf(lambda, kappa, Sigma, P, m) on vertex alpha * m + i.
inline Graph inf_graph(const InfParams& params, const Graph& sigma, const PairPartition& pairs) {
  params.validate();
  const std::size_t n = sigma.order(), m = params.m;
  if (pairs.order() != n) raise(ErrorKind::invalid_input, "matching does not fit the graph");
  Graph g(n * m);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t b = a; b < n; ++b) {
        for (std::size_t j = 0; j < m; ++j) {
          const std::size_t u = a * m + i, v = b * m + j;
          if (u >= v) continue;
          bool edge;
          if (a == b) {
            edge = params.kappa == 1;
          } else if (pairs.is_pair(a, b)) {
            edge = params.lambda == 1 ? i == j : i != j;
          } else {
            edge = sigma.adjacent(a, b);
          }
          if (edge) g.add_edge(u, v);
        }
      }
    }
  }
  return g;
}

/// PX(r,1) = lex(2K1, C_r).
inline Graph px_graph(std::size_t r) { return lex_product(empty_graph(2), cycle_graph(r)); }

/// SPX(r,1) = Inf(1, 0, C_2r, every second edge, 2).
inline Graph spx_graph(std::size_t r) {
  return inf_graph(InfParams{1, 0, 2}, cycle_graph(2 * r), alternate_matching(2 * r));
}

/// Checks that `parts` partitions {0..n-1} into nonempty sets.
inline void validate_partition(std::size_t n, const std::vector<std::vector<std::size_t>>& parts) {
  std::vector<char> seen(n, 0);
  std::size_t total = 0;
  for (const auto& part : parts) {
    if (part.empty()) raise(ErrorKind::invalid_input, "partition has an empty part");
    for (std::size_t v : part) {
      if (v >= n || seen[v]) raise(ErrorKind::invalid_input, "parts overlap or leave the vertex range");
      seen[v] = 1;
    }
    total += part.size();
  }
  if (total != n) raise(ErrorKind::invalid_input, "partition does not cover every vertex");
}

/// Parts become vertices, adjacent iff some edge joins them; no loops.
inline Graph quotient_graph(const Graph& g, const std::vector<std::vector<std::size_t>>& parts) {
  validate_partition(g.order(), parts);
  std::vector<Row> masks;
  for (const auto& part : parts) {
    Row mask = 0;
    for (std::size_t v : part) mask |= bit(v);
    masks.push_back(mask);
  }
  Graph q(parts.size());
  for (std::size_t a = 0; a < parts.size(); ++a) {
    Row reach = 0;
    for (std::size_t v : parts[a]) reach |= g.neighbors(v);
    for (std::size_t b = a + 1; b < parts.size(); ++b) {
      if (reach & masks[b]) q.add_edge(a, b);
    }
  }
  return q;
}

/// Orbits of a group on unordered pairs; pairs inside each orbit and the orbits
/// themselves are sorted.
inline std::vector<std::vector<std::pair<std::size_t, std::size_t>>> pair_orbits(const PermGroup& Z) {
  const std::size_t n = Z.degree();
  if (n > kMaxVertices) raise(ErrorKind::cap_exceeded, "graphs are limited to 64 vertices");
  auto index = [n](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return static_cast<Point>(a * n + b);
  };
  DisjointSets ds(n * n);
  for (const auto& g : Z.generators()) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) ds.unite(index(a, b), index(g(static_cast<Point>(a)), g(static_cast<Point>(b))));
    }
  }
  std::map<std::uint32_t, std::vector<std::pair<std::size_t, std::size_t>>> by_root;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) by_root[ds.find(index(a, b))].emplace_back(a, b);
  }
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> out;
  for (auto& [root, pairs] : by_root) out.push_back(std::move(pairs));
  std::sort(out.begin(), out.end());
  return out;
}

/// One graph per union of pair orbits; bit i of the index selects orbit i.
inline std::vector<Graph> invariant_graphs_under(const PermGroup& Z, const Limits& limits = default_limits()) {
  const auto orbits = pair_orbits(Z);
  if (orbits.size() > limits.pair_orbit_cap) {
    raise(ErrorKind::cap_exceeded, std::to_string(orbits.size()) + " pair orbits exceed the cap of " +
                                       std::to_string(limits.pair_orbit_cap));
  }
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << orbits.size()); ++mask) {
    Graph g(Z.degree());
    for (std::size_t i = 0; i < orbits.size(); ++i) {
      if ((mask >> i) & 1U) {
        for (auto [a, b] : orbits[i]) g.add_edge(a, b);
      }
    }
    out.push_back(std::move(g));
  }
  return out;
}

namespace detail {

inline std::size_t parse_size(std::string_view text, const char* what) {
  text = trim(text);
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    raise(ErrorKind::invalid_input, std::string("expected a number for ") + what + ", got '" + std::string(text) + "'");
  }
  return value;
}

inline std::vector<std::size_t> parse_size_list(std::string_view text, const char* what) {
  std::vector<std::size_t> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    out.push_back(parse_size(text.substr(0, comma), what));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace detail

/// Parses family specs such as "cycle:6", "circulant:7:1,2", "prism:3", "petersen".
inline Graph graph_from_spec(std::string_view spec) {
  spec = trim(spec);
  const auto colon = spec.find(':');
  const std::string name(spec.substr(0, colon));
  const std::string_view rest = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  auto arg = [&]() { return detail::parse_size(rest, name.c_str()); };
  if (name == "complete") return complete_graph(arg());
  if (name == "empty") return empty_graph(arg());
  if (name == "cycle") return cycle_graph(arg());
  if (name == "path") return path_graph(arg());
  if (name == "matching") return matching_graph(arg());
  if (name == "bipartite") return complete_bipartite(arg(), arg());
  if (name == "prism") return prism_graph(arg());
  if (name == "coprism") return coprism_graph(arg());
  if (name == "px") return px_graph(arg());
  if (name == "spx") return spx_graph(arg());
  if (name == "petersen" && rest.empty()) return petersen_graph();
  if (name == "circulant") {
    const auto c2 = rest.find(':');
    if (c2 == std::string_view::npos) raise(ErrorKind::invalid_input, "circulant spec is circulant:N:S1,S2,...");
    return circulant_graph(detail::parse_size(rest.substr(0, c2), "circulant order"),
                           detail::parse_size_list(rest.substr(c2 + 1), "connection set"));
  }
  raise(ErrorKind::invalid_input, "unknown graph family '" + std::string(spec) + "'");
}

/// "alternate", "antipodal", or explicit 1-indexed pairs "1-2,3-4".
inline PairPartition matching_from_spec(std::string_view spec, std::size_t n) {
  spec = trim(spec);
  if (spec == "alternate") return alternate_matching(n);
  if (spec == "antipodal") return antipodal_matching(n);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  while (!spec.empty()) {
    const auto comma = spec.find(',');
    const std::string_view item = spec.substr(0, comma);
    const auto dash = item.find('-');
    if (dash == std::string_view::npos) raise(ErrorKind::invalid_input, "matching pairs are written a-b");
    const std::size_t a = detail::parse_size(item.substr(0, dash), "matching");
    const std::size_t b = detail::parse_size(item.substr(dash + 1), "matching");
    if (a == 0 || b == 0) raise(ErrorKind::invalid_input, "matching vertices are 1-indexed");
    pairs.emplace_back(a - 1, b - 1);
    if (comma == std::string_view::npos) break;
    spec.remove_prefix(comma + 1);
  }
  return PairPartition(n, std::move(pairs));
}

}  // namespace vtmotion

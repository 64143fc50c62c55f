/**
 * @file automorphisms.hpp
 * @brief Automorphism groups and isomorphisms of graphs by individualization and
 * equitable refinement.
 *
 * The search follows the leftmost path of the search tree to a discrete partition,
 * then works up that path: at each level it tries every vertex of the target cell
 * that is not yet in the orbit of the path vertex under the automorphisms already
 * found, and searches the subtree for a leaf that yields an automorphism. Every
 * subtree is either exhausted or produces a generator, so the result generates
 * the full group. Pruning uses only refinement invariants and orbits of known
 * automorphisms fixing the current prefix, both of which are sound.
 */
#pragma once

#include <functional>

#include "graph.hpp"
#include "group_search.hpp"

namespace vtmotion {

/// Several adjacency layers on one vertex set plus vertex colours. An automorphism
/// must preserve every layer and every colour.
struct ColoredGraph {
  std::size_t n = 0;
  std::vector<std::vector<Row>> layers;
  std::vector<std::uint32_t> colors;

  explicit ColoredGraph(const Graph& g) : n(g.order()), layers{g.rows()}, colors(g.order(), 0) {}

  void add_layer(const Graph& g) {
    if (g.order() != n) raise(ErrorKind::invalid_input, "layer has the wrong order");
    layers.push_back(g.rows());
  }

  bool is_automorphism(const Permutation& g) const {
    if (g.degree() != n) return false;
    for (std::size_t v = 0; v < n; ++v) {
      if (colors[g(static_cast<Point>(v))] != colors[v]) return false;
    }
    for (const auto& layer : layers) {
      for (std::size_t v = 0; v < n; ++v) {
        if (Graph::map_row(layer[v], g) != layer[g(static_cast<Point>(v))]) return false;
      }
    }
    return true;
  }

  /// Whether g maps this structure onto `other`.
  bool maps_onto(const Permutation& g, const ColoredGraph& other) const {
    if (g.degree() != n || other.n != n || other.layers.size() != layers.size()) return false;
    for (std::size_t v = 0; v < n; ++v) {
      if (other.colors[g(static_cast<Point>(v))] != colors[v]) return false;
    }
    for (std::size_t l = 0; l < layers.size(); ++l) {
      for (std::size_t v = 0; v < n; ++v) {
        if (Graph::map_row(layers[l][v], g) != other.layers[l][g(static_cast<Point>(v))]) return false;
      }
    }
    return true;
  }
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  std::size_t depth = 0;
};

struct AutResult {
  PermGroup group;
  BigInt order;
  SearchStats stats;
};

namespace detail {

using Cells = std::vector<Row>;

class Refiner {
 public:
  Refiner(const ColoredGraph& g, std::uint64_t node_cap, SearchStats& stats)
      : g_(g), node_cap_(node_cap), stats_(stats) {}

  Cells initial() const {
    std::vector<std::pair<std::uint32_t, std::size_t>> order;
    for (std::size_t v = 0; v < g_.n; ++v) order.emplace_back(g_.colors[v], v);
    std::sort(order.begin(), order.end());
    Cells cells;
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (i == 0 || order[i].first != order[i - 1].first) cells.push_back(0);
      cells.back() |= bit(order[i].second);
    }
    return cells;
  }

  /// Splits cells until every cell has uniform neighbour counts into every other
  /// cell, in every layer. Depends only on the structure, never on labels.
  void refine(Cells& cells) const {
    bool changed = true;
    std::vector<std::pair<std::vector<std::uint32_t>, std::size_t>> keyed;
    while (changed) {
      changed = false;
      for (std::size_t s = 0; s < cells.size(); ++s) {
        const Row splitter = cells[s];
        for (std::size_t c = 0; c < cells.size(); ++c) {
          if (std::popcount(cells[c]) == 1) continue;
          keyed.clear();
          for_each_bit(cells[c], [&](std::size_t v) {
            std::vector<std::uint32_t> key;
            key.reserve(g_.layers.size());
            for (const auto& layer : g_.layers) key.push_back(static_cast<std::uint32_t>(std::popcount(layer[v] & splitter)));
            keyed.emplace_back(std::move(key), v);
          });
          std::sort(keyed.begin(), keyed.end());
          if (keyed.front().first == keyed.back().first) continue;
          Cells parts;
          for (std::size_t i = 0; i < keyed.size(); ++i) {
            if (i == 0 || keyed[i].first != keyed[i - 1].first) parts.push_back(0);
            parts.back() |= bit(keyed[i].second);
          }
          cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
          cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), parts.begin(), parts.end());
          c += parts.size() - 1;
          changed = true;
        }
      }
    }
  }

  /// Cell sizes and the quotient matrix: a labelling-invariant fingerprint.
  std::vector<std::uint32_t> invariant(const Cells& cells) const {
    std::vector<std::uint32_t> out;
    out.reserve(cells.size() * (1 + cells.size() * g_.layers.size()));
    for (Row c : cells) {
      out.push_back(static_cast<std::uint32_t>(std::popcount(c)));
      const std::size_t rep = static_cast<std::size_t>(std::countr_zero(c));
      for (const auto& layer : g_.layers) {
        for (Row d : cells) out.push_back(static_cast<std::uint32_t>(std::popcount(layer[rep] & d)));
      }
    }
    return out;
  }

  static bool discrete(const Cells& cells) {
    return std::all_of(cells.begin(), cells.end(), [](Row c) { return std::popcount(c) == 1; });
  }

  /// First non-singleton cell of maximum size.
  static std::size_t target_cell(const Cells& cells) {
    std::size_t best = cells.size();
    int best_size = 1;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const int s = std::popcount(cells[i]);
      if (s > best_size) {
        best = i;
        best_size = s;
      }
    }
    return best;
  }

  Cells individualize(const Cells& cells, std::size_t cell, std::size_t v) const {
    count_node();
    Cells out;
    out.reserve(cells.size() + 1);
    out.insert(out.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(cell));
    out.push_back(bit(v));
    out.push_back(cells[cell] & ~bit(v));
    out.insert(out.end(), cells.begin() + static_cast<std::ptrdiff_t>(cell) + 1, cells.end());
    refine(out);
    return out;
  }

  static std::vector<Point> leaf_order(const Cells& cells) {
    std::vector<Point> out;
    for (Row c : cells) out.push_back(static_cast<Point>(std::countr_zero(c)));
    return out;
  }

  void count_node() const {
    if (++stats_.nodes > node_cap_) raise(ErrorKind::cap_exceeded, "automorphism search exceeded the node cap");
  }

  const ColoredGraph& graph() const { return g_; }

 private:
  const ColoredGraph& g_;
  std::uint64_t node_cap_;
  SearchStats& stats_;
};

/// The leftmost path: partitions, fingerprints, target cells and path vertices.
struct FirstPath {
  std::vector<Cells> nodes;
  std::vector<std::vector<std::uint32_t>> invariants;
  std::vector<std::size_t> targets;
  std::vector<std::size_t> vertices;
  std::vector<Point> leaf;
};

inline FirstPath first_path(const Refiner& r) {
  FirstPath path;
  Cells cells = r.initial();
  r.refine(cells);
  while (true) {
    path.nodes.push_back(cells);
    path.invariants.push_back(r.invariant(cells));
    if (Refiner::discrete(cells)) break;
    const std::size_t t = Refiner::target_cell(cells);
    const std::size_t v = static_cast<std::size_t>(std::countr_zero(cells[t]));
    path.targets.push_back(t);
    path.vertices.push_back(v);
    cells = r.individualize(cells, t, v);
  }
  path.leaf = Refiner::leaf_order(cells);
  return path;
}

/// Orbits of the subgroup generated by those of `gens` fixing every point of `prefix`.
inline std::vector<std::uint32_t> orbit_labels(std::size_t n, const std::vector<Permutation>& gens,
                                               const std::vector<std::size_t>& prefix) {
  DisjointSets ds(n);
  for (const auto& g : gens) {
    bool fixes = true;
    for (std::size_t p : prefix) fixes = fixes && g(static_cast<Point>(p)) == p;
    if (!fixes) continue;
    for (Point v = 0; v < n; ++v) ds.unite(v, g(v));
  }
  std::vector<std::uint32_t> label(n);
  for (Point v = 0; v < n; ++v) label[v] = ds.find(v);
  return label;
}

/// Depth-first search in the tree of `target` for a leaf whose labelling, matched
/// against the reference leaf, is accepted. `pruning` generates automorphisms of
/// the target used to skip equivalent children.
class LeafSearch {
 public:
  LeafSearch(const Refiner& target, const FirstPath& reference, const std::vector<Permutation>& pruning,
             std::function<bool(const Permutation&)> accept, SearchStats& stats)
      : r_(target), ref_(reference), pruning_(pruning), accept_(std::move(accept)), stats_(stats) {}

  std::optional<Permutation> run(const Cells& cells, std::size_t depth, std::vector<std::size_t>& prefix) {
    if (r_.invariant(cells) != ref_.invariants[depth]) return std::nullopt;
    if (Refiner::discrete(cells)) {
      ++stats_.leaves;
      const auto leaf = Refiner::leaf_order(cells);
      std::vector<Point> images(leaf.size());
      for (std::size_t i = 0; i < leaf.size(); ++i) images[ref_.leaf[i]] = leaf[i];
      Permutation g(std::move(images));
      if (accept_(g)) return g;
      return std::nullopt;
    }
    const std::size_t t = ref_.targets[depth];
    const auto labels = orbit_labels(r_.graph().n, pruning_, prefix);
    std::vector<std::uint32_t> seen;
    std::optional<Permutation> found;
    for_each_bit(cells[t], [&](std::size_t x) {
      if (found || std::find(seen.begin(), seen.end(), labels[x]) != seen.end()) return;
      seen.push_back(labels[x]);
      prefix.push_back(x);
      found = run(r_.individualize(cells, t, x), depth + 1, prefix);
      prefix.pop_back();
    });
    return found;
  }

 private:
  const Refiner& r_;
  const FirstPath& ref_;
  const std::vector<Permutation>& pruning_;
  std::function<bool(const Permutation&)> accept_;
  SearchStats& stats_;
};

}  // namespace detail

inline AutResult automorphism_group(const ColoredGraph& g, const Limits& limits = default_limits()) {
  if (g.n > limits.max_vertices) raise(ErrorKind::cap_exceeded, "graph exceeds the vertex cap");
  AutResult result;
  detail::Refiner r(g, limits.search_node_cap, result.stats);
  const detail::FirstPath path = detail::first_path(r);
  result.stats.depth = path.vertices.size();
  std::vector<Permutation> gens;
  auto accept = [&](const Permutation& x) { return g.is_automorphism(x); };
  for (std::size_t level = path.vertices.size(); level-- > 0;) {
    std::vector<std::size_t> prefix(path.vertices.begin(), path.vertices.begin() + static_cast<std::ptrdiff_t>(level));
    const std::size_t v = path.vertices[level];
    const std::size_t t = path.targets[level];
    const detail::Cells& node = path.nodes[level];
    for_each_bit(node[t], [&](std::size_t w) {
      if (w == v) return;
      const auto labels = detail::orbit_labels(g.n, gens, prefix);
      if (labels[w] == labels[v]) return;
      detail::LeafSearch search(r, path, gens, accept, result.stats);
      prefix.push_back(w);
      auto found = search.run(r.individualize(node, t, w), level + 1, prefix);
      prefix.pop_back();
      if (found) gens.push_back(std::move(*found));
    });
  }
  result.group = PermGroup(g.n, std::move(gens));
  result.order = result.group.order();
  return result;
}

inline AutResult automorphism_group(const Graph& g, const Limits& limits = default_limits()) {
  return automorphism_group(ColoredGraph(g), limits);
}

/// Automorphisms of sigma mapping pairs of P to pairs of P.
inline PermGroup aut_preserving_partition(const Graph& sigma, const PairPartition& pairs,
                                          const Limits& limits = default_limits()) {
  if (pairs.order() != sigma.order()) raise(ErrorKind::invalid_input, "matching does not fit the graph");
  ColoredGraph cg(sigma);
  Graph matching(sigma.order());
  for (auto [a, b] : pairs.pairs()) matching.add_edge(a, b);
  cg.add_layer(matching);
  return automorphism_group(cg, limits).group;
}

/// An isomorphism g with a.relabel(g) == b, or nothing.
inline std::optional<Permutation> isomorphism(const Graph& a, const Graph& b, const Limits& limits = default_limits()) {
  if (a.order() != b.order() || a.size() != b.size()) return std::nullopt;
  const std::size_t n = a.order();
  if (n > limits.max_vertices) raise(ErrorKind::cap_exceeded, "graph exceeds the vertex cap");
  std::vector<std::size_t> da(n), db(n);
  for (std::size_t v = 0; v < n; ++v) {
    da[v] = a.degree(v);
    db[v] = b.degree(v);
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return std::nullopt;
  if (n == 0) return Permutation(0);

  const ColoredGraph ca(a), cb(b);
  SearchStats stats;
  detail::Refiner ra(ca, limits.search_node_cap, stats);
  detail::Refiner rb(cb, limits.search_node_cap, stats);
  const detail::FirstPath path = detail::first_path(ra);
  const AutResult aut_b = automorphism_group(cb, limits);
  auto accept = [&](const Permutation& x) { return ca.maps_onto(x, cb); };
  detail::LeafSearch search(rb, path, aut_b.group.generators(), accept, stats);
  detail::Cells root = rb.initial();
  rb.refine(root);
  std::vector<std::size_t> prefix;
  return search.run(root, 0, prefix);
}

inline bool are_isomorphic(const Graph& a, const Graph& b, const Limits& limits = default_limits()) {
  return isomorphism(a, b, limits).has_value();
}

struct TwinPair {
  std::size_t u, v;
  bool adjacent;  // true twins share closed neighbourhoods, false twins open ones
};

/// All pairs whose transposition is an automorphism.
inline std::vector<TwinPair> find_twins(const Graph& g) {
  std::vector<TwinPair> out;
  for (std::size_t u = 0; u < g.order(); ++u) {
    for (std::size_t v = u + 1; v < g.order(); ++v) {
      if ((g.neighbors(u) & ~bit(v)) == (g.neighbors(v) & ~bit(u))) out.push_back({u, v, g.adjacent(u, v)});
    }
  }
  return out;
}

struct MotionResult {
  std::size_t motion = 0;               // 0 when the automorphism group is trivial
  std::optional<Permutation> witness;   // a non-identity automorphism of minimal support
  bool twin_fast_path = false;
  std::optional<BigInt> aut_order;      // absent when the fast path decided
};

inline MotionResult motion(const Graph& g, const Limits& limits = default_limits()) {
  MotionResult out;
  const auto twins = find_twins(g);
  if (!twins.empty()) {
    out.motion = 2;
    out.witness = Permutation::from_cycles(g.order(), {{static_cast<Point>(twins[0].u), static_cast<Point>(twins[0].v)}});
    out.twin_fast_path = true;
    return out;
  }
  const AutResult aut = automorphism_group(g, limits);
  out.aut_order = aut.order;
  if (aut.group.is_trivial()) return out;
  const MinDegreeResult md = minimal_degree(aut.group, limits);
  out.motion = md.degree;
  out.witness = md.witness;
  return out;
}

inline bool is_vertex_transitive(const PermGroup& aut) {
  return aut.degree() == 0 || is_transitive(aut);
}

inline bool is_vertex_transitive(const Graph& g, const Limits& limits = default_limits()) {
  return is_vertex_transitive(automorphism_group(g, limits).group);
}

}  // namespace vtmotion

// Independent reference computations used by the unit tests and the acceptance
// runner. Everything here is exhaustive and only meant for small inputs.
#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "vtmotion/vtmotion.hpp"

namespace oracle {

using vtmotion::Graph;
using vtmotion::Permutation;
using vtmotion::Point;

/// All elements of <gens>, by closing the generator set under right multiplication.
inline std::set<Permutation> closure(std::size_t degree, const std::vector<Permutation>& gens) {
  std::set<Permutation> seen{Permutation(degree)};
  std::vector<Permutation> frontier{Permutation(degree)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        Permutation y = x * g;
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

inline std::set<Permutation> closure(const vtmotion::PermGroup& G) {
  return closure(G.degree(), G.generators());
}

inline std::size_t min_support(const std::set<Permutation>& elems) {
  std::size_t best = 0;
  for (const auto& g : elems) {
    const std::size_t s = vtmotion::support_size(g);
    if (s > 0 && (best == 0 || s < best)) best = s;
  }
  return best;
}

/// Every vertex permutation that preserves adjacency, found by scanning all n! of them.
inline std::vector<Permutation> automorphisms(const Graph& g) {
  std::vector<Point> images(g.order());
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<Permutation> out;
  do {
    bool ok = true;
    for (std::size_t u = 0; u < g.order() && ok; ++u) {
      for (std::size_t v = u + 1; v < g.order(); ++v) {
        if (g.adjacent(u, v) != g.adjacent(images[u], images[v])) {
          ok = false;
          break;
        }
      }
    }
    if (ok) out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

/// Lexicographically smallest upper-triangle adjacency string over all relabelings.
inline std::string canonical_string(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::string best;
  do {
    std::string s;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) s.push_back(g.adjacent(order[i], order[j]) ? '1' : '0');
    }
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

/// All set partitions of {0..n-1}, as block-label vectors in restricted growth form.
inline std::vector<std::vector<std::size_t>> set_partitions(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> label(n, 0);
  auto rec = [&](auto&& self, std::size_t i, std::size_t used) -> void {
    if (i == n) {
      out.push_back(label);
      return;
    }
    for (std::size_t b = 0; b <= used && b < n; ++b) {
      label[i] = b;
      self(self, i + 1, std::max(used, b + 1));
    }
  };
  if (n > 0) rec(rec, 0, 0);
  return out;
}

/// Nontrivial uniform partitions invariant under every generator.
inline std::vector<std::vector<std::size_t>> invariant_partitions(const vtmotion::PermGroup& G) {
  std::vector<std::vector<std::size_t>> out;
  const std::size_t n = G.degree();
  for (const auto& label : set_partitions(n)) {
    const std::size_t parts = *std::max_element(label.begin(), label.end()) + 1;
    if (parts == 1 || parts == n) continue;
    std::vector<std::size_t> sizes(parts, 0);
    for (auto b : label) ++sizes[b];
    if (std::count(sizes.begin(), sizes.end(), sizes[0]) != static_cast<long>(parts)) continue;
    bool invariant = true;
    for (const auto& g : G.generators()) {
      for (std::size_t u = 0; u < n && invariant; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
          if ((label[u] == label[v]) != (label[g(u)] == label[g(v)])) {
            invariant = false;
            break;
          }
        }
      }
    }
    if (invariant) out.push_back(label);
  }
  return out;
}

/// Whether g maps every pair of P onto a pair of P.
inline bool preserves(const Permutation& g, const vtmotion::PairPartition& P) {
  for (auto [a, b] : P.pairs()) {
    if (!P.is_pair(g(a), g(b))) return false;
  }
  return true;
}

/// A random subgroup of Sym(n) generated by `count` uniformly random permutations.
inline vtmotion::PermGroup random_subgroup(std::mt19937& rng, std::size_t n, std::size_t count) {
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<Point> images(n);
    std::iota(images.begin(), images.end(), Point{0});
    std::shuffle(images.begin(), images.end(), rng);
    gens.emplace_back(std::move(images));
  }
  return vtmotion::PermGroup(n, std::move(gens));
}

/// Random elements of small order, so that the generated subgroups stay varied rather than
/// almost always being Sym(n) or Alt(n).
inline vtmotion::PermGroup random_small_subgroup(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> pick(1, 3);
  const int count = pick(rng);
  std::vector<Permutation> gens;
  for (int i = 0; i < count; ++i) {
    std::vector<Point> pts(n);
    std::iota(pts.begin(), pts.end(), Point{0});
    std::shuffle(pts.begin(), pts.end(), rng);
    std::uniform_int_distribution<std::size_t> len(2, n);
    const std::size_t a = len(rng);
    std::vector<std::vector<Point>> cycles;
    std::size_t pos = 0;
    // One or two disjoint cycles on a random subset.
    cycles.emplace_back(pts.begin(), pts.begin() + static_cast<long>(std::min(a, n)));
    pos = std::min(a, n);
    if (pos + 2 <= n && pick(rng) == 1) cycles.emplace_back(pts.begin() + static_cast<long>(pos), pts.begin() + static_cast<long>(pos + 2));
    gens.push_back(Permutation::from_cycles(n, cycles));
  }
  return vtmotion::PermGroup(n, std::move(gens));
}

struct ImprimitiveSample {
  std::string name;
  vtmotion::PermGroup group;
  vtmotion::BlockSystem blocks;
};

/// Transitive imprimitive groups with a known block system: relabeled wreath
/// products, transitive subgroups of them, and cyclic or dihedral groups with
/// divisor blocks.
inline std::vector<ImprimitiveSample> imprimitive_samples(std::size_t count, unsigned seed = 1) {
  using namespace vtmotion;
  const std::vector<std::string> inner{"Sym(2)", "C(3)", "Sym(3)", "C(4)", "D(4)", "Alt(4)", "AGL1(5)"};
  const std::vector<std::string> outer{"Sym(2)", "C(3)", "Sym(3)", "C(4)", "D(4)"};
  std::mt19937 rng(seed);
  std::vector<ImprimitiveSample> out;
  auto relabel = [&](const PermGroup& G, const BlockSystem& sys, const std::string& name) {
    const Permutation h = random_subgroup(rng, G.degree(), 1).generators().front();
    std::vector<Permutation> gens;
    for (const auto& g : G.generators()) gens.push_back(conjugate(g, h));
    std::vector<std::vector<Point>> blocks;
    for (const auto& b : sys.blocks()) {
      std::vector<Point> image;
      for (Point p : b) image.push_back(h(p));
      blocks.push_back(std::move(image));
    }
    out.push_back({name, PermGroup(G.degree(), std::move(gens)), BlockSystem(G.degree(), std::move(blocks))});
  };
  std::size_t round = 0;
  while (out.size() < count) {
    const std::string& a = inner[round % inner.size()];
    const std::string& b = outer[(round / inner.size() + round) % outer.size()];
    const PermGroup A = construct(a), B = construct(b);
    WreathLabeling lab(A.degree(), B.degree());
    const std::string name = a + " wr " + b;
    switch (round % 3) {
      case 0:
        relabel(wreath_product(A, B), lab.canonical_blocks(), name);
        break;
      case 1: {
        // Top generators twisted by random base elements, plus one inner generator.
        std::vector<Permutation> gens;
        const auto base_elems = elements(A);
        std::uniform_int_distribution<std::size_t> pick(0, base_elems.size() - 1);
        for (const auto& h : B.generators()) {
          std::vector<Permutation> coords;
          for (std::size_t j = 0; j < B.degree(); ++j) coords.push_back(base_elems[pick(rng)]);
          gens.push_back(lab.element(coords, h));
        }
        gens.push_back(lab.in_copy(A.generators().front(), 0));
        const PermGroup G(lab.degree(), std::move(gens));
        if (is_transitive(G)) relabel(G, lab.canonical_blocks(), "subgroup of " + name);
        break;
      }
      default: {
        const std::size_t n = A.degree() * B.degree();
        const std::size_t d = A.degree();
        const PermGroup G = construct((round % 2 ? "C(" : "D(") + std::to_string(n) + ")");
        std::vector<std::vector<Point>> blocks(n / d);
        for (Point p = 0; p < n; ++p) blocks[p % (n / d)].push_back(p);
        relabel(G, BlockSystem(n, std::move(blocks)),
                std::string(round % 2 ? "C" : "D") + std::to_string(n) + " with blocks of size " + std::to_string(d));
        break;
      }
    }
    ++round;
  }
  return out;
}

}  // namespace oracle

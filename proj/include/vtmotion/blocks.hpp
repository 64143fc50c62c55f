/**
 * @file blocks.hpp
 * @brief Blocks of imprimitivity, block systems and induced actions.
 */
#pragma once

#include <map>
#include <set>

#include "group_search.hpp"

namespace vtmotion {

class BlockSystem {
 public:
  BlockSystem() = default;

  /// Validates a partition of {0..degree-1} into blocks of one size >= 2.
  BlockSystem(std::size_t degree, std::vector<std::vector<Point>> blocks) : block_of_(degree, 0) {
    std::vector<char> seen(degree, 0);
    std::size_t total = 0;
    for (auto& b : blocks) {
      std::sort(b.begin(), b.end());
      if (b.size() < 2) raise(ErrorKind::invalid_input, "blocks must have at least 2 points");
      if (b.size() != blocks.front().size()) raise(ErrorKind::invalid_input, "blocks must have equal size");
      for (Point p : b) {
        if (p >= degree || seen[p]) raise(ErrorKind::invalid_input, "blocks do not partition the points");
        seen[p] = 1;
      }
      total += b.size();
    }
    if (total != degree) raise(ErrorKind::invalid_input, "blocks do not cover all points");
    std::sort(blocks.begin(), blocks.end());
    for (std::uint32_t i = 0; i < blocks.size(); ++i) {
      for (Point p : blocks[i]) block_of_[p] = i;
    }
    blocks_ = std::move(blocks);
  }

  const std::vector<std::vector<Point>>& blocks() const noexcept { return blocks_; }
  std::size_t count() const noexcept { return blocks_.size(); }
  std::size_t block_size() const noexcept { return blocks_.empty() ? 0 : blocks_.front().size(); }
  std::size_t degree() const noexcept { return block_of_.size(); }
  std::uint32_t block_of(Point p) const { return block_of_[p]; }
  const std::vector<Point>& block_containing(Point p) const { return blocks_[block_of_[p]]; }

  friend bool operator==(const BlockSystem& a, const BlockSystem& b) { return a.blocks_ == b.blocks_; }

 private:
  std::vector<std::vector<Point>> blocks_;
  std::vector<std::uint32_t> block_of_;
};

inline bool is_invariant(std::span<const Permutation> gens, const BlockSystem& system) {
  for (const auto& g : gens) {
    for (const auto& b : system.blocks()) {
      const std::uint32_t target = system.block_of(g(b.front()));
      for (Point p : b) {
        if (system.block_of(g(p)) != target) return false;
      }
    }
  }
  return true;
}

inline bool is_invariant(const PermGroup& G, const BlockSystem& system) {
  return system.degree() == G.degree() && is_invariant(G.generators(), system);
}

/// True when B^g and B are equal or disjoint for every generator.
inline bool is_block(const PermGroup& G, std::span<const Point> B) {
  std::vector<char> in(G.degree(), 0);
  for (Point p : B) in[p] = 1;
  for (const auto& g : G.generators()) {
    std::size_t inside = 0;
    for (Point p : B) inside += in[g(p)];
    if (inside != 0 && inside != B.size()) return false;
  }
  return true;
}

inline void require_transitive(const PermGroup& G) {
  if (!is_transitive(G)) raise(ErrorKind::precondition, "group is not transitive");
}

/// Smallest block containing `seed` (Atkinson's union-find refinement).
/// Transitivity is the caller's responsibility; see minimal_block_containing.
inline std::vector<Point> block_closure(const PermGroup& G, std::span<const Point> seed) {
  const std::size_t n = G.degree();
  DisjointSets ds(n);
  std::vector<std::pair<Point, Point>> queue;
  for (std::size_t i = 1; i < seed.size(); ++i) {
    if (ds.unite(seed[0], seed[i]) >= 0) queue.emplace_back(seed[0], seed[i]);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto [a, b] = queue[head];
    for (const auto& g : G.generators()) {
      if (ds.unite(g(a), g(b)) >= 0) queue.emplace_back(g(a), g(b));
    }
  }
  std::vector<Point> block;
  const std::uint32_t root = ds.find(seed[0]);
  for (Point p = 0; p < n; ++p) {
    if (ds.find(p) == root) block.push_back(p);
  }
  return block;
}

inline std::vector<Point> minimal_block_containing(const PermGroup& G, std::span<const Point> seed) {
  require_transitive(G);
  if (seed.empty()) raise(ErrorKind::invalid_input, "empty seed");
  for (Point p : seed) {
    if (p >= G.degree()) raise(ErrorKind::invalid_input, "seed point out of range");
  }
  return block_closure(G, seed);
}

/// The orbit of a block under G, as a block system.
inline BlockSystem block_system_from_block(const PermGroup& G, std::vector<Point> block) {
  std::sort(block.begin(), block.end());
  std::set<std::vector<Point>> seen{block};
  std::vector<std::vector<Point>> queue{block};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& g : G.generators()) {
      std::vector<Point> image;
      for (Point p : queue[i]) image.push_back(g(p));
      std::sort(image.begin(), image.end());
      if (seen.insert(image).second) queue.push_back(std::move(image));
    }
  }
  return BlockSystem(G.degree(), std::move(queue));
}

/// Smallest blocks {0, b} generate, one per b = 1..n-1 (index b-1).
inline std::vector<std::vector<Point>> pair_blocks(const PermGroup& G) {
  std::vector<std::vector<Point>> out;
  for (Point b = 1; b < G.degree(); ++b) {
    const Point seed[2] = {0, b};
    out.push_back(block_closure(G, seed));
  }
  return out;
}

/// A system of minimal blocks, or nullopt when G is primitive.
/// Seeds {0,b} are scanned in order; among the minimal blocks found the
/// smallest wins, ties going to the earliest seed.
inline std::optional<BlockSystem> minimal_block_system(const PermGroup& G) {
  require_transitive(G);
  const std::size_t n = G.degree();
  const auto candidates = pair_blocks(G);
  const std::vector<Point>* best = nullptr;
  for (const auto& B : candidates) {
    if (B.size() == n) continue;
    bool minimal = true;
    for (Point b : B) {
      if (b != 0 && candidates[b - 1] != B) {
        minimal = false;
        break;
      }
    }
    if (minimal && (best == nullptr || B.size() < best->size())) best = &B;
  }
  if (best == nullptr) return std::nullopt;
  return block_system_from_block(G, *best);
}

inline bool is_primitive(const PermGroup& G) { return !minimal_block_system(G).has_value(); }

/// Every proper block containing point 0, ordered by size then contents.
inline std::vector<std::vector<Point>> blocks_containing_zero(const PermGroup& G) {
  require_transitive(G);
  const std::size_t n = G.degree();
  std::set<std::vector<Point>> all;
  for (auto& B : pair_blocks(G)) all.insert(std::move(B));
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<std::vector<Point>> current(all.begin(), all.end());
    for (std::size_t i = 0; i < current.size(); ++i) {
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        std::vector<Point> seed;
        std::set_union(current[i].begin(), current[i].end(), current[j].begin(), current[j].end(),
                       std::back_inserter(seed));
        if (all.insert(block_closure(G, seed)).second) grew = true;
      }
    }
  }
  std::vector<std::vector<Point>> out;
  for (const auto& B : all) {
    if (B.size() < n) out.push_back(B);
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

inline std::vector<BlockSystem> all_block_systems(const PermGroup& G) {
  std::vector<BlockSystem> out;
  for (const auto& B : blocks_containing_zero(G)) out.push_back(block_system_from_block(G, B));
  return out;
}

struct InducedAction {
  PermGroup group;
  std::vector<std::vector<Point>> domain;  // new index i stands for domain[i]
  BigInt kernel_order;
};

/// Action of G on the blocks of an invariant system.
inline InducedAction induced_action_on_blocks(const PermGroup& G, const BlockSystem& system) {
  if (!is_invariant(G, system)) raise(ErrorKind::precondition, "block system is not invariant");
  std::vector<Permutation> gens;
  for (const auto& g : G.generators()) {
    std::vector<Point> images(system.count());
    for (std::size_t i = 0; i < system.count(); ++i) images[i] = system.block_of(g(system.blocks()[i].front()));
    gens.emplace_back(std::move(images));
  }
  PermGroup top(system.count(), std::move(gens));
  const BigInt kernel = G.order() / top.order();
  return {std::move(top), system.blocks(), kernel};
}

/// Action of the setwise stabilizer of a block on that block.
inline InducedAction induced_action_on_block(const PermGroup& G, std::span<const Point> block,
                                             const Limits& limits = default_limits()) {
  const auto B = sorted_unique(block, G.degree());
  if (B.empty() || !is_block(G, B)) raise(ErrorKind::precondition, "domain is not a block");
  PermGroup stab = setwise_stabilizer(G, B, limits);
  std::vector<Permutation> gens;
  for (const auto& g : stab.generators()) gens.push_back(restrict_to(g, B));
  PermGroup local(B.size(), std::move(gens));
  std::vector<std::vector<Point>> domain;
  for (Point p : B) domain.push_back({p});
  const BigInt kernel = stab.order() / local.order();
  return {std::move(local), std::move(domain), kernel};
}

}  // namespace vtmotion

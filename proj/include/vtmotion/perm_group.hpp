/**
 * @file perm_group.hpp
 * @brief Finitely generated permutation groups with a lazily built chain.
 */
#pragma once

#include <memory>
#include <mutex>
#include <numeric>
#include <unordered_set>

#include "stabilizer_chain.hpp"

namespace vtmotion {

class PermGroup {
 public:
  PermGroup() : cache_(std::make_shared<Cache>()) {}

  PermGroup(std::size_t degree, std::vector<Permutation> generators)
      : degree_(degree), cache_(std::make_shared<Cache>()) {
    for (auto& g : generators) {
      if (g.degree() != degree) raise(ErrorKind::invalid_input, "generator degree mismatch");
      if (!g.is_identity()) generators_.push_back(std::move(g));
    }
  }

  static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }

  /// Chain with base order 0,1,2,...; built once, safe to call concurrently.
  const StabilizerChain& chain() const {
    std::call_once(cache_->once, [this] {
      cache_->chain = std::make_unique<StabilizerChain>(degree_, generators_);
    });
    return *cache_->chain;
  }

  StabilizerChain chain_with_base(std::span<const Point> prefix) const {
    return StabilizerChain(degree_, generators_, prefix);
  }

  BigInt order() const { return chain().order(); }
  bool contains(const Permutation& g) const { return chain().contains(g); }
  bool is_trivial() const noexcept { return generators_.empty(); }

 private:
  struct Cache {
    std::once_flag once;
    std::unique_ptr<StabilizerChain> chain;
  };

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::shared_ptr<Cache> cache_;
};

/// Union-find over points, used by orbit and block computations.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }

  std::uint32_t find(std::uint32_t a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }

  /// Merges the classes; the smaller root survives. Returns the absorbed root or -1.
  std::int64_t unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return -1;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return b;
  }

  std::size_t size() const noexcept { return parent_.size(); }

  /// Classes ordered by smallest member, members sorted.
  std::vector<std::vector<Point>> classes() {
    std::vector<std::vector<Point>> by_root(parent_.size());
    for (std::uint32_t i = 0; i < parent_.size(); ++i) by_root[find(i)].push_back(i);
    std::vector<std::vector<Point>> out;
    for (auto& c : by_root) {
      if (!c.empty()) out.push_back(std::move(c));
    }
    return out;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

inline std::vector<std::vector<Point>> orbits(std::size_t degree, std::span<const Permutation> gens) {
  DisjointSets ds(degree);
  for (const auto& g : gens) {
    for (Point i = 0; i < degree; ++i) ds.unite(i, g(i));
  }
  return ds.classes();
}

inline std::vector<std::vector<Point>> orbits(const PermGroup& G) {
  return orbits(G.degree(), G.generators());
}

/// Orbit of a point in discovery order.
inline std::vector<Point> orbit_of(std::size_t degree, std::span<const Permutation> gens, Point p) {
  std::vector<char> seen(degree, 0);
  std::vector<Point> orbit{p};
  seen[p] = 1;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (const auto& g : gens) {
      Point q = g(orbit[i]);
      if (!seen[q]) {
        seen[q] = 1;
        orbit.push_back(q);
      }
    }
  }
  return orbit;
}

inline bool is_transitive(const PermGroup& G) {
  if (G.degree() == 0) return false;
  return orbit_of(G.degree(), G.generators(), 0).size() == G.degree();
}

/// All elements, refusing groups larger than the cap.
inline std::vector<Permutation> elements(const PermGroup& G, std::uint64_t cap = default_limits().enumeration_cap) {
  const BigInt order = G.order();
  if (order > cap) raise(ErrorKind::cap_exceeded, "group order " + order.str() + " exceeds enumeration cap");
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(order));
  G.chain().for_each_element([&](const Permutation& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

/// Group generated by all G-conjugates of x.
inline PermGroup normal_closure(const PermGroup& G, const Permutation& x) {
  const std::size_t n = G.degree();
  if (x.degree() != n) raise(ErrorKind::invalid_input, "element degree mismatch");
  if (x.is_identity()) return PermGroup::trivial(n);
  std::vector<Permutation> gens{x};
  StabilizerChain chain(n, gens);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (const auto& g : G.generators()) {
      Permutation c = conjugate(gens[i], g);
      if (chain.add_generator(c)) gens.push_back(std::move(c));
    }
  }
  return PermGroup(n, std::move(gens));
}

/// Subgroup generated by the given elements of the same degree.
inline PermGroup generated(std::size_t degree, std::vector<Permutation> gens) {
  return PermGroup(degree, std::move(gens));
}

/// Removes generators already in the span of the earlier ones.
inline std::vector<Permutation> reduced_generators(const PermGroup& G) {
  std::vector<Permutation> kept;
  StabilizerChain chain(G.degree(), kept);
  for (const auto& g : G.generators()) {
    if (chain.add_generator(g)) kept.push_back(g);
  }
  return kept;
}

/// Restricts a permutation that preserves `domain` (sorted) to it, reindexing 0..|domain|-1.
inline Permutation restrict_to(const Permutation& g, std::span<const Point> domain) {
  std::vector<std::int32_t> index(g.degree(), -1);
  for (std::size_t i = 0; i < domain.size(); ++i) index[domain[i]] = static_cast<std::int32_t>(i);
  std::vector<Point> images(domain.size());
  for (std::size_t i = 0; i < domain.size(); ++i) {
    std::int32_t j = index[g(domain[i])];
    if (j < 0) raise(ErrorKind::precondition, "permutation does not preserve the domain");
    images[i] = static_cast<Point>(j);
  }
  return Permutation(std::move(images));
}

}  // namespace vtmotion

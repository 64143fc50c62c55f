/**
 * @file group_search.hpp
 * @brief Backtrack searches over a stabilizer chain: subgroups defined by a
 * property of base images, stabilizers of point sets, and minimal degree.
 */
#pragma once

#include <optional>

#include "perm_group.hpp"

namespace vtmotion {

namespace detail {

template <class Partial, class Accept>
class SubgroupSearch {
 public:
  SubgroupSearch(const StabilizerChain& chain, Partial& partial, Accept& accept, std::uint64_t node_cap)
      : chain_(chain), partial_(partial), accept_(accept), node_cap_(node_cap) {}

  /// `trusted_from`: from this level on, the property depends only on the
  /// images of the earlier base points, so any coset representative works.
  std::vector<Permutation> run(std::size_t trusted_from) {
    const std::size_t n = chain_.degree();
    std::vector<Permutation> found = chain_.generators_at(trusted_from);
    for (std::size_t l = std::min(trusted_from, chain_.length()); l-- > 0;) {
      const auto& L = chain_.level(l);
      std::vector<char> covered(n, 0);
      auto refresh = [&] {
        std::fill(covered.begin(), covered.end(), 0);
        for (Point q : orbit_of(n, found, L.base)) covered[q] = 1;
      };
      refresh();
      trusted_from_ = trusted_from;
      for (std::size_t j = 1; j < L.orbit.size(); ++j) {
        const Point gamma = L.orbit[j];
        if (covered[gamma]) continue;
        if (!partial_(l, gamma)) continue;
        if (auto g = dfs(l + 1, L.transversal[j])) {
          found.push_back(std::move(*g));
          refresh();
        }
      }
    }
    return found;
  }

 private:
  std::optional<Permutation> dfs(std::size_t t, const Permutation& prefix) {
    if (++nodes_ > node_cap_) raise(ErrorKind::cap_exceeded, "subgroup search node cap exceeded");
    if (t >= trusted_from_ || t == chain_.length()) {
      if (t >= trusted_from_ || accept_(prefix)) return prefix;
      return std::nullopt;
    }
    const auto& L = chain_.level(t);
    for (std::size_t j = 0; j < L.orbit.size(); ++j) {
      const Point image = prefix(L.orbit[j]);
      if (!partial_(t, image)) continue;
      if (auto g = dfs(t + 1, L.transversal[j] * prefix)) return g;
    }
    return std::nullopt;
  }

  const StabilizerChain& chain_;
  Partial& partial_;
  Accept& accept_;
  std::uint64_t node_cap_;
  std::uint64_t nodes_ = 0;
  std::size_t trusted_from_ = 0;
};

}  // namespace detail

/// Generators of the subgroup {g : accept(g)} of the chain's group.
/// partial(t, image) must return false only if no group element sending base
/// point t to `image` (with the earlier base images already fixed) is accepted.
template <class Partial, class Accept>
std::vector<Permutation> search_subgroup(const StabilizerChain& chain, Partial partial, Accept accept,
                                         std::size_t trusted_from,
                                         std::uint64_t node_cap = default_limits().search_node_cap) {
  detail::SubgroupSearch<Partial, Accept> search(chain, partial, accept, node_cap);
  return search.run(trusted_from);
}

struct Stabilizers {
  PermGroup setwise;
  PermGroup pointwise;
};

inline std::vector<Point> sorted_unique(std::span<const Point> points, std::size_t degree) {
  std::vector<Point> out(points.begin(), points.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (Point p : out) {
    if (p >= degree) raise(ErrorKind::invalid_input, "point out of range");
  }
  return out;
}

inline PermGroup pointwise_stabilizer(const PermGroup& G, std::span<const Point> set) {
  const auto B = sorted_unique(set, G.degree());
  StabilizerChain chain = G.chain_with_base(B);
  return PermGroup(G.degree(), chain.generators_at(B.size()));
}

inline PermGroup setwise_stabilizer(const PermGroup& G, std::span<const Point> set,
                                    const Limits& limits = default_limits()) {
  const auto B = sorted_unique(set, G.degree());
  StabilizerChain chain = G.chain_with_base(B);
  std::vector<char> in_set(G.degree(), 0);
  for (Point p : B) in_set[p] = 1;
  const std::size_t depth = B.size();
  auto partial = [&](std::size_t t, Point image) { return t >= depth || in_set[image]; };
  auto accept = [](const Permutation&) { return true; };
  return PermGroup(G.degree(), search_subgroup(chain, partial, accept, depth, limits.search_node_cap));
}

inline Stabilizers stabilizers(const PermGroup& G, std::span<const Point> set,
                               const Limits& limits = default_limits()) {
  return {setwise_stabilizer(G, set, limits), pointwise_stabilizer(G, set)};
}

struct MinDegreeResult {
  std::size_t degree = 0;
  Permutation witness;
};

/// Minimal degree by scanning all elements (or only those of prime order).
inline MinDegreeResult minimal_degree_scan(const PermGroup& G, bool prime_order_only,
                                           std::uint64_t cap = default_limits().enumeration_cap) {
  if (G.is_trivial()) raise(ErrorKind::precondition, "minimal degree of the trivial group is undefined");
  const BigInt order = G.order();
  if (order > cap) raise(ErrorKind::cap_exceeded, "group order " + order.str() + " exceeds enumeration cap");
  MinDegreeResult best{G.degree() + 1, Permutation(G.degree())};
  G.chain().for_each_element([&](const Permutation& g) {
    if (g.is_identity()) return true;
    if (prime_order_only && !is_prime(g.order())) return true;
    const std::size_t s = support_size(g);
    if (s < best.degree) best = {s, g};
    return true;
  });
  return best;
}

namespace detail {

class MinDegreeSearch {
 public:
  MinDegreeSearch(const StabilizerChain& chain, std::uint64_t node_cap) : chain_(chain), node_cap_(node_cap) {
    const std::size_t n = chain.degree();
    const std::size_t k = chain.length();
    orbit_id_.resize(k + 1);
    for (std::size_t t = 0; t <= k; ++t) {
      DisjointSets ds(n);
      for (const auto& g : chain.generators_at(t)) {
        for (Point i = 0; i < n; ++i) ds.unite(i, g(i));
      }
      orbit_id_[t].resize(n);
      for (Point i = 0; i < n; ++i) orbit_id_[t][i] = ds.find(i);
    }
    best_ = n + 1;
    for (std::size_t t = 0; t < k; ++t) {
      for (const auto& g : chain.level(t).generators) consider(g);
      for (const auto& u : chain.level(t).transversal) consider(u);
    }
  }

  MinDegreeResult run() {
    const std::size_t n = chain_.degree();
    const auto& L0 = chain_.level(0);
    Permutation id(n);
    if (L0.orbit.size() == n) {
      // Transitive: every non-identity element has a conjugate moving the first
      // base point, and conjugating by the point stabilizer only permutes its
      // image within an orbit of that stabilizer.
      std::vector<char> done(n, 0);
      done[L0.base] = 1;
      for (std::size_t j = 1; j < L0.orbit.size() && best_ > 2; ++j) {
        const Point gamma = L0.orbit[j];
        if (done[gamma]) continue;
        for (Point q = 0; q < n; ++q) {
          if (orbit_id_[1][q] == orbit_id_[1][gamma]) done[q] = 1;
        }
        dfs(1, L0.transversal[j]);
      }
    } else {
      dfs(0, id);
    }
    return {best_, witness_};
  }

 private:
  void consider(const Permutation& g) {
    if (g.is_identity()) return;
    const std::size_t s = support_size(g);
    if (s < best_) {
      best_ = s;
      witness_ = g;
    }
  }

  void dfs(std::size_t t, const Permutation& prefix) {
    if (best_ <= 2) return;
    if (++nodes_ > node_cap_) raise(ErrorKind::cap_exceeded, "minimal degree search node cap exceeded");
    consider(prefix);
    if (t == chain_.length()) return;
    const std::size_t n = chain_.degree();
    const auto& ids = orbit_id_[t];
    const auto images = prefix.images();
    std::size_t forced = 0;
    for (Point q = 0; q < n; ++q) {
      // As many points stay moved by every h*prefix (h in the level-t
      // stabilizer) as there are q leaving their level-t orbit under prefix.
      forced += (ids[q] != ids[images[q]]);
    }
    if (forced >= best_) return;
    const auto& L = chain_.level(t);
    for (std::size_t j = 0; j < L.orbit.size(); ++j) {
      dfs(t + 1, L.transversal[j] * prefix);
      if (best_ <= 2) return;
    }
  }

  const StabilizerChain& chain_;
  std::uint64_t node_cap_;
  std::uint64_t nodes_ = 0;
  std::vector<std::vector<std::uint32_t>> orbit_id_;
  std::size_t best_ = 0;
  Permutation witness_;
};

}  // namespace detail

/// Minimal degree by branch and bound over the stabilizer chain.
inline MinDegreeResult minimal_degree(const PermGroup& G, const Limits& limits = default_limits()) {
  if (G.is_trivial()) raise(ErrorKind::precondition, "minimal degree of the trivial group is undefined");
  detail::MinDegreeSearch search(G.chain(), limits.search_node_cap);
  return search.run();
}

}  // namespace vtmotion

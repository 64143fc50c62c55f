/**
 * @file perm_isomorphism.hpp
 * @brief Permutation isomorphism of small groups by backtracking over
 * generator images with point-map propagation.
 */
#pragma once

#include <map>

#include "group_search.hpp"

namespace vtmotion {

/// f maps points of the first group to points of the second; generator_images[i]
/// is the image of the i-th generator of the first group, so that
/// f(w^g) = f(w)^phi(g).
struct PermIsomorphism {
  Permutation f;
  std::vector<Permutation> generator_images;
};

namespace detail {

class PermIsoSearch {
 public:
  PermIsoSearch(std::vector<Permutation> gens1, std::map<std::vector<std::size_t>, std::vector<Permutation>> classes2,
                const PermGroup& G2, std::uint64_t node_cap)
      : gens1_(std::move(gens1)), classes2_(std::move(classes2)), G2_(G2), node_cap_(node_cap) {
    n_ = G2.degree();
  }

  std::optional<Permutation> run(const std::vector<Point>& first_images) {
    for (Point target : first_images) {
      State s = empty_state();
      if (!assign(s, 0, target)) continue;
      if (auto f = choose_generator(s, 0)) return f;
    }
    return std::nullopt;
  }

 private:
  struct State {
    std::vector<std::int32_t> fwd, bwd;
    std::vector<Permutation> chosen;
  };

  State empty_state() const { return {std::vector<std::int32_t>(n_, -1), std::vector<std::int32_t>(n_, -1), {}}; }

  static bool set(State& s, Point a, Point b) {
    if (s.fwd[a] >= 0) return s.fwd[a] == static_cast<std::int32_t>(b);
    if (s.bwd[b] >= 0) return false;
    s.fwd[a] = static_cast<std::int32_t>(b);
    s.bwd[b] = static_cast<std::int32_t>(a);
    return true;
  }

  /// Assigns f(a) = b and propagates along every chosen generator.
  bool assign(State& s, Point a, Point b) const {
    if (s.fwd[a] >= 0) return s.fwd[a] == static_cast<std::int32_t>(b);
    if (!set(s, a, b)) return false;
    std::vector<Point> queue{a};
    return propagate(s, queue);
  }

  bool propagate(State& s, std::vector<Point>& queue) const {
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Point w = queue[head];
      const Point fw = static_cast<Point>(s.fwd[w]);
      for (std::size_t i = 0; i < s.chosen.size(); ++i) {
        const Point a = gens1_[i](w);
        const Point b = s.chosen[i](fw);
        const bool fresh = s.fwd[a] < 0;
        if (!set(s, a, b)) return false;
        if (fresh) queue.push_back(a);
      }
    }
    return true;
  }

  std::optional<Permutation> choose_generator(State& s, std::size_t i) {
    if (++nodes_ > node_cap_) raise(ErrorKind::cap_exceeded, "permutation isomorphism search node cap exceeded");
    if (i == gens1_.size()) return complete_points(s);
    const auto it = classes2_.find(gens1_[i].cycle_type());
    if (it == classes2_.end()) return std::nullopt;
    for (const auto& c : it->second) {
      State next = s;
      next.chosen.push_back(c);
      std::vector<Point> queue;
      for (Point w = 0; w < n_; ++w) {
        if (next.fwd[w] >= 0) queue.push_back(w);
      }
      if (!propagate(next, queue)) continue;
      if (auto f = choose_generator(next, i + 1)) return f;
    }
    return std::nullopt;
  }

  std::optional<Permutation> complete_points(State& s) {
    Point free_point = 0;
    while (free_point < n_ && s.fwd[free_point] >= 0) ++free_point;
    if (free_point == n_) {
      std::vector<Point> images(n_);
      for (Point w = 0; w < n_; ++w) images[w] = static_cast<Point>(s.fwd[w]);
      Permutation f(std::move(images));
      const Permutation finv = f.inverse();
      for (const auto& g : gens1_) {
        if (!G2_.contains(finv * g * f)) return std::nullopt;
      }
      return f;
    }
    for (Point target = 0; target < n_; ++target) {
      if (s.bwd[target] >= 0) continue;
      if (++nodes_ > node_cap_) raise(ErrorKind::cap_exceeded, "permutation isomorphism search node cap exceeded");
      State next = s;
      if (!assign(next, free_point, target)) continue;
      if (auto f = complete_points(next)) return f;
    }
    return std::nullopt;
  }

  std::vector<Permutation> gens1_;
  std::map<std::vector<std::size_t>, std::vector<Permutation>> classes2_;
  const PermGroup& G2_;
  std::uint64_t node_cap_;
  std::uint64_t nodes_ = 0;
  Point n_ = 0;
};

inline std::map<std::vector<std::size_t>, std::size_t> cycle_type_census(const std::vector<Permutation>& elems) {
  std::map<std::vector<std::size_t>, std::size_t> census;
  for (const auto& g : elems) ++census[g.cycle_type()];
  return census;
}

inline std::vector<std::size_t> orbit_sizes(const PermGroup& G) {
  std::vector<std::size_t> sizes;
  for (const auto& o : orbits(G)) sizes.push_back(o.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace detail

inline constexpr std::size_t kPermIsoMaxDegree = 16;

/// A permutation isomorphism from G1 to G2, or nullopt when none exists.
inline std::optional<PermIsomorphism> permutation_isomorphic(const PermGroup& G1, const PermGroup& G2,
                                                             const Limits& limits = default_limits()) {
  if (G1.degree() != G2.degree()) return std::nullopt;
  const std::size_t n = G1.degree();
  if (n > kPermIsoMaxDegree) raise(ErrorKind::precondition, "permutation isomorphism limited to degree 16");
  if (G1.order() != G2.order()) return std::nullopt;
  if (detail::orbit_sizes(G1) != detail::orbit_sizes(G2)) return std::nullopt;
  const auto elems1 = elements(G1, limits.enumeration_cap);
  const auto elems2 = elements(G2, limits.enumeration_cap);
  if (detail::cycle_type_census(elems1) != detail::cycle_type_census(elems2)) return std::nullopt;

  std::optional<Permutation> f;
  if (G1.is_trivial()) {
    f = Permutation(n);
  } else {
    std::map<std::vector<std::size_t>, std::vector<Permutation>> classes2;
    for (const auto& g : elems2) classes2[g.cycle_type()].push_back(g);
    // Point 0 may be sent to one representative of each G2-orbit of the right size.
    const std::size_t size0 = orbit_of(n, G1.generators(), 0).size();
    std::vector<Point> first_images;
    for (const auto& o : orbits(G2)) {
      if (o.size() == size0) first_images.push_back(o.front());
    }
    detail::PermIsoSearch search(reduced_generators(G1), std::move(classes2), G2, limits.search_node_cap);
    f = search.run(first_images);
  }
  if (!f) return std::nullopt;
  PermIsomorphism iso{*f, {}};
  const Permutation finv = f->inverse();
  for (const auto& g : G1.generators()) iso.generator_images.push_back(finv * g * *f);
  return iso;
}

/// Checks f(w^g) = f(w)^phi(g) for every point and generator.
inline bool verify_embedding_relation(std::span<const Permutation> gens, std::span<const Permutation> images,
                                      const Permutation& f) {
  if (gens.size() != images.size()) return false;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (Point w = 0; w < f.degree(); ++w) {
      if (f(gens[i](w)) != images[i](f(w))) return false;
    }
  }
  return true;
}

}  // namespace vtmotion

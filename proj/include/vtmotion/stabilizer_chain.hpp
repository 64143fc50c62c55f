/**
 * @file stabilizer_chain.hpp
 * @brief Deterministic Schreier-Sims stabilizer chain.
 *
 * Level i has base point b_i and holds the strong generators fixing
 * b_0..b_{i-1}, the orbit of b_i under them and an explicit transversal.
 * An element g factors uniquely as g = u_{k-1} ... u_1 u_0 with u_i taken
 * from the transversal of level i.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <utility>

#include "permutation.hpp"

namespace vtmotion {

using BigInt = boost::multiprecision::cpp_int;

class StabilizerChain {
 public:
  struct Level {
    Point base = 0;
    std::vector<Permutation> generators;
    std::vector<Point> orbit;
    std::vector<std::int32_t> orbit_index;  // point -> position in orbit, or -1
    std::vector<Permutation> transversal;   // transversal[j] maps base to orbit[j]
    std::vector<Permutation> inverse_transversal;
    std::vector<std::vector<char>> checked;  // checked[j][s]: Schreier generator verified
  };

  StabilizerChain() = default;

  /// The chain starts with the points of base_prefix, then extends with the
  /// smallest moved point whenever a residue fixes the whole base.
  StabilizerChain(std::size_t degree, std::span<const Permutation> generators,
                  std::span<const Point> base_prefix = {})
      : degree_(degree) {
    for (Point b : base_prefix) {
      if (b >= degree) raise(ErrorKind::invalid_input, "base point out of range");
      bool dup = false;
      for (const auto& L : levels_) dup |= (L.base == b);
      if (!dup) push_level(b);
    }
    for (const auto& g : generators) add_generator(g);
  }

  /// Adds g to the group; returns false when g was already a member.
  bool add_generator(const Permutation& g) {
    if (g.degree() != degree_) raise(ErrorKind::invalid_input, "generator degree mismatch");
    if (g.is_identity()) return false;
    auto [h, level] = sift(g, 0);
    if (h.is_identity()) return false;
    add_residue(std::move(h), 0, level);
    complete(level);
    return true;
  }

  std::size_t degree() const noexcept { return degree_; }
  std::size_t length() const noexcept { return levels_.size(); }
  const std::vector<Level>& levels() const noexcept { return levels_; }
  const Level& level(std::size_t i) const { return levels_[i]; }

  std::vector<Point> base() const {
    std::vector<Point> b;
    for (const auto& L : levels_) b.push_back(L.base);
    return b;
  }

  BigInt order() const {
    BigInt r = 1;
    for (const auto& L : levels_) r *= L.orbit.size();
    return r;
  }

  /// Order of the stabilizer of the first `level` base points.
  BigInt order_from(std::size_t level) const {
    BigInt r = 1;
    for (std::size_t i = level; i < levels_.size(); ++i) r *= levels_[i].orbit.size();
    return r;
  }

  /// Sifts g starting at level `from`; returns the residue and the level where sifting stopped.
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from = 0) const {
    for (std::size_t t = from; t < levels_.size(); ++t) {
      const Level& L = levels_[t];
      Point image = g(L.base);
      std::int32_t j = L.orbit_index[image];
      if (j < 0) return {std::move(g), t};
      if (image != L.base) g = g * L.inverse_transversal[j];
    }
    return {std::move(g), levels_.size()};
  }

  bool contains(const Permutation& g) const {
    if (g.degree() != degree_) return false;
    return sift(g, 0).first.is_identity();
  }

  /// Strong generators of the stabilizer of the first `level` base points.
  const std::vector<Permutation>& generators_at(std::size_t level) const {
    static const std::vector<Permutation> empty;
    return level < levels_.size() ? levels_[level].generators : empty;
  }

  /// Visits every element as u_{k-1}...u_0; the callback returns false to stop early.
  template <class F>
  void for_each_element(F&& f) const {
    Permutation id(degree_);
    visit(0, id, f);
  }

 private:
  template <class F>
  bool visit(std::size_t t, const Permutation& prefix, F& f) const {
    if (t == levels_.size()) return f(prefix);
    const Level& L = levels_[t];
    for (std::size_t j = 0; j < L.orbit.size(); ++j) {
      if (!visit(t + 1, L.transversal[j] * prefix, f)) return false;
    }
    return true;
  }

  void push_level(Point b) {
    Level L;
    L.base = b;
    L.orbit = {b};
    L.orbit_index.assign(degree_, -1);
    L.orbit_index[b] = 0;
    L.transversal.emplace_back(degree_);
    L.inverse_transversal.emplace_back(degree_);
    L.checked.emplace_back();
    levels_.push_back(std::move(L));
  }

  /// Extends the orbit of level t after generators from index first_new on were appended.
  void extend_orbit(std::size_t t, std::size_t first_new) {
    Level& L = levels_[t];
    const std::size_t old_size = L.orbit.size();
    auto try_add = [&](std::size_t j, const Permutation& g) {
      Point image = g(L.orbit[j]);
      if (L.orbit_index[image] >= 0) return;
      L.orbit_index[image] = static_cast<std::int32_t>(L.orbit.size());
      L.orbit.push_back(image);
      Permutation u = L.transversal[j] * g;
      L.inverse_transversal.push_back(u.inverse());
      L.transversal.push_back(std::move(u));
      L.checked.emplace_back();
    };
    for (std::size_t j = 0; j < old_size; ++j) {
      for (std::size_t s = first_new; s < L.generators.size(); ++s) try_add(j, L.generators[s]);
    }
    for (std::size_t j = old_size; j < L.orbit.size(); ++j) {
      for (std::size_t s = 0; s < L.generators.size(); ++s) try_add(j, L.generators[s]);
    }
  }

  /// Adds residue h (which fixes the first `stop` base points) to levels from..stop.
  void add_residue(Permutation h, std::size_t from, std::size_t stop) {
    if (stop == levels_.size()) {
      Point moved = 0;
      while (h(moved) == moved) ++moved;
      push_level(moved);
    }
    for (std::size_t t = from; t <= stop; ++t) {
      levels_[t].generators.push_back(h);
      extend_orbit(t, levels_[t].generators.size() - 1);
    }
  }

  /// Verifies Schreier generators from level `start` down to level 0.
  void complete(std::size_t start) {
    std::int64_t i = static_cast<std::int64_t>(start);
    while (i >= 0) {
      bool restarted = false;
      Level* L = &levels_[static_cast<std::size_t>(i)];
      for (std::size_t j = 0; j < L->orbit.size() && !restarted; ++j) {
        for (std::size_t s = 0; s < L->generators.size(); ++s) {
          auto& row = L->checked[j];
          if (row.size() < L->generators.size()) row.resize(L->generators.size(), 0);
          if (row[s]) continue;
          row[s] = 1;
          const Permutation& g = L->generators[s];
          Point image = g(L->orbit[j]);
          const std::int32_t k = L->orbit_index[image];
          Permutation schreier = L->transversal[j] * g * L->inverse_transversal[k];
          if (schreier.is_identity()) continue;
          auto [h, stop] = sift(std::move(schreier), static_cast<std::size_t>(i) + 1);
          if (h.is_identity()) continue;
          add_residue(std::move(h), static_cast<std::size_t>(i) + 1, stop);
          i = static_cast<std::int64_t>(std::min(stop, levels_.size() - 1));
          restarted = true;
          break;
        }
      }
      if (!restarted) --i;
    }
  }

  std::size_t degree_ = 0;
  std::vector<Level> levels_;
};

}  // namespace vtmotion

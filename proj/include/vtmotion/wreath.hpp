/**
 * @file wreath.hpp
 * @brief Imprimitive wreath products, the embedding of an imprimitive group
 * into G_B^B wr G^(blocks), and the sandwich check X^k <= G <= Y wr Sym(k).
 *
 * Point (delta, lambda) of the product is stored flat as lambda * m + delta.
 */
#pragma once

#include "blocks.hpp"
#include "perm_isomorphism.hpp"

namespace vtmotion {

class WreathLabeling {
 public:
  WreathLabeling(std::size_t inner, std::size_t outer) : inner_(inner), outer_(outer) {}

  std::size_t inner() const noexcept { return inner_; }
  std::size_t outer() const noexcept { return outer_; }
  std::size_t degree() const noexcept { return inner_ * outer_; }

  Point flat(Point delta, Point lambda) const { return static_cast<Point>(lambda * inner_ + delta); }
  Point delta(Point flat_point) const { return static_cast<Point>(flat_point % inner_); }
  Point lambda(Point flat_point) const { return static_cast<Point>(flat_point / inner_); }

  BlockSystem canonical_blocks() const {
    std::vector<std::vector<Point>> blocks(outer_);
    for (Point l = 0; l < outer_; ++l) {
      for (Point d = 0; d < inner_; ++d) blocks[l].push_back(flat(d, l));
    }
    return BlockSystem(degree(), std::move(blocks));
  }

  /// g acting on copy `lambda`, identity elsewhere.
  Permutation in_copy(const Permutation& g, Point lambda) const {
    Permutation id(degree());
    std::vector<Point> images(id.images().begin(), id.images().end());
    for (Point d = 0; d < inner_; ++d) images[flat(d, lambda)] = flat(g(d), lambda);
    return Permutation(std::move(images));
  }

  /// h permuting the copies.
  Permutation top(const Permutation& h) const {
    std::vector<Point> images(degree());
    for (Point l = 0; l < outer_; ++l) {
      for (Point d = 0; d < inner_; ++d) images[flat(d, l)] = flat(d, h(l));
    }
    return Permutation(std::move(images));
  }

  /// Element (g_0, ..., g_{k-1}; h) acting as (delta, lambda) -> (delta^{g_lambda}, lambda^h).
  Permutation element(const std::vector<Permutation>& base, const Permutation& h) const {
    std::vector<Point> images(degree());
    for (Point l = 0; l < outer_; ++l) {
      for (Point d = 0; d < inner_; ++d) images[flat(d, l)] = flat(base[l](d), h(l));
    }
    return Permutation(std::move(images));
  }

 private:
  std::size_t inner_, outer_;
};

/// G wr H in its imprimitive action on m*k points.
inline PermGroup wreath_product(const PermGroup& G, const PermGroup& H) {
  WreathLabeling lab(G.degree(), H.degree());
  std::vector<Permutation> gens;
  // One copy of G per H-orbit keeps the product complete when H is intransitive.
  for (const auto& orbit : orbits(H)) {
    for (const auto& g : G.generators()) gens.push_back(lab.in_copy(g, orbit.front()));
  }
  for (const auto& h : H.generators()) gens.push_back(lab.top(h));
  return PermGroup(lab.degree(), std::move(gens));
}

struct Embedding {
  Permutation f;                       // point w -> flat index of (delta, j)
  std::vector<Permutation> images;     // phi of each generator of G
  PermGroup target;                    // G_B^B wr G^(blocks)
  BlockSystem blocks;
  std::vector<Point> block;            // B, the block containing point 0
  bool relation_verified = false;      // f(w^g) = f(w)^phi(g) for all w, g
  bool images_in_target = false;
};

/// Relabels each block onto B through a transversal found by BFS over the generators.
inline Embedding embed_imprimitive(const PermGroup& G, const BlockSystem& system,
                                   const Limits& limits = default_limits()) {
  require_transitive(G);
  if (!is_invariant(G, system)) raise(ErrorKind::precondition, "block system is not invariant");
  const std::size_t n = G.degree();
  const std::size_t m = system.block_size();
  const std::size_t k = system.count();
  const std::vector<Point>& B = system.block_containing(0);
  const std::uint32_t home = system.block_of(0);

  // transversal[j] maps block `home` onto block j
  std::vector<std::optional<Permutation>> transversal(k);
  transversal[home] = Permutation(n);
  std::vector<std::uint32_t> queue{home};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t j = queue[head];
    for (const auto& g : G.generators()) {
      const std::uint32_t j2 = system.block_of(g(system.blocks()[j].front()));
      if (!transversal[j2]) {
        transversal[j2] = *transversal[j] * g;
        queue.push_back(j2);
      }
    }
  }
  std::vector<std::int32_t> local(n, -1);
  for (std::size_t i = 0; i < B.size(); ++i) local[B[i]] = static_cast<std::int32_t>(i);

  WreathLabeling lab(m, k);
  std::vector<Point> f_images(n);
  std::vector<Permutation> inverse_transversal;
  for (std::size_t j = 0; j < k; ++j) inverse_transversal.push_back(transversal[j]->inverse());
  for (Point w = 0; w < n; ++w) {
    const std::uint32_t j = system.block_of(w);
    const Point back = inverse_transversal[j](w);
    f_images[w] = lab.flat(static_cast<Point>(local[back]), j);
  }
  Permutation f(std::move(f_images));

  // phi(g): (delta, j) -> (delta^{t_j g t_{j'}^-1}, j')
  std::vector<Permutation> images;
  for (const auto& g : G.generators()) {
    std::vector<Permutation> base;
    std::vector<Point> top_images(k);
    for (std::uint32_t j = 0; j < k; ++j) {
      const std::uint32_t j2 = system.block_of(g(system.blocks()[j].front()));
      top_images[j] = j2;
      const Permutation local_map = *transversal[j] * g * inverse_transversal[j2];
      std::vector<Point> d_images(m);
      for (std::size_t d = 0; d < m; ++d) d_images[d] = static_cast<Point>(local[local_map(B[d])]);
      base.emplace_back(std::move(d_images));
    }
    images.push_back(lab.element(base, Permutation(std::move(top_images))));
  }

  InducedAction local_action = induced_action_on_block(G, B, limits);
  InducedAction top_action = induced_action_on_blocks(G, system);
  // Block indices follow the system's sorted order, as does the top action.
  PermGroup target = wreath_product(local_action.group, top_action.group);

  Embedding e{f, images, target, system, B, false, false};
  e.relation_verified = verify_embedding_relation(G.generators(), e.images, e.f);
  e.images_in_target = std::all_of(e.images.begin(), e.images.end(),
                                   [&](const Permutation& x) { return e.target.contains(x); });
  return e;
}

struct SandwichReport {
  std::vector<Point> block;
  PermGroup X;                          // <x^{G_B}>
  std::vector<Permutation> copies;      // generators of X moved into every block
  bool copies_in_group = false;         // X^k <= G
  bool embedding_in_target = false;     // G <= G_B^B wr G^(blocks)
  bool ok() const { return copies_in_group && embedding_in_target; }
};

/// Checks X^k <= G <= G_B^B wr G^(blocks) for x supported in one block.
inline SandwichReport verify_sandwich(const PermGroup& G, const BlockSystem& system, const Permutation& x,
                                      const Limits& limits = default_limits()) {
  require_transitive(G);
  const auto supp = support(x);
  if (supp.empty()) raise(ErrorKind::precondition, "element is the identity");
  const std::uint32_t b = system.block_of(supp.front());
  for (Point p : supp) {
    if (system.block_of(p) != b) raise(ErrorKind::precondition, "support spans more than one block");
  }
  const std::vector<Point>& B = system.blocks()[b];
  PermGroup stab = setwise_stabilizer(G, B, limits);
  PermGroup X = normal_closure(stab, x);

  SandwichReport report{B, X, {}, true, false};
  // Conjugating by an element mapping B to B_j moves X into B_j.
  std::vector<std::optional<Permutation>> to_block(system.count());
  to_block[b] = Permutation(G.degree());
  std::vector<std::uint32_t> queue{b};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t j = queue[head];
    for (const auto& g : G.generators()) {
      const std::uint32_t j2 = system.block_of(g(system.blocks()[j].front()));
      if (!to_block[j2]) {
        to_block[j2] = *to_block[j] * g;
        queue.push_back(j2);
      }
    }
  }
  for (std::size_t j = 0; j < system.count(); ++j) {
    for (const auto& gen : X.generators()) {
      Permutation c = conjugate(gen, *to_block[j]);
      report.copies_in_group = report.copies_in_group && G.contains(c);
      report.copies.push_back(std::move(c));
    }
  }
  const Embedding e = embed_imprimitive(G, system, limits);
  report.embedding_in_target = e.relation_verified && e.images_in_target;
  return report;
}

}  // namespace vtmotion

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace vtmotion;

namespace {

Permutation cyc(std::size_t n, std::vector<std::vector<Point>> cycles) { return Permutation::from_cycles(n, cycles); }

const PermGroup kSym2(2, {Permutation::from_cycles(2, {{0, 1}})});

}  // namespace

TEST(WreathLabeling, FlatIndexIsCopyMajor) {
  WreathLabeling lab(3, 4);
  EXPECT_EQ(lab.flat(2, 1), 5u);
  EXPECT_EQ(lab.delta(5), 2u);
  EXPECT_EQ(lab.lambda(5), 1u);
  const auto blocks = lab.canonical_blocks();
  EXPECT_EQ(blocks.blocks()[2], (std::vector<Point>{6, 7, 8}));
  // element(base, top) moves (d, l) to (d^{base[l]}, l^top)
  const auto x = lab.element({cyc(3, {{0, 1}}), Permutation(3), Permutation(3), cyc(3, {{0, 1, 2}})}, cyc(4, {{0, 3}}));
  EXPECT_EQ(x(lab.flat(0, 0)), lab.flat(1, 3));
  EXPECT_EQ(x(lab.flat(2, 3)), lab.flat(0, 0));
}

TEST(WreathProduct, Orders) {
  EXPECT_EQ(wreath_product(kSym2, kSym2).order(), 8);
  EXPECT_EQ(wreath_product(kSym2, construct("Sym(3)")).order(), 48);
  const auto W = wreath_product(construct("Sym(3)"), kSym2);
  EXPECT_EQ(W.order(), 72);
  EXPECT_EQ(W.degree(), 6u);
  EXPECT_TRUE(is_invariant(W, BlockSystem(6, {{0, 1, 2}, {3, 4, 5}})));
}

TEST(WreathProduct, OrderFormulaAndTopAction) {
  const std::vector<std::string> names{"Sym(2)", "C(3)", "Sym(3)", "D(4)", "C(5)"};
  for (const auto& a : names) {
    for (const auto& b : names) {
      const PermGroup G = construct(a), H = construct(b);
      const PermGroup W = wreath_product(G, H);
      BigInt expected = H.order();
      for (std::size_t i = 0; i < H.degree(); ++i) expected *= G.order();
      EXPECT_EQ(W.order(), expected) << a << " wr " << b;
      const auto blocks = WreathLabeling(G.degree(), H.degree()).canonical_blocks();
      ASSERT_TRUE(is_invariant(W, blocks));
      const auto top = induced_action_on_blocks(W, blocks);
      EXPECT_TRUE(permutation_isomorphic(top.group, H).has_value()) << a << " wr " << b;
    }
  }
}

TEST(WreathProduct, IntransitiveTopGroup) {
  // H = <(0 1)> on 3 points has two orbits; the order formula still holds.
  const PermGroup H(3, {cyc(3, {{0, 1}})});
  const auto W = wreath_product(construct("C(3)"), H);
  EXPECT_EQ(W.order(), 27 * 2);
}

TEST(Embedding, RotationOfSixPoints) {
  const PermGroup G(6, {cyc(6, {{0, 1, 2, 3, 4, 5}})});
  const BlockSystem sys(6, {{0, 3}, {1, 4}, {2, 5}});
  const auto e = embed_imprimitive(G, sys);
  EXPECT_TRUE(e.relation_verified);
  EXPECT_TRUE(e.images_in_target);
  const auto full = wreath_product(kSym2, construct("Sym(3)"));
  EXPECT_EQ(e.target.order(), 24);  // Sym(2) wr C(3)
  for (const auto& t : e.target.generators()) EXPECT_TRUE(full.contains(t));
  // Direct evaluation of f(w^g) = f(w)^phi(g) on the single generator.
  const auto& g = G.generators().front();
  for (Point w = 0; w < 6; ++w) EXPECT_EQ(e.f(g(w)), e.images.front()(e.f(w)));
}

TEST(Embedding, WreathWithOwnBlocksIsIdentity) {
  const auto G = wreath_product(kSym2, construct("Sym(3)"));
  const auto e = embed_imprimitive(G, WreathLabeling(2, 3).canonical_blocks());
  EXPECT_TRUE(e.f.is_identity());
  EXPECT_TRUE(e.relation_verified);
  EXPECT_TRUE(e.images_in_target);
}

TEST(Embedding, NonInvariantPartitionIsRejected) {
  const BlockSystem sys(4, {{0, 1}, {2, 3}});
  EXPECT_THROW(embed_imprimitive(construct("Alt(4)"), sys), Error);
}

TEST(Embedding, FiftySamplesAreSound) {
  const auto samples = oracle::imprimitive_samples(50);
  ASSERT_EQ(samples.size(), 50u);
  for (const auto& s : samples) {
    const auto e = embed_imprimitive(s.group, s.blocks);
    EXPECT_TRUE(e.relation_verified) << s.name;
    EXPECT_TRUE(e.images_in_target) << s.name;
    // Independent recheck of the relation, over every point and generator.
    for (std::size_t i = 0; i < s.group.generators().size(); ++i) {
      const auto& g = s.group.generators()[i];
      for (Point w = 0; w < s.group.degree(); ++w) ASSERT_EQ(e.f(g(w)), e.images[i](e.f(w))) << s.name;
    }
  }
}

TEST(Sandwich, BaseGroupCopies) {
  const auto G = wreath_product(kSym2, construct("Sym(3)"));
  const auto r = verify_sandwich(G, WreathLabeling(2, 3).canonical_blocks(), cyc(6, {{0, 1}}));
  EXPECT_EQ(r.X.order(), 2);
  EXPECT_EQ(r.copies.size(), 3u);
  EXPECT_TRUE(r.ok());
}

TEST(Sandwich, AlternatingInsideSym4WreathSym2) {
  const auto G = wreath_product(construct("Sym(4)"), kSym2);
  const auto r = verify_sandwich(G, WreathLabeling(4, 2).canonical_blocks(), cyc(8, {{0, 1, 2}}));
  EXPECT_EQ(r.X.order(), 12);
  EXPECT_TRUE(permutation_isomorphic(PermGroup(4, [&] {
                                       std::vector<Permutation> gens;
                                       const std::vector<Point> B{0, 1, 2, 3};
                                       for (const auto& g : r.X.generators()) gens.push_back(restrict_to(g, B));
                                       return gens;
                                     }()),
                                     construct("Alt(4)"))
                  .has_value());
  EXPECT_TRUE(r.ok());
}

TEST(Sandwich, SupportAcrossBlocksIsAPreconditionError) {
  const PermGroup G(6, {cyc(6, {{0, 1, 2, 3, 4, 5}})});
  const BlockSystem sys(6, {{0, 3}, {1, 4}, {2, 5}});
  try {
    verify_sandwich(G, sys, cyc(6, {{0, 3}, {1, 4}}));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::precondition);
  }
}

TEST(Sandwich, AlwaysHoldsForWreathProducts) {
  for (const auto& inner : {"Sym(2)", "C(3)", "Sym(3)", "Alt(4)", "D(5)"}) {
    for (const auto& outer : {"Sym(2)", "C(3)", "D(4)"}) {
      const PermGroup X = construct(inner), H = construct(outer);
      const auto G = wreath_product(X, H);
      const WreathLabeling lab(X.degree(), H.degree());
      for (const auto& x : X.generators()) {
        EXPECT_TRUE(verify_sandwich(G, lab.canonical_blocks(), lab.in_copy(x, 0)).ok()) << inner << " wr " << outer;
      }
    }
  }
}

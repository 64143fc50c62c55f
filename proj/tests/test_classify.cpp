#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace vtmotion;

namespace {

bool iso(const Graph& a, const Graph& b) {
  return a.order() == b.order() && oracle::canonical_string(a) == oracle::canonical_string(b);
}

}  // namespace

TEST(Classify, MotionTwoExamples) {
  const auto k4 = classify_graph(complete_graph(4));
  EXPECT_EQ(k4.motion, 2u);
  EXPECT_EQ(k4.form.tag, FormTag::lex_Km);
  EXPECT_EQ(k4.form.m, 4u);
  EXPECT_EQ(k4.form.theta->order(), 1u);

  const auto c4 = classify_graph(cycle_graph(4));
  EXPECT_EQ(c4.form.tag, FormTag::lex_mK1);
  EXPECT_EQ(c4.form.m, 2u);
  EXPECT_EQ(*c4.form.theta, complete_graph(2));

  const auto g = classify_graph(lex_product(empty_graph(3), cycle_graph(5)));
  EXPECT_EQ(g.form.tag, FormTag::lex_mK1);
  EXPECT_EQ(g.form.m, 3u);
  EXPECT_TRUE(iso(*g.form.theta, cycle_graph(5)));
  EXPECT_TRUE(g.verified());
}

TEST(Classify, MotionFourLexExamples) {
  const auto c5 = classify_graph(cycle_graph(5));
  EXPECT_EQ(c5.motion, 4u);
  EXPECT_EQ(c5.form.tag, FormTag::lex_C5);

  const auto prism = classify_graph(prism_graph(3));
  EXPECT_EQ(prism.form.label(), "lex_prism(3)");

  const auto c6 = classify_graph(cycle_graph(6));
  EXPECT_EQ(c6.form.label(), "lex_coprism(3)");
  EXPECT_TRUE(c6.verified());

  const auto big = classify_graph(lex_product(cycle_graph(5), complete_graph(2)));
  EXPECT_EQ(big.form.tag, FormTag::lex_C5);
  EXPECT_TRUE(iso(*big.form.theta, complete_graph(2)));
}

TEST(Classify, InfExamples) {
  for (std::size_t r : {3u, 4u}) {
    const auto rep = classify_graph(spx_graph(r));
    EXPECT_EQ(rep.motion, 4u) << r;
    ASSERT_TRUE(rep.verified()) << r;
    // inf(1,0) over C_2r is either the reported form or a listed alternative.
    EXPECT_EQ(rep.form.tag, FormTag::inf) << r;
    if (rep.form.label() == "inf(1,0)") {
      EXPECT_TRUE(iso(*rep.form.sigma, cycle_graph(2 * r))) << r;
    } else {
      EXPECT_NE(std::find(rep.alternatives.begin(), rep.alternatives.end(), "inf(1,0)"), rep.alternatives.end()) << r;
    }
    EXPECT_EQ(rep.form.reconstruction.order(), 4 * r);
  }
}

TEST(Classify, ReconstructionsAreIsomorphicToTheInput) {
  for (const Graph& g : {cycle_graph(6), prism_graph(4), spx_graph(3), lex_product(complete_graph(2), cycle_graph(6)),
                         circulant_graph(8, {1, 2})}) {
    const auto rep = classify_graph(g);
    if (rep.motion != 2 && rep.motion != 4) continue;
    ASSERT_TRUE(rep.verified()) << to_graph6(g);
    EXPECT_TRUE(are_isomorphic(rep.form.reconstruction, g)) << to_graph6(g);
  }
}

TEST(Classify, OtherMotions) {
  const auto c7 = classify_graph(circulant_graph(7, {1, 2}));
  EXPECT_EQ(c7.form.tag, FormTag::none);
  EXPECT_EQ(c7.motion, 6u);
  EXPECT_FALSE(c7.falsification());
  const auto pet = classify_graph(petersen_graph());
  EXPECT_EQ(pet.motion, 6u);
  EXPECT_EQ(pet.form.tag, FormTag::none);
}

TEST(Classify, NonTransitiveInputIsAPreconditionError) {
  for (const Graph& g : {path_graph(3), complete_bipartite(1, 3)}) {
    try {
      classify_graph(g);
      FAIL() << "expected an error";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::precondition);
    }
  }
  EXPECT_THROW(decompose_motion2(cycle_graph(5)), Error);
  EXPECT_THROW(decompose_motion4(complete_graph(3)), Error);
  EXPECT_THROW(decompose_motion4(petersen_graph()), Error);
}

TEST(Grids, Sizes) {
  const auto c6 = inf_grid({{"C6", cycle_graph(6)}}, {2});
  EXPECT_EQ(c6.size() % 4, 0u);
  EXPECT_EQ(c6.size() / 4, matchings_up_to_symmetry(cycle_graph(6)).size());
  EXPECT_EQ(lex_grid(lex_delta_family(), lex_theta_family()).size(), 10u);
}

TEST(Grids, MatchingsUpToSymmetryAreInequivalent) {
  // C6 has 15 perfect matchings falling into 5 classes under D(6).
  const Graph sigma = cycle_graph(6);
  const auto classes = matchings_up_to_symmetry(sigma);
  EXPECT_EQ(classes.size(), 5u);
  const auto aut = oracle::automorphisms(sigma);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      for (const auto& g : aut) {
        bool same = true;
        for (auto [a, b] : classes[i].pairs()) same &= classes[j].is_pair(g(a), g(b));
        EXPECT_FALSE(same);
      }
    }
  }
}

TEST(Grids, LexGridClassifiesAsBuilt) {
  for (const auto& item : lex_grid(lex_delta_family(), lex_theta_family())) {
    const auto rep = classify_graph(item.graph);
    ASSERT_TRUE(rep.motion == 2 || rep.motion == 4) << item.name;
    EXPECT_TRUE(rep.verified()) << item.name;
  }
}

TEST(Grids, HardCaseGraphsAreClassified) {
  const auto items = hard_case_graphs(3, 2);
  ASSERT_FALSE(items.empty());
  for (const auto& item : items) {
    if (!is_vertex_transitive(item.graph)) continue;
    const auto rep = classify_graph(item.graph);
    EXPECT_NE(rep.motion % 2, 1u) << item.name;
    EXPECT_FALSE(rep.falsification()) << item.name;
  }
}

TEST(Corpus, QuickRunHasNoFalsification) {
  CorpusOptions opts;
  opts.quick = true;
  opts.circulant_max = 10;
  const auto report = verify_corpus(default_corpus(opts), 2);
  const auto& s = report.summary;
  EXPECT_GT(s.graphs, 100u);
  EXPECT_EQ(s.odd_prime_motions, 0u);
  EXPECT_EQ(s.unclassified, 0u);
  EXPECT_EQ(s.errors, 0u);
  EXPECT_EQ(s.inf_vt_mismatches, 0u);
  EXPECT_EQ(s.inf_motion_not_2_or_4, 0u);
  EXPECT_TRUE(s.ok());
}

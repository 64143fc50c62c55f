#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "oracles.hpp"

using namespace vtmotion;

namespace {

const PermGroup kSym2(2, {Permutation::from_cycles(2, {{0, 1}})});

const TableRow& row(int table, int r) {
  for (const auto& x : table_data().rows) {
    if (x.table == table && x.row == r) return x;
  }
  throw std::runtime_error("missing row");
}

bool two_transitive(const PermGroup& G) {
  const std::vector<Point> zero{0};
  return is_transitive(G) && orbits(pointwise_stabilizer(G, zero)).size() == 2;
}

/// Every subgroup of a small group, as the join-closure of its cyclic subgroups.
std::set<std::set<Permutation>> all_subgroups(const PermGroup& W) {
  const auto elems = oracle::closure(W);
  std::set<std::set<Permutation>> cyclic;
  for (const auto& g : elems) cyclic.insert(oracle::closure(W.degree(), {g}));
  std::set<std::set<Permutation>> found = cyclic;
  std::vector<std::set<Permutation>> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<std::set<Permutation>> next;
    for (const auto& H : frontier) {
      for (const auto& C : cyclic) {
        if (std::includes(H.begin(), H.end(), C.begin(), C.end())) continue;
        std::vector<Permutation> gens(H.begin(), H.end());
        gens.insert(gens.end(), C.begin(), C.end());
        auto J = oracle::closure(W.degree(), gens);
        if (found.insert(J).second) next.push_back(std::move(J));
      }
    }
    frontier = std::move(next);
  }
  return found;
}

}  // namespace

TEST(TableData, ShippedFileMatchesEmbeddedCopy) {
  std::ifstream in(std::string(VTMOTION_SOURCE_DIR) + "/data/tables.txt");
  ASSERT_TRUE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(buf.str(), std::string(kTableData.substr(1)));
}

TEST(TableData, EveryRowPresentOnce) {
  const auto& rows = table_data().rows;
  std::map<int, std::set<int>> seen;
  for (const auto& r : rows) EXPECT_TRUE(seen[r.table].insert(r.row).second) << r.id();
  EXPECT_EQ(seen[1].size(), 14u);
  EXPECT_EQ(seen[2].size(), 5u);
  EXPECT_EQ(seen[3].size(), 2u);
  EXPECT_EQ(seen[4].size(), 2u);
  EXPECT_FALSE(row(1, 6).constructible());  // Mathieu rows are metadata only
  EXPECT_THROW(construct("M11(11)"), Error);
}

TEST(TableData, RejectsMalformedInput) {
  EXPECT_THROW(parse_table_data("version 1\n1|1|2\n"), Error);
  EXPECT_THROW(parse_table_data("version 2\n"), Error);
}

TEST(Construct, OrdersMatchFormulas) {
  EXPECT_EQ(construct("AGL1(5)").order(), 20);
  EXPECT_EQ(construct("PGL2(5)").order(), 120);
  EXPECT_EQ(construct("PGL2(5)").degree(), 6u);
  EXPECT_EQ(construct("PGL3(2)").order(), 168);
  EXPECT_EQ(construct("PGL3(2)").degree(), 7u);
  EXPECT_EQ(construct("AGL(3,2)").order(), 1344);
  EXPECT_EQ(construct("D(5)").order(), 10);
  for (std::size_t p : {3, 5, 7, 11, 13}) {
    const std::map<std::string, std::size_t> vars{{"p", p}};
    EXPECT_EQ(construct("AGL1(p)", vars).order(), p * (p - 1));
    EXPECT_EQ(construct("PGL2(p)", vars).order(), (p + 1) * p * (p - 1));
    EXPECT_EQ(construct("PSL2(p)", vars).order(), (p + 1) * p * (p - 1) / 2);
  }
  // |GL_d(2)| = prod (2^d - 2^i)
  const std::size_t gl[] = {1, 1, 6, 168, 20160};
  for (std::size_t d = 1; d <= 4; ++d) {
    EXPECT_EQ(construct("AGL(" + std::to_string(d) + ",2)").order(), (std::size_t{1} << d) * gl[d]);
  }
}

TEST(Construct, OrdersMatchClosure) {
  for (const auto& name : {"AGL1(5)", "PGL2(5)", "PSL2(5)", "PGL3(2)", "D(6)", "EvenSym(3)", "SuperflipSym(3)"}) {
    const auto G = construct(name);
    EXPECT_EQ(G.order(), oracle::closure(G).size()) << name;
  }
}

TEST(Construct, DoublyTransitiveFamilies) {
  for (std::size_t p : {3, 5, 7, 11, 13, 17, 19, 23}) {
    const std::map<std::string, std::size_t> vars{{"p", p}};
    EXPECT_TRUE(two_transitive(construct("AGL1(p)", vars))) << p;
    EXPECT_TRUE(two_transitive(construct("PGL2(p)", vars))) << p;
  }
}

TEST(Construct, ParameterErrors) {
  EXPECT_THROW(construct("AGL1(9)"), Error);
  EXPECT_THROW(construct("PGL2(29)"), Error);
  EXPECT_THROW(construct("AGL(5,2)"), Error);
  try {
    construct("M23(23)");
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::not_constructible);
  }
}

TEST(TableRows, PrimitiveRowsPass) {
  const auto r22 = check_table_row(row(2, 2));
  EXPECT_EQ(r22.status, CheckStatus::pass);
  EXPECT_EQ(r22.instances.front().witness_closure_order, 10);
  const auto r23 = check_table_row(row(2, 3));
  EXPECT_EQ(r23.status, CheckStatus::pass);
  EXPECT_EQ(r23.instances.front().witness_closure_order, 60);
  for (int r = 2; r <= 5; ++r) {
    for (const auto& inst : check_table_row(row(2, r)).instances) {
      EXPECT_GT(inst.witnesses, 0u);
      EXPECT_EQ(inst.matching, inst.witnesses) << "row 2." << r;
    }
  }
}

TEST(TableRows, SymmetricRowMindegClaim) {
  const auto r = check_table_row(row(1, 1));
  EXPECT_EQ(r.status, CheckStatus::pass);
  bool found = false;
  for (const auto& inst : r.instances) {
    if (inst.m != 3) continue;
    for (const auto& c : inst.mindeg) {
      found = true;
      EXPECT_EQ(c.observed, 2u);
      EXPECT_TRUE(c.ok);
    }
  }
  EXPECT_TRUE(found);
}

TEST(TableRows, AllConstructibleRowsAreSettled) {
  for (const auto& r : table_data().rows) {
    const auto rep = check_table_row(r);
    if (!r.constructible()) {
      EXPECT_EQ(rep.status, CheckStatus::skip) << r.id();
      continue;
    }
    EXPECT_NE(rep.status, CheckStatus::fail) << r.id();
    // The only non-pass outcome is the marked boundary instance of row 2.1.
    if (rep.status == CheckStatus::discrepancy) {
      EXPECT_EQ(r.id(), "2.1");
      for (const auto& inst : rep.instances) EXPECT_EQ(inst.status != CheckStatus::pass, inst.boundary);
    }
  }
}

TEST(TableRows, AlternatingRowBoundaryAtFourPoints) {
  // At m = 4 every 2^2-element of Sym(4) lies in the Klein group, which is normal.
  const auto r = check_table_row(row(2, 1));
  ASSERT_FALSE(r.instances.empty());
  const auto& m4 = r.instances.front();
  EXPECT_EQ(m4.m, 4u);
  EXPECT_TRUE(m4.boundary);
  EXPECT_EQ(m4.witness_closure_order, 4);
  EXPECT_EQ(m4.matching, 0u);
  for (std::size_t i = 1; i < r.instances.size(); ++i) EXPECT_EQ(r.instances[i].status, CheckStatus::pass);
}

TEST(PCycleClassifier, Examples) {
  const auto s3 = classify_p_cycle_group(wreath_product(construct("Sym(3)"), kSym2));
  EXPECT_EQ(s3.p, 2u);
  ASSERT_TRUE(s3.identified());
  EXPECT_EQ(s3.rows.front().row, "1.1");
  EXPECT_TRUE(s3.predicted_mindeg_is_p);
  EXPECT_EQ(s3.direct_mindeg, 2u);

  const auto a4 = wreath_product(construct("Alt(4)"), kSym2);
  EXPECT_EQ(a4.order(), 288);
  const auto r = classify_p_cycle_group(a4);
  EXPECT_EQ(r.p, 3u);
  EXPECT_EQ(r.rows.front().row, "1.2");
  EXPECT_TRUE(r.cond_C);
  EXPECT_TRUE(r.predicted_mindeg_is_p);
  EXPECT_EQ(r.direct_mindeg, 3u);
  EXPECT_EQ(oracle::min_support(oracle::closure(a4)), 3u);

  const auto c5 = classify_p_cycle_group(wreath_product(construct("C(5)"), kSym2));
  EXPECT_EQ(c5.p, 5u);
  EXPECT_EQ(c5.rows.front().row, "1.3");
  EXPECT_TRUE(c5.cond_C);
  EXPECT_EQ(c5.direct_mindeg, 5u);
}

TEST(PCycleClassifier, PredictionsAgreeWithDirectMindeg) {
  for (const auto& name : {"Sym(3)", "Alt(4)", "C(5)", "AGL1(5)", "Alt(5)", "C(7)", "AGL1(7)", "PGL3(2)"}) {
    const auto r = classify_p_cycle_group(wreath_product(construct(name), kSym2));
    EXPECT_TRUE(r.consistent) << name;
    EXPECT_TRUE(r.sandwich_ok) << name;
  }
  for (const auto& name : {"PGL2(5)", "PGL2(7)", "AGL1(11)"}) {
    EXPECT_TRUE(classify_p_cycle_group(construct(name)).consistent) << name;
  }
  EXPECT_THROW(classify_p_cycle_group(construct("C(6)")), Error);
}

TEST(TwoTwoClassifier, Examples) {
  const auto agl = classify_22_group(wreath_product(construct("AGL1(5)"), kSym2));
  EXPECT_EQ(agl.kind, Case22::prim);
  EXPECT_EQ(agl.m, 5u);
  EXPECT_EQ(agl.k, 2u);
  ASSERT_FALSE(agl.rows.empty());
  EXPECT_EQ(agl.rows.front().row, "2.2");

  const auto flip = classify_22_group(wreath_product(construct("SuperflipSym(3)"), kSym2));
  EXPECT_EQ(flip.kind, Case22::cross);
  EXPECT_EQ(flip.rows.front().row, "4.1");

  const auto s4 = classify_22_group(construct("Sym(4)"));
  EXPECT_EQ(s4.kind, Case22::prim);
  EXPECT_EQ(s4.rows.front().row, "2.1");
  EXPECT_NE(s4.note.find("mindeg <= 3"), std::string::npos);

  EXPECT_EQ(classify_22_group(wreath_product(kSym2, construct("Sym(3)"))).kind, Case22::smaller_mindeg);
  EXPECT_THROW(classify_22_group(construct("C(5)")), Error);
}

TEST(TwoTwoClassifier, SandwichHoldsOnSamples) {
  for (const auto& name : {"AGL1(5)", "PGL3(2)", "PSL2(5)", "SuperflipSym(3)", "C2wrSym(3)"}) {
    const auto r = classify_22_group(wreath_product(construct(name), kSym2));
    EXPECT_TRUE(r.sandwich_ok) << name;
  }
}

TEST(SubgroupPairs, CountsMatchJoinClosure) {
  for (std::size_t m : {2, 3}) {
    const auto W = construct("C2wrSym(m)", {{"m", m}});
    const std::size_t expected = m == 2 ? 10 : 98;
    EXPECT_EQ(all_subgroups(W).size(), expected);
    EXPECT_EQ(count_subgroups_by_triples(W), expected);
    EXPECT_EQ(enumerate_small_subgroup_pairs(m).subgroup_count, expected);
  }
}

TEST(SubgroupPairs, SmallestCase) {
  const auto r = enumerate_small_subgroup_pairs(2);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.group_order, 8u);
  ASSERT_EQ(r.pairs.size(), 2u);
  EXPECT_EQ(r.pairs[0].kernel, KernelKind::superflip);
  EXPECT_EQ(r.pairs[0].y_order, 4);
  EXPECT_EQ(r.pairs[1].kernel, KernelKind::full);
}

TEST(SubgroupPairs, ThreeCopies) {
  const auto r = enumerate_small_subgroup_pairs(3);
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(r.closed_under_conjugation);
  EXPECT_EQ(r.rows_realized, (std::vector<int>{1, 2}));
  for (const auto& p : r.pairs) EXPECT_NE(p.kernel, KernelKind::trivial);
  // The closure of a 2^2-element inside the base group is E+; one projecting to a
  // transposition generates E+ : Sym(3).
  EXPECT_EQ(r.kernel_element_closure_order, 4);
  EXPECT_EQ(r.cross_element_closure_order, 24);
  EXPECT_TRUE(r.kernel_closure_is_table3_x);
  EXPECT_TRUE(r.cross_closure_is_table4_x);
}

TEST(SubgroupPairs, RangeIsEnforced) {
  EXPECT_THROW(enumerate_small_subgroup_pairs(4), Error);
}

/**
 * @file group_classify.hpp
 * @brief Classifiers for transitive groups containing a p-cycle or a 2^2-element.
 * Both identify the local pair (X, Y) against the table rows and verify the
 * sandwich X^k <= G <= G_B^B wr G^(blocks) directly.
 */
#pragma once

#include "table_rows.hpp"

namespace vtmotion {

struct RowMatch {
  std::string row;          // "table.row"
  std::string X, Y;         // the row's groups at this degree
  bool closure_matches = false;  // computed X permutation isomorphic to the row's X
  MindegTag mindeg = MindegTag::not_applicable;
};

namespace detail {

inline BigInt factorial(std::size_t n) {
  BigInt f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

inline bool divides(const BigInt& a, const BigInt& b) { return a != 0 && b % a == 0; }

/// Y (primitive of degree m) is Alt(m) or Sym(m), decided by order.
inline bool is_alt_or_sym(const PermGroup& Y) {
  const BigInt f = factorial(Y.degree());
  return Y.order() == f || 2 * Y.order() == f;
}

inline bool isomorphic_small(const PermGroup& a, const PermGroup& b, const Limits& limits) {
  if (a.degree() != b.degree() || a.order() != b.order()) return false;
  if (a.degree() > kPermIsoMaxDegree) return false;
  return permutation_isomorphic(a, b, limits).has_value();
}

inline PermGroup restricted(const PermGroup& G, std::span<const Point> domain) {
  std::vector<Permutation> gens;
  for (const auto& g : G.generators()) gens.push_back(restrict_to(g, domain));
  return PermGroup(domain.size(), std::move(gens));
}

/// Y inside some W-conjugate of Z, by scanning the elements of W.
inline bool contained_in_conjugate(const PermGroup& Y, const PermGroup& Z, const PermGroup& W, const Limits& limits) {
  if (!divides(Y.order(), Z.order())) return false;
  for (const auto& w : elements(W, limits.enumeration_cap)) {
    const Permutation wi = w.inverse();
    if (std::all_of(Y.generators().begin(), Y.generators().end(),
                    [&](const Permutation& g) { return Z.contains(conjugate(g, wi)); })) {
      return true;
    }
  }
  return false;
}

struct ElementScan {
  std::optional<Permutation> transposition, three_cycle, two_two;
  std::optional<Permutation> smallest_prime_cycle;
  std::vector<Permutation> two_two_all;
};

inline ElementScan scan_elements(const PermGroup& G, const Limits& limits) {
  ElementScan s;
  for (const auto& g : elements(G, limits.enumeration_cap)) {
    const ElementClass c = classify_element(g);
    if (c.kind == ElementKind::transposition && !s.transposition) s.transposition = g;
    if (c.kind == ElementKind::p_cycle && c.cycle_length == 3 && !s.three_cycle) s.three_cycle = g;
    if (c.kind == ElementKind::two_two) {
      if (!s.two_two) s.two_two = g;
      s.two_two_all.push_back(g);
    }
    if (c.kind == ElementKind::transposition || c.kind == ElementKind::p_cycle) {
      if (!s.smallest_prime_cycle || c.cycle_length < support_size(*s.smallest_prime_cycle)) s.smallest_prime_cycle = g;
    }
  }
  return s;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// p-cycles

struct PCycleReport {
  std::size_t p = 0;
  Permutation x;
  std::vector<Point> block;  // smallest block containing supp(x)
  BlockSystem system;
  std::size_t m = 0, k = 0;
  PermGroup X, Y;            // on m points: <x^{G_B}> and G_B^B
  std::vector<RowMatch> rows;
  bool cond_C = false;
  bool predicted_mindeg_is_p = false;
  bool predictions_agree = true;  // every matched row predicts the same
  std::optional<std::size_t> direct_mindeg;
  bool consistent = false;   // prediction agrees with the direct computation
  bool sandwich_ok = false;
  std::string note;
  bool identified() const { return !rows.empty(); }
};

inline std::vector<RowMatch> identify_table1(std::size_t p, const PermGroup& X, const PermGroup& Y,
                                             const Limits& limits) {
  std::vector<RowMatch> out;
  const std::size_t m = X.degree();
  for (const TableRow* row : table_data().table(1)) {
    const auto inst = row->instantiate(p, m);
    if (!inst) continue;
    const PermGroup Xr = construct(inst->x_spec());
    const PermGroup Yr = construct(inst->y_spec());
    const bool x_ok = detail::isomorphic_small(X, Xr, limits);
    if (!x_ok || !detail::divides(X.order(), Y.order()) || !detail::divides(Y.order(), Yr.order())) continue;
    out.push_back({row->id(), inst->x_spec().name(), inst->y_spec().name(), true, row->mindeg});
  }
  return out;
}

inline PCycleReport classify_p_cycle_group(const PermGroup& G, const Limits& limits = default_limits()) {
  require_transitive(G);
  const auto scan = detail::scan_elements(G, limits);
  if (!scan.smallest_prime_cycle) raise(ErrorKind::precondition, "group contains no cycle of prime length");
  PCycleReport r;
  r.x = *scan.smallest_prime_cycle;
  r.p = support_size(r.x);
  const auto supp = support(r.x);
  r.block = block_closure(G, supp);
  r.system = block_system_from_block(G, r.block);
  r.m = r.block.size();
  r.k = G.degree() / r.m;
  const PermGroup stab = setwise_stabilizer(G, r.block, limits);
  r.Y = detail::restricted(stab, r.block);
  r.X = detail::restricted(normal_closure(stab, r.x), r.block);
  r.rows = identify_table1(r.p, r.X, r.Y, limits);

  std::vector<Point> rest;
  for (Point q = 0; q < G.degree(); ++q) {
    if (!std::binary_search(r.block.begin(), r.block.end(), q)) rest.push_back(q);
  }
  const PermGroup local = detail::restricted(pointwise_stabilizer(G, rest), r.block);
  r.cond_C = detail::isomorphic_small(local, r.X, limits);
  if (r.rows.empty()) {
    r.note = "local pair not recognized among constructible rows";
  } else {
    r.predicted_mindeg_is_p = predicts_mindeg_p(r.rows.front().mindeg, r.p, r.cond_C);
    for (const auto& row : r.rows) {
      r.predictions_agree = r.predictions_agree && predicts_mindeg_p(row.mindeg, r.p, r.cond_C) == r.predicted_mindeg_is_p;
    }
  }
  try {
    r.direct_mindeg = minimal_degree(G, limits).degree;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::cap_exceeded) throw;
  }
  r.consistent = r.identified() && r.predictions_agree && r.direct_mindeg &&
                 ((*r.direct_mindeg == r.p) == r.predicted_mindeg_is_p);
  r.sandwich_ok = verify_sandwich(G, r.system, r.x, limits).ok();
  return r;
}

// ---------------------------------------------------------------------------
// 2^2-elements

enum class Case22 { prim, cross, smaller_mindeg, unclassified };

inline std::string to_string(Case22 c) {
  switch (c) {
    case Case22::prim: return "case_prim";
    case Case22::cross: return "case_cross";
    case Case22::smaller_mindeg: return "smaller_mindeg";
    case Case22::unclassified: return "unclassified";
  }
  return "?";
}

struct TwoTwoReport {
  Case22 kind = Case22::unclassified;
  Permutation x;                       // the 2^2-element driving the case
  int configuration = 0;               // support vs minimal blocks: 0 primitive, 1 one block, 2 swaps two blocks, 3 meets two blocks
  std::optional<Permutation> small_witness;  // transposition or 3-cycle, when present
  std::optional<BlockSystem> minimal_blocks;
  std::optional<BlockSystem> pairs;    // size-2 system used for the cross case
  std::optional<BlockSystem> coarse;   // D-blocks (cross case) or the local block system (prim case)
  bool hard = false;                   // cross case reached with x inside the base group
  std::size_t m = 0, k = 0;
  PermGroup X, Y;
  std::vector<RowMatch> rows;          // table 2 rows (prim) or table 4 rows (cross)
  std::vector<RowMatch> table3_rows;   // cross case: table 3 rows whose X matches
  bool y_in_wreath = true;             // cross case: Y <= C2 wr Sym(m) under the relabeling
  bool contains_even = false;          // cross case: E+ <= Y
  bool sandwich_ok = false;
  std::string note;
};

namespace detail {

inline void fill_prim(TwoTwoReport& r, const PermGroup& G, std::vector<Point> B, const Permutation& x,
                      const Limits& limits) {
  r.kind = Case22::prim;
  r.x = x;
  const BlockSystem system = block_system_from_block(G, B);
  r.coarse = system;
  r.m = B.size();
  r.k = G.degree() / r.m;
  const PermGroup stab = setwise_stabilizer(G, B, limits);
  r.Y = restricted(stab, B);
  r.X = restricted(normal_closure(stab, x), B);
  for (const TableRow* row : table_data().table(2)) {
    const auto inst = row->instantiate(0, r.m);
    if (!inst) continue;
    const PermGroup Xr = construct(inst->x_spec());
    const PermGroup Yr = construct(inst->y_spec());
    RowMatch match{row->id(), inst->x_spec().name(), inst->y_spec().name(), false, row->mindeg};
    match.closure_matches = isomorphic_small(r.X, Xr, limits);
    const bool alt_sym_row = row->row == 1;
    if (alt_sym_row ? is_alt_or_sym(r.Y) : (match.closure_matches && divides(r.Y.order(), Yr.order()))) {
      r.rows.push_back(match);
    }
  }
  if (!r.rows.empty() && r.rows.front().row == "2.1") {
    r.note = "(X,Y) = (Alt(m),Sym(m)) row: mindeg <= 3";
    if (!r.rows.front().closure_matches) r.note += "; closure of x is not Alt(m) at this degree";
  }
  r.sandwich_ok = verify_sandwich(G, system, x, limits).ok();
}

inline void fill_cross(TwoTwoReport& r, const PermGroup& G, const BlockSystem& pairs, const Permutation& x, bool hard,
                       const Limits& limits) {
  r.kind = Case22::cross;
  r.x = x;
  r.hard = hard;
  r.pairs = pairs;
  const auto supp = support(x);
  std::vector<Point> seed;
  for (Point q : supp) {
    for (Point b : pairs.block_containing(q)) seed.push_back(b);
  }
  std::sort(seed.begin(), seed.end());
  seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
  std::vector<Point> D = block_closure(G, seed);
  const BlockSystem coarse = block_system_from_block(G, D);
  r.coarse = coarse;
  r.m = D.size() / 2;
  r.k = G.degree() / D.size();

  // Pair i of D becomes points 2i, 2i+1.
  std::vector<Point> order;
  for (const auto& b : pairs.blocks()) {
    if (std::binary_search(D.begin(), D.end(), b.front())) order.insert(order.end(), b.begin(), b.end());
  }
  const PermGroup stab = setwise_stabilizer(G, D, limits);
  r.Y = restricted(stab, order);
  r.X = restricted(normal_closure(stab, x), order);
  const std::map<std::string, std::size_t> vars{{"m", r.m}};
  const PermGroup W = construct("C2wrSym(m)", vars);
  r.y_in_wreath = std::all_of(r.Y.generators().begin(), r.Y.generators().end(),
                              [&](const Permutation& g) { return W.contains(g); });
  const PermGroup even = construct("Even(m)", vars);
  r.contains_even = std::all_of(even.generators().begin(), even.generators().end(),
                                [&](const Permutation& g) { return r.Y.contains(g); });
  for (int table : {4, 3}) {
    for (const TableRow* row : table_data().table(table)) {
      const auto inst = row->instantiate(0, r.m);
      if (!inst) continue;
      const PermGroup Xr = construct(inst->x_spec());
      const PermGroup Yr = construct(inst->y_spec());
      RowMatch match{row->id(), inst->x_spec().name(), inst->y_spec().name(), false, row->mindeg};
      match.closure_matches = isomorphic_small(r.X, Xr, limits);
      if (!match.closure_matches) continue;
      if (table == 3) {
        r.table3_rows.push_back(match);
      } else if (r.y_in_wreath && contained_in_conjugate(r.Y, Yr, W, limits)) {
        r.rows.push_back(match);
      }
    }
  }
  if (hard && !r.contains_even) r.note = "base-group case without E+ in Y";
  r.sandwich_ok = verify_sandwich(G, coarse, x, limits).ok();
}

}  // namespace detail

inline TwoTwoReport classify_22_group(const PermGroup& G, const Limits& limits = default_limits()) {
  require_transitive(G);
  const auto scan = detail::scan_elements(G, limits);
  if (!scan.two_two) raise(ErrorKind::precondition, "group contains no 2^2-element");
  TwoTwoReport r;
  r.x = *scan.two_two;
  r.small_witness = scan.transposition ? scan.transposition : scan.three_cycle;
  const auto mbs = minimal_block_system(G);
  if (!mbs) {
    std::vector<Point> all(G.degree());
    std::iota(all.begin(), all.end(), Point{0});
    detail::fill_prim(r, G, all, r.x, limits);
    return r;
  }
  r.minimal_blocks = *mbs;
  const auto supp = support(r.x);
  std::set<std::uint32_t> hit;
  for (Point q : supp) hit.insert(mbs->block_of(q));
  const std::uint32_t b1 = *hit.begin();
  if (hit.size() == 1) {
    r.configuration = 1;
    detail::fill_prim(r, G, mbs->blocks()[b1], r.x, limits);
    return r;
  }
  const Point a = supp.front();
  if (mbs->block_of(r.x(a)) != mbs->block_of(a)) {
    r.configuration = 2;
    detail::fill_cross(r, G, *mbs, r.x, false, limits);
    return r;
  }
  r.configuration = 3;
  if (r.small_witness) {
    r.kind = Case22::smaller_mindeg;
    r.note = "mindeg < 4";
    return r;
  }
  for (const auto& y : scan.two_two_all) {
    const auto sy = support(y);
    const std::uint32_t b = mbs->block_of(sy.front());
    if (std::all_of(sy.begin(), sy.end(), [&](Point q) { return mbs->block_of(q) == b; })) {
      detail::fill_prim(r, G, mbs->blocks()[b], y, limits);
      r.configuration = 3;
      return r;
    }
  }
  // x = (a1 a2)(b1 b2) with {a1,a2} and {b1,b2} in different blocks; try pairing a1 with b1 or b2.
  const Point a1 = supp.front();
  std::vector<Point> partners;
  for (Point q : supp) {
    if (mbs->block_of(q) != mbs->block_of(a1)) partners.push_back(q);
  }
  for (Point b : partners) {
    const Point seed[2] = {std::min(a1, b), std::max(a1, b)};
    const auto P = block_closure(G, seed);
    if (P.size() == 2) {
      detail::fill_cross(r, G, block_system_from_block(G, P), r.x, false, limits);
      r.configuration = 3;
      return r;
    }
  }
  if (mbs->block_size() == 2) {
    detail::fill_cross(r, G, *mbs, r.x, true, limits);
    r.configuration = 3;
    return r;
  }
  r.kind = Case22::unclassified;
  r.note = "no outcome of the case analysis applies";
  return r;
}

}  // namespace vtmotion

/**
 * @file subgroup_pairs.hpp
 * @brief Exhaustive subgroup enumeration of C2 wr Sym(m) for m <= 3 and the
 * (X, Y) pairs it yields for table 4.
 *
 * Subgroups are bit masks over the element list of W = C2 wr Sym(m); with
 * |W| <= 48 one 64-bit word suffices.
 */
#pragma once

#include <set>
#include <unordered_map>

#include "table_rows.hpp"

namespace vtmotion {

enum class KernelKind { trivial, superflip, even, full, other };

inline std::string to_string(KernelKind k) {
  switch (k) {
    case KernelKind::trivial: return "trivial";
    case KernelKind::superflip: return "<tau>";
    case KernelKind::even: return "E+";
    case KernelKind::full: return "C2^m";
    case KernelKind::other: return "other";
  }
  return "?";
}

struct SubgroupPair {
  PermGroup X, Y;
  BigInt x_order, y_order;
  std::string witness;               // a 2^2-element of Y projecting to a transposition
  KernelKind kernel = KernelKind::other;  // Y intersected with the base group
  std::optional<int> exact_row;      // X and Y conjugate in W to the row's X and Y
  std::optional<int> sandwich_row;   // X conjugate to the row's X and Y inside a conjugate of the row's Y
  std::size_t class_size = 0;        // number of W-conjugates of the pair
};

struct SubgroupPairReport {
  std::size_t m = 0;
  std::size_t group_order = 0;
  std::size_t subgroup_count = 0;
  std::size_t surviving_subgroups = 0;  // Y passing the filters, before conjugacy reduction
  bool closed_under_conjugation = false;
  std::vector<SubgroupPair> pairs;      // one per W-conjugacy class of (X, Y)
  std::vector<int> rows_realized;       // rows realized exactly
  bool x_set_matches = false;           // found X classes equal the table's X classes
  bool all_sandwiched = false;
  // Table 3 row 2 lists E+ where table 4 lists E+ : Sym(m); both closures of Y = W.
  BigInt kernel_element_closure_order = 0;  // closure of a 2^2-element inside the base group
  BigInt cross_element_closure_order = 0;   // closure of a 2^2-element projecting to a transposition
  bool kernel_closure_is_table3_x = false;
  bool cross_closure_is_table4_x = false;

  bool ok() const { return x_set_matches && all_sandwiched && rows_realized.size() == 2 && closed_under_conjugation; }
};

namespace detail {

using Mask = std::uint64_t;

class SmallGroupTable {
 public:
  explicit SmallGroupTable(const PermGroup& W) : degree_(W.degree()) {
    elems_ = elements(W);
    if (elems_.size() > 64) raise(ErrorKind::precondition, "subgroup enumeration limited to groups of order 64");
    std::sort(elems_.begin(), elems_.end());
    for (std::size_t i = 0; i < elems_.size(); ++i) index_.emplace(elems_[i], i);
    const std::size_t N = elems_.size();
    mult_.assign(N * N, 0);
    for (std::size_t a = 0; a < N; ++a) {
      for (std::size_t b = 0; b < N; ++b) mult_[a * N + b] = index_.at(elems_[a] * elems_[b]);
    }
    inverse_.resize(N);
    for (std::size_t a = 0; a < N; ++a) inverse_[a] = index_.at(elems_[a].inverse());
    identity_ = index_.at(Permutation(degree_));
  }

  std::size_t size() const { return elems_.size(); }
  const Permutation& element(std::size_t i) const { return elems_[i]; }
  std::size_t index(const Permutation& g) const { return index_.at(g); }
  std::size_t mul(std::size_t a, std::size_t b) const { return mult_[a * elems_.size() + b]; }
  std::size_t conj(std::size_t a, std::size_t g) const { return mul(mul(inverse_[g], a), g); }

  Mask closure(Mask gens) const {
    Mask set = Mask{1} << identity_;
    std::vector<std::size_t> queue{identity_};
    std::vector<std::size_t> gen_list;
    for (std::size_t i = 0; i < size(); ++i) {
      if (gens >> i & 1) gen_list.push_back(i);
    }
    for (std::size_t h = 0; h < queue.size(); ++h) {
      for (std::size_t g : gen_list) {
        const std::size_t c = mul(queue[h], g);
        if (!(set >> c & 1)) {
          set |= Mask{1} << c;
          queue.push_back(c);
        }
      }
    }
    return set;
  }

  Mask conjugate_mask(Mask set, std::size_t g) const {
    Mask out = 0;
    for (std::size_t i = 0; i < size(); ++i) {
      if (set >> i & 1) out |= Mask{1} << conj(i, g);
    }
    return out;
  }

  /// Normal closure of element x inside subgroup `set`.
  Mask normal_closure(std::size_t x, Mask set) const {
    Mask gens = 0;
    for (std::size_t g = 0; g < size(); ++g) {
      if (set >> g & 1) gens |= Mask{1} << conj(x, g);
    }
    return closure(gens);
  }

  PermGroup group(Mask set) const {
    std::vector<Permutation> gens;
    for (std::size_t i = 0; i < size(); ++i) {
      if (set >> i & 1) gens.push_back(elems_[i]);
    }
    return PermGroup(degree_, reduced_generators(PermGroup(degree_, std::move(gens))));
  }

  Mask mask_of(const PermGroup& G) const {
    Mask set = 0;
    for (const auto& g : elements(G)) set |= Mask{1} << index(g);
    return set;
  }

 private:
  std::size_t degree_;
  std::vector<Permutation> elems_;
  std::unordered_map<Permutation, std::size_t, PermutationHash> index_;
  std::vector<std::size_t> mult_, inverse_;
  std::size_t identity_ = 0;
};

inline std::size_t popcount(Mask m) { return static_cast<std::size_t>(__builtin_popcountll(m)); }

/// Every subgroup, by breadth-first closure: each found subgroup is extended by every element outside it.
inline std::vector<Mask> all_subgroups(const SmallGroupTable& T) {
  std::set<Mask> seen;
  std::vector<Mask> queue{T.closure(0)};
  seen.insert(queue.front());
  for (std::size_t h = 0; h < queue.size(); ++h) {
    for (std::size_t g = 0; g < T.size(); ++g) {
      if (queue[h] >> g & 1) continue;
      const Mask next = T.closure(queue[h] | (Mask{1} << g));
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace detail

/// Enumerates Y <= C2 wr Sym(m) that are transitive, project onto Sym(m) and contain
/// a 2^2-element x projecting to a transposition, with X = <x^Y>.
inline SubgroupPairReport enumerate_small_subgroup_pairs(std::size_t m, const Limits& limits = default_limits()) {
  if (m < 2 || m > 3) raise(ErrorKind::invalid_input, "enumerate_small_subgroup_pairs requires m in {2, 3}");
  using detail::Mask;
  const auto spec = [&](const std::string& s) { return construct(s, {{"m", m}}); };
  const PermGroup W = spec("C2wrSym(m)");
  const detail::SmallGroupTable T(W);
  const WreathLabeling lab(2, m);

  SubgroupPairReport report;
  report.m = m;
  report.group_order = T.size();
  const auto subgroups = detail::all_subgroups(T);
  report.subgroup_count = subgroups.size();

  // The block action of each element, and the base group.
  std::vector<Permutation> top(T.size());
  Mask base = 0;
  for (std::size_t i = 0; i < T.size(); ++i) {
    std::vector<Point> images(m);
    for (Point b = 0; b < m; ++b) images[b] = lab.lambda(T.element(i)(lab.flat(0, b)));
    top[i] = Permutation(std::move(images));
    if (top[i].is_identity()) base |= Mask{1} << i;
  }
  auto is_cross = [&](std::size_t i) {
    return classify_element(T.element(i)).kind == ElementKind::two_two && top[i].cycle_type() == std::vector<std::size_t>{2};
  };
  const Mask tau_mask = T.closure(Mask{1} << T.index(superflip(m)));
  const Mask even_mask = T.mask_of(spec("Even(m)"));
  const BigInt sym_order = spec("Sym(m)").order();

  struct Raw {
    Mask X, Y;
    std::size_t x;
  };
  std::vector<Raw> raw;
  std::set<Mask> surviving;
  for (Mask Y : subgroups) {
    const PermGroup G = T.group(Y);
    if (!is_transitive(G)) continue;
    std::vector<Permutation> tops;
    for (std::size_t i = 0; i < T.size(); ++i) {
      if (Y >> i & 1) tops.push_back(top[i]);
    }
    if (PermGroup(m, tops).order() != sym_order) continue;
    bool any = false;
    for (std::size_t i = 0; i < T.size(); ++i) {
      if (!(Y >> i & 1) || !is_cross(i)) continue;
      any = true;
      raw.push_back({T.normal_closure(i, Y), Y, i});
    }
    if (any) surviving.insert(Y);
  }
  report.surviving_subgroups = surviving.size();
  report.closed_under_conjugation = true;
  for (Mask Y : surviving) {
    for (std::size_t g = 0; g < T.size(); ++g) {
      if (!surviving.count(T.conjugate_mask(Y, g))) report.closed_under_conjugation = false;
    }
  }

  // Table 4 rows instantiated at m, as masks.
  const auto rows = table_data().table(4);
  std::vector<std::pair<Mask, Mask>> row_masks;
  for (const TableRow* r : rows) {
    const auto inst = r->instantiate(0, m);
    if (!inst) raise(ErrorKind::precondition, "table 4 row " + r->id() + " has no instance at this m");
    row_masks.emplace_back(T.mask_of(construct(inst->x_spec())), T.mask_of(construct(inst->y_spec())));
  }

  auto canonical = [&](Mask X, Mask Y) {
    std::pair<Mask, Mask> best{~Mask{0}, ~Mask{0}};
    for (std::size_t g = 0; g < T.size(); ++g) best = std::min(best, {T.conjugate_mask(Y, g), T.conjugate_mask(X, g)});
    return best;
  };
  std::map<std::pair<Mask, Mask>, std::pair<Raw, std::set<std::pair<Mask, Mask>>>> classes;
  for (const Raw& r : raw) {
    auto& entry = classes.try_emplace(canonical(r.X, r.Y), r, std::set<std::pair<Mask, Mask>>{}).first->second;
    entry.second.insert({r.Y, r.X});
  }

  std::set<int> realized;
  std::set<Mask> found_x_classes, table_x_classes;
  auto x_class = [&](Mask X) {
    Mask best = ~Mask{0};
    for (std::size_t g = 0; g < T.size(); ++g) best = std::min(best, T.conjugate_mask(X, g));
    return best;
  };
  for (const auto& [xm, ym] : row_masks) table_x_classes.insert(x_class(xm));
  report.all_sandwiched = true;
  for (const auto& [key, entry] : classes) {
    const Raw& r = entry.first;
    SubgroupPair pair;
    pair.X = T.group(r.X);
    pair.Y = T.group(r.Y);
    pair.x_order = detail::popcount(r.X);
    pair.y_order = detail::popcount(r.Y);
    pair.witness = to_cycle_string(T.element(r.x), true);
    pair.class_size = entry.second.size();
    const Mask K = r.Y & base;
    pair.kernel = K == T.closure(0) ? KernelKind::trivial
                  : K == tau_mask   ? KernelKind::superflip
                  : K == even_mask  ? KernelKind::even
                  : K == base       ? KernelKind::full
                                    : KernelKind::other;
    for (std::size_t i = 0; i < row_masks.size(); ++i) {
      const auto [xm, ym] = row_masks[i];
      for (std::size_t g = 0; g < T.size(); ++g) {
        const Mask xc = T.conjugate_mask(xm, g);
        const Mask yc = T.conjugate_mask(ym, g);
        if (xc != r.X) continue;
        if (yc == r.Y && !pair.exact_row) pair.exact_row = rows[i]->row;
        if ((r.Y & ~yc) == 0 && !pair.sandwich_row) pair.sandwich_row = rows[i]->row;
      }
    }
    if (pair.exact_row) realized.insert(*pair.exact_row);
    if (!pair.sandwich_row) report.all_sandwiched = false;
    found_x_classes.insert(x_class(r.X));
    report.pairs.push_back(std::move(pair));
  }
  report.rows_realized.assign(realized.begin(), realized.end());
  report.x_set_matches = found_x_classes == table_x_classes;

  // Row 2 of tables 3 and 4 share Y = W; compare the two kinds of 2^2-element.
  const Mask all = T.closure(~Mask{0} >> (64 - T.size()));
  for (std::size_t i = 0; i < T.size(); ++i) {
    if (classify_element(T.element(i)).kind != ElementKind::two_two) continue;
    const Mask X = T.normal_closure(i, all);
    if ((base >> i & 1) && report.kernel_element_closure_order == 0) {
      report.kernel_element_closure_order = detail::popcount(X);
      report.kernel_closure_is_table3_x =
          permutation_isomorphic(T.group(X), construct(table_data().row(3, 2).X, {{"m", m}}), limits).has_value();
    }
    if (is_cross(i) && report.cross_element_closure_order == 0) {
      report.cross_element_closure_order = detail::popcount(X);
      report.cross_closure_is_table4_x =
          permutation_isomorphic(T.group(X), construct(table_data().row(4, 2).X, {{"m", m}}), limits).has_value();
    }
  }
  return report;
}

/// Subgroup count by closing every triple of elements; an independent oracle for the enumerator.
inline std::size_t count_subgroups_by_triples(const PermGroup& W) {
  const detail::SmallGroupTable T(W);
  std::set<detail::Mask> seen;
  for (std::size_t a = 0; a < T.size(); ++a) {
    for (std::size_t b = a; b < T.size(); ++b) {
      for (std::size_t c = b; c < T.size(); ++c) {
        seen.insert(T.closure((detail::Mask{1} << a) | (detail::Mask{1} << b) | (detail::Mask{1} << c)));
      }
    }
  }
  return seen.size();
}

}  // namespace vtmotion

/**
 * @file graph_classify.hpp
 * @brief Decomposition of vertex-transitive graphs of motion 2 or 4 into
 * lexicographic products or Inf graphs, with reconstruction and verification.
 */
#pragma once

#include <sstream>

#include "automorphisms.hpp"
#include "blocks.hpp"
#include "graph_constructions.hpp"
#include "graph_io.hpp"

namespace vtmotion {

enum class FormTag { lex_Km, lex_mK1, lex_C5, lex_prism, lex_coprism, inf, unclassified, none };

inline std::string to_string(FormTag t) {
  switch (t) {
    case FormTag::lex_Km: return "lex_Km";
    case FormTag::lex_mK1: return "lex_mK1";
    case FormTag::lex_C5: return "lex_C5";
    case FormTag::lex_prism: return "lex_prism";
    case FormTag::lex_coprism: return "lex_coprism";
    case FormTag::inf: return "inf";
    case FormTag::unclassified: return "unclassified";
    case FormTag::none: return "none";
  }
  return "none";
}

/// One way of writing the graph in canonical form.
struct FormWitness {
  FormTag tag = FormTag::unclassified;
  std::size_t m = 0;
  int lambda = -1, kappa = -1;           // Inf only
  std::optional<Graph> theta;            // lex forms: Gamma = lex(Delta, Theta)
  std::optional<Graph> sigma;            // Inf: Gamma = Inf(lambda, kappa, Sigma, P, m)
  std::optional<PairPartition> pairs;
  std::vector<std::vector<std::size_t>> parts;  // blocks (lex) or fibres (Inf) in the input
  Graph reconstruction;
  bool verified = false;

  /// "lex_prism(3)", "inf(1,0)" and so on.
  std::string label() const {
    switch (tag) {
      case FormTag::lex_prism:
      case FormTag::lex_coprism:
        return to_string(tag) + "(" + std::to_string(m) + ")";
      case FormTag::inf:
        return "inf(" + std::to_string(lambda) + "," + std::to_string(kappa) + ")";
      default:
        return to_string(tag);
    }
  }
};

struct ClassificationReport {
  std::size_t order = 0;
  bool vertex_transitive = false;
  std::size_t motion = 0;
  BigInt aut_order;
  FormWitness form;                       // tag none when motion is not 2 or 4
  std::vector<std::string> alternatives;  // further verified forms
  std::string note;
  std::string diagnostic;                 // filled for unclassified inputs

  bool verified() const { return form.verified; }
  bool falsification() const {
    return vertex_transitive && (motion == 2 || motion == 4) && !form.verified;
  }
};

namespace detail {

/// Partition of the vertices into classes of an equivalence given by equal rows.
inline std::vector<std::vector<std::size_t>> classes_by_row(const Graph& g, bool closed) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<Row> keys;
  for (std::size_t v = 0; v < g.order(); ++v) {
    const Row key = g.neighbors(v) | (closed ? bit(v) : 0);
    auto it = std::find(keys.begin(), keys.end(), key);
    if (it == keys.end()) {
      keys.push_back(key);
      out.push_back({v});
    } else {
      out[static_cast<std::size_t>(it - keys.begin())].push_back(v);
    }
  }
  return out;
}

inline bool uniform_nontrivial(const std::vector<std::vector<std::size_t>>& parts) {
  return !parts.empty() && parts.front().size() >= 2 &&
         std::all_of(parts.begin(), parts.end(), [&](const auto& p) { return p.size() == parts.front().size(); });
}

inline std::vector<std::vector<std::size_t>> to_parts(const std::vector<std::vector<Point>>& blocks) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& b : blocks) out.emplace_back(b.begin(), b.end());
  return out;
}

inline std::string diagnostic_dump(const Graph& g, const PermGroup& aut) {
  std::ostringstream out;
  out << "graph6 " << to_graph6(g) << "\n";
  out << "aut_order " << aut.order().str() << "\n";
  for (const auto& x : aut.generators()) out << "generator " << to_cycle_string(x) << "\n";
  if (is_transitive(aut)) {
    for (const auto& B : blocks_containing_zero(aut)) {
      out << "block";
      for (Point p : B) out << " " << p + 1;
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace detail

/// Requires a vertex-transitive input of motion 2. Uses the true-twin classes when
/// they are nontrivial and the false-twin classes otherwise.
inline ClassificationReport decompose_motion2(const Graph& g, const Limits& limits = default_limits()) {
  ClassificationReport report;
  report.order = g.order();
  const AutResult aut = automorphism_group(g, limits);
  report.aut_order = aut.order;
  report.vertex_transitive = is_vertex_transitive(aut.group);
  if (!report.vertex_transitive) raise(ErrorKind::precondition, "graph is not vertex-transitive");
  if (find_twins(g).empty()) raise(ErrorKind::precondition, "graph has no twins, so its motion is not 2");
  report.motion = 2;

  const auto true_classes = detail::classes_by_row(g, true);
  const auto false_classes = detail::classes_by_row(g, false);
  const bool use_true = detail::uniform_nontrivial(true_classes);
  const auto& parts = use_true ? true_classes : false_classes;
  if (!detail::uniform_nontrivial(parts)) {
    report.form.tag = FormTag::unclassified;
    report.note = "twin classes are not uniform";
    report.diagnostic = detail::diagnostic_dump(g, aut.group);
    return report;
  }
  if (use_true && detail::uniform_nontrivial(false_classes)) report.note = "both twin relations are nontrivial";

  FormWitness& f = report.form;
  f.tag = use_true ? FormTag::lex_Km : FormTag::lex_mK1;
  f.m = parts.front().size();
  f.parts = parts;
  f.theta = quotient_graph(g, parts);
  const Graph delta = use_true ? complete_graph(f.m) : empty_graph(f.m);
  f.reconstruction = lex_product(delta, *f.theta);
  f.verified = are_isomorphic(f.reconstruction, g, limits);
  if (!f.verified) {
    f.tag = FormTag::unclassified;
    report.diagnostic = detail::diagnostic_dump(g, aut.group);
  }
  return report;
}

namespace detail {

/// Lex candidates: blocks B (including the whole vertex set) whose complement's
/// pointwise stabilizer is transitive on B and whose induced graph is C5, a prism
/// or a coprism.
inline std::vector<FormWitness> lex_forms(const Graph& g, const PermGroup& aut, const Limits& limits) {
  std::vector<FormWitness> out;
  const std::size_t n = g.order();
  std::vector<std::vector<Point>> blocks = blocks_containing_zero(aut);
  std::vector<Point> whole(n);
  std::iota(whole.begin(), whole.end(), Point{0});
  blocks.push_back(whole);
  for (const auto& B : blocks) {
    const std::size_t b = B.size();
    const bool maybe_c5 = b == 5;
    const bool maybe_prism = b % 2 == 0 && b >= 6;
    if (!maybe_c5 && !maybe_prism) continue;
    std::vector<Point> rest;
    for (Point v = 0; v < n; ++v) {
      if (!std::binary_search(B.begin(), B.end(), v)) rest.push_back(v);
    }
    const PermGroup Z = pointwise_stabilizer(aut, rest);
    if (orbit_of(n, Z.generators(), B.front()).size() != b) continue;

    const std::vector<std::size_t> Bv(B.begin(), B.end());
    const Graph delta = g.induced(Bv);
    std::vector<std::pair<FormTag, Graph>> shapes;
    if (maybe_c5) shapes.emplace_back(FormTag::lex_C5, cycle_graph(5));
    if (maybe_prism) {
      shapes.emplace_back(FormTag::lex_prism, prism_graph(b / 2));
      shapes.emplace_back(FormTag::lex_coprism, coprism_graph(b / 2));
    }
    for (const auto& [tag, shape] : shapes) {
      if (!are_isomorphic(delta, shape, limits)) continue;
      FormWitness f;
      f.tag = tag;
      f.m = tag == FormTag::lex_C5 ? 5 : b / 2;
      if (b == n) {
        f.parts = {Bv};
        f.theta = Graph(1);
      } else {
        const BlockSystem system = block_system_from_block(aut, B);
        f.parts = to_parts(system.blocks());
        f.theta = quotient_graph(g, f.parts);
      }
      f.reconstruction = lex_product(shape, *f.theta);
      f.verified = are_isomorphic(f.reconstruction, g, limits);
      out.push_back(std::move(f));
    }
  }
  return out;
}

/// (lambda, kappa) readings of the graph induced on one block D, per the table
/// mK2 -> (1,0), prism -> (1,1), complement of mK2 -> (0,1), coprism -> (0,0).
inline std::vector<std::pair<int, int>> lambda_kappa_candidates(const Graph& induced, std::size_t m,
                                                                const Limits& limits) {
  std::vector<std::pair<int, int>> out;
  if (are_isomorphic(induced, matching_graph(m), limits)) out.emplace_back(1, 0);
  if (are_isomorphic(induced, prism_graph(m), limits)) out.emplace_back(1, 1);
  if (are_isomorphic(induced, complement(matching_graph(m)), limits)) out.emplace_back(0, 1);
  if (are_isomorphic(induced, coprism_graph(m), limits)) out.emplace_back(0, 0);
  return out;
}

/// Inf candidates: a block system whose blocks D split into exactly two orbits of
/// size m >= 2 under the pointwise stabilizer of the complement of D.
inline std::vector<FormWitness> inf_forms(const Graph& g, const PermGroup& aut, const Limits& limits,
                                          bool stop_at_first) {
  std::vector<FormWitness> out;
  const std::size_t n = g.order();
  std::vector<std::vector<Point>> blocks = blocks_containing_zero(aut);
  std::vector<Point> whole(n);
  std::iota(whole.begin(), whole.end(), Point{0});
  blocks.push_back(whole);
  for (const auto& B0 : blocks) {
    if (B0.size() < 4 || B0.size() % 2 != 0) continue;
    const std::size_t m = B0.size() / 2;
    std::vector<std::vector<Point>> system_blocks{B0};
    if (B0.size() < n) system_blocks = block_system_from_block(aut, B0).blocks();

    std::vector<std::vector<std::size_t>> fibres;
    std::vector<std::pair<std::size_t, std::size_t>> pairing;
    bool ok = true;
    for (const auto& D : system_blocks) {
      std::vector<Point> rest;
      for (Point v = 0; v < n; ++v) {
        if (!std::binary_search(D.begin(), D.end(), v)) rest.push_back(v);
      }
      const PermGroup Z = pointwise_stabilizer(aut, rest);
      const auto orbs = orbits(Z);
      std::vector<std::vector<std::size_t>> inside;
      for (const auto& o : orbs) {
        if (std::binary_search(D.begin(), D.end(), o.front())) inside.emplace_back(o.begin(), o.end());
      }
      if (inside.size() != 2 || inside[0].size() != m || inside[1].size() != m) {
        ok = false;
        break;
      }
      pairing.emplace_back(fibres.size(), fibres.size() + 1);
      fibres.push_back(std::move(inside[0]));
      fibres.push_back(std::move(inside[1]));
    }
    if (!ok) continue;

    const std::vector<std::size_t> Dv(B0.begin(), B0.end());
    const Graph induced = g.induced(Dv);
    const Graph sigma = quotient_graph(g, fibres);
    const PairPartition pairs(fibres.size(), pairing);
    for (auto [lambda, kappa] : lambda_kappa_candidates(induced, m, limits)) {
      FormWitness f;
      f.tag = FormTag::inf;
      f.m = m;
      f.lambda = lambda;
      f.kappa = kappa;
      f.sigma = sigma;
      f.pairs = pairs;
      f.parts = fibres;
      f.reconstruction = inf_graph(InfParams{lambda, kappa, m}, sigma, pairs);
      f.verified = are_isomorphic(f.reconstruction, g, limits);
      const bool good = f.verified;
      out.push_back(std::move(f));
      if (good && stop_at_first) return out;
    }
  }
  return out;
}

}  // namespace detail

/// Requires a vertex-transitive input of motion 4. Lex forms are tried first, over
/// blocks in increasing size; Inf structures second. Every verified form is listed.
inline ClassificationReport decompose_motion4(const Graph& g, const Limits& limits = default_limits()) {
  ClassificationReport report;
  report.order = g.order();
  const AutResult aut = automorphism_group(g, limits);
  report.aut_order = aut.order;
  report.vertex_transitive = is_vertex_transitive(aut.group);
  if (!report.vertex_transitive) raise(ErrorKind::precondition, "graph is not vertex-transitive");
  if (!find_twins(g).empty() || aut.group.is_trivial()) raise(ErrorKind::precondition, "motion is not 4");
  report.motion = minimal_degree(aut.group, limits).degree;
  if (report.motion != 4) raise(ErrorKind::precondition, "motion is " + std::to_string(report.motion) + ", not 4");

  std::vector<FormWitness> found = detail::lex_forms(g, aut.group, limits);
  const bool lex_found = std::any_of(found.begin(), found.end(), [](const auto& f) { return f.verified; });
  for (auto& f : detail::inf_forms(g, aut.group, limits, lex_found)) found.push_back(std::move(f));

  bool have = false;
  for (auto& f : found) {
    if (!f.verified) continue;
    if (!have) {
      report.form = std::move(f);
      have = true;
    } else {
      report.alternatives.push_back(f.label());
    }
  }
  if (!have) {
    report.form.tag = FormTag::unclassified;
    report.note = "no lexicographic or Inf structure verified";
    report.diagnostic = detail::diagnostic_dump(g, aut.group);
  }
  return report;
}

/// Motion plus, for vertex-transitive graphs of motion 2 or 4, the decomposition.
/// Other motions are reported with tag none.
inline ClassificationReport classify_graph(const Graph& g, const Limits& limits = default_limits()) {
  const AutResult aut = automorphism_group(g, limits);
  if (!is_vertex_transitive(aut.group)) raise(ErrorKind::precondition, "graph is not vertex-transitive");
  const MotionResult mot = motion(g, limits);
  if (mot.motion == 2) return decompose_motion2(g, limits);
  if (mot.motion == 4) return decompose_motion4(g, limits);
  ClassificationReport report;
  report.order = g.order();
  report.vertex_transitive = true;
  report.motion = mot.motion;
  report.aut_order = aut.order;
  report.form.tag = FormTag::none;
  report.note = mot.motion == 0 ? "trivial automorphism group" : "motion is neither 2 nor 4";
  return report;
}

}  // namespace vtmotion

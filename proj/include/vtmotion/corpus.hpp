/**
 * @file corpus.hpp
 * @brief Deterministic graph corpora and corpus-wide verification of the motion
 * classification.
 */
#pragma once

#include <atomic>
#include <map>
#include <thread>

#include "graph_classify.hpp"
#include "group_families.hpp"
#include "wreath.hpp"

namespace vtmotion {

struct InfInstance {
  InfParams params;
  Graph sigma;
  PairPartition pairs;
  std::string sigma_name;
};

struct CorpusItem {
  std::string family;
  std::string name;
  Graph graph;
  std::optional<InfInstance> inf;
};

/// Cheap isomorphism invariant used to bucket graphs before exact tests.
inline std::vector<std::size_t> graph_fingerprint(const Graph& g) {
  std::vector<std::size_t> degrees;
  for (std::size_t v = 0; v < g.order(); ++v) degrees.push_back(g.degree(v));
  std::sort(degrees.begin(), degrees.end());
  std::vector<std::size_t> out{g.order(), g.size(), triangle_count(g), is_connected(g) ? 1U : 0U};
  out.insert(out.end(), degrees.begin(), degrees.end());
  return out;
}

/// Keeps the first member of each isomorphism class, preserving order.
inline std::vector<CorpusItem> dedup_isomorphic(std::vector<CorpusItem> items, const Limits& limits = default_limits()) {
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> buckets;
  std::vector<CorpusItem> out;
  for (auto& item : items) {
    auto& bucket = buckets[graph_fingerprint(item.graph)];
    const bool seen = std::any_of(bucket.begin(), bucket.end(),
                                  [&](std::size_t i) { return are_isomorphic(out[i].graph, item.graph, limits); });
    if (seen) continue;
    bucket.push_back(out.size());
    out.push_back(std::move(item));
  }
  return out;
}

inline std::string set_label(const std::vector<std::size_t>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

/// All circulants of order n over connection sets S of {1..floor(n/2)}, up to isomorphism.
inline std::vector<CorpusItem> circulant_corpus(std::size_t n, const Limits& limits = default_limits()) {
  std::vector<CorpusItem> items;
  const std::size_t half = n / 2;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << half); ++mask) {
    std::vector<std::size_t> S;
    for (std::size_t s = 1; s <= half; ++s) {
      if ((mask >> (s - 1)) & 1U) S.push_back(s);
    }
    items.push_back({"circulant", "circulant(" + std::to_string(n) + "," + set_label(S) + ")", circulant_graph(n, S), {}});
  }
  return dedup_isomorphic(std::move(items), limits);
}

inline std::vector<CorpusItem> circulant_corpus_up_to(std::size_t max_n, const Limits& limits = default_limits()) {
  std::vector<CorpusItem> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (auto& item : circulant_corpus(n, limits)) out.push_back(std::move(item));
  }
  return out;
}

/// Perfect matchings of sigma's vertex set, one per orbit of Aut(sigma).
inline std::vector<PairPartition> matchings_up_to_symmetry(const Graph& sigma, const Limits& limits = default_limits()) {
  const auto all = all_perfect_matchings(sigma.order());
  const auto aut = elements(automorphism_group(sigma, limits).group, limits.enumeration_cap);
  std::set<std::vector<std::pair<std::size_t, std::size_t>>> seen;
  std::vector<PairPartition> out;
  for (const auto& M : all) {
    if (seen.contains(M.pairs())) continue;
    out.push_back(M);
    for (const auto& g : aut) {
      std::vector<std::pair<std::size_t, std::size_t>> image;
      for (auto [a, b] : M.pairs()) image.emplace_back(g(static_cast<Point>(a)), g(static_cast<Point>(b)));
      seen.insert(PairPartition(sigma.order(), image).pairs());
    }
  }
  return out;
}

inline std::string pairs_label(const PairPartition& P) {
  std::string out = "{";
  for (std::size_t i = 0; i < P.pairs().size(); ++i) {
    out += (i ? "," : "") + std::to_string(P.pairs()[i].first + 1) + "-" + std::to_string(P.pairs()[i].second + 1);
  }
  return out + "}";
}

/// The named base graphs of the Inf grid.
inline std::vector<std::pair<std::string, Graph>> inf_sigma_family() {
  return {{"C4", cycle_graph(4)}, {"C6", cycle_graph(6)}, {"C8", cycle_graph(8)},
          {"prism3", prism_graph(3)}, {"prism4", prism_graph(4)}};
}

inline std::string inf_name(const InfInstance& inst) {
  return "Inf(" + std::to_string(inst.params.lambda) + "," + std::to_string(inst.params.kappa) + "," + inst.sigma_name +
         "," + pairs_label(inst.pairs) + "," + std::to_string(inst.params.m) + ")";
}

/// Inf(lambda, kappa, Sigma, P, m) over the named Sigma, every matching up to
/// Aut(Sigma), m in {2, 3} and all (lambda, kappa). Not deduplicated, since the
/// parameters themselves are under test.
inline std::vector<CorpusItem> inf_grid(const std::vector<std::pair<std::string, Graph>>& sigmas,
                                        const std::vector<std::size_t>& ms = {2, 3},
                                        const Limits& limits = default_limits()) {
  std::vector<CorpusItem> out;
  for (const auto& [name, sigma] : sigmas) {
    for (const auto& P : matchings_up_to_symmetry(sigma, limits)) {
      for (std::size_t m : ms) {
        for (int lambda = 0; lambda < 2; ++lambda) {
          for (int kappa = 0; kappa < 2; ++kappa) {
            InfInstance inst{InfParams{lambda, kappa, m}, sigma, P, name};
            Graph g = inf_graph(inst.params, sigma, P);
            out.push_back({"inf", inf_name(inst), std::move(g), std::move(inst)});
          }
        }
      }
    }
  }
  return out;
}

inline std::vector<std::pair<std::string, Graph>> lex_delta_family() {
  return {{"K2", complete_graph(2)}, {"2K1", empty_graph(2)}, {"K3", complete_graph(3)},
          {"3K1", empty_graph(3)}, {"C5", cycle_graph(5)}};
}

inline std::vector<std::pair<std::string, Graph>> lex_theta_family() {
  return {{"K2", complete_graph(2)}, {"C5", cycle_graph(5)}};
}

inline std::vector<CorpusItem> lex_grid(const std::vector<std::pair<std::string, Graph>>& deltas,
                                        const std::vector<std::pair<std::string, Graph>>& thetas) {
  std::vector<CorpusItem> out;
  for (const auto& [dn, d] : deltas) {
    for (const auto& [tn, t] : thetas) out.push_back({"lex", "lex(" + dn + "," + tn + ")", lex_product(d, t), {}});
  }
  return out;
}

/// Lex products covering every canonical form: K_m, mK1, C5, prisms and coprisms
/// over Theta in {K1, K2, C5}, plus the prime circulants over {K1, K2}.
inline std::vector<CorpusItem> converse_lex_grid() {
  const std::vector<std::pair<std::string, Graph>> thetas{{"K1", Graph(1)}, {"K2", complete_graph(2)}, {"C5", cycle_graph(5)}};
  std::vector<std::pair<std::string, Graph>> deltas{{"C5", cycle_graph(5)}};
  for (std::size_t m = 2; m <= 4; ++m) {
    const std::string s = std::to_string(m);
    deltas.emplace_back("K" + s, complete_graph(m));
    deltas.emplace_back(s + "K1", empty_graph(m));
    deltas.emplace_back("prism" + s, prism_graph(m));
    deltas.emplace_back("coprism" + s, coprism_graph(m));
  }
  auto out = lex_grid(deltas, thetas);
  const std::vector<std::pair<std::string, Graph>> primes{{"C5", cycle_graph(5)}, {"circulant(7,{1,2})", circulant_graph(7, {1, 2})}};
  for (auto& item : lex_grid(primes, {{"K1", Graph(1)}, {"K2", complete_graph(2)}})) out.push_back(std::move(item));
  return out;
}

inline std::vector<CorpusItem> praeger_xu_family(std::size_t r_max = 6) {
  std::vector<CorpusItem> out;
  for (std::size_t r = 3; r <= r_max; ++r) out.push_back({"px", "px(" + std::to_string(r) + ")", px_graph(r), {}});
  for (std::size_t r = 2; r <= r_max; ++r) out.push_back({"spx", "spx(" + std::to_string(r) + ")", spx_graph(r), {}});
  return out;
}

/// The group generated by E+ in each of k copies of C2 wr Sym(m), the diagonal
/// rotation of the m pairs and the cyclic shift of the copies.
inline PermGroup hard_case_group(std::size_t m, std::size_t k) {
  const WreathLabeling lab(2 * m, k);
  std::vector<Permutation> gens;
  std::vector<std::vector<Point>> rotation_cycles(2);
  for (std::size_t i = 0; i < m; ++i) {
    rotation_cycles[0].push_back(static_cast<Point>(2 * i));
    rotation_cycles[1].push_back(static_cast<Point>(2 * i + 1));
  }
  const Permutation rotation = Permutation::from_cycles(2 * m, rotation_cycles);
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t i = 0; i + 1 < m; ++i) {
      const Permutation flip = Permutation::from_cycles(
          2 * m, {{static_cast<Point>(2 * i), static_cast<Point>(2 * i + 1)},
                  {static_cast<Point>(2 * i + 2), static_cast<Point>(2 * i + 3)}});
      gens.push_back(lab.in_copy(flip, static_cast<Point>(c)));
    }
  }
  gens.push_back(lab.element(std::vector<Permutation>(k, rotation), Permutation(k)));
  if (k > 1) {
    std::vector<Point> shift(k);
    for (std::size_t c = 0; c < k; ++c) shift[c] = static_cast<Point>((c + 1) % k);
    gens.push_back(lab.top(Permutation(std::move(shift))));
  }
  return PermGroup(lab.degree(), std::move(gens));
}

/// Vertex-transitive graphs invariant under hard_case_group(m, k).
inline std::vector<CorpusItem> hard_case_graphs(std::size_t m, std::size_t k, const Limits& limits = default_limits()) {
  std::vector<CorpusItem> items;
  const auto graphs = invariant_graphs_under(hard_case_group(m, k), limits);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    items.push_back({"hard", "hard(" + std::to_string(m) + "," + std::to_string(k) + ")#" + std::to_string(i), graphs[i], {}});
  }
  return dedup_isomorphic(std::move(items), limits);
}

/// Unions of pair orbits of the groups appearing in the block analysis.
inline std::vector<CorpusItem> invariant_union_family(const Limits& limits = default_limits()) {
  std::vector<CorpusItem> items;
  const std::vector<std::string> groups{"SuperflipSym(3)", "EvenSym(3)", "Sym(4)", "D(5)", "C2wrSym(3)"};
  for (const auto& text : groups) {
    const auto graphs = invariant_graphs_under(construct(text, {}), limits);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      items.push_back({"invariant", text + "#" + std::to_string(i), graphs[i], {}});
    }
  }
  return dedup_isomorphic(std::move(items), limits);
}

struct CorpusOptions {
  std::size_t circulant_max = 14;
  bool quick = false;  // circulants up to 10 and m = 2 only in the Inf grid
};

inline std::vector<CorpusItem> default_corpus(const CorpusOptions& options, const Limits& limits = default_limits()) {
  std::vector<CorpusItem> out;
  auto append = [&](std::vector<CorpusItem> v) {
    for (auto& item : v) out.push_back(std::move(item));
  };
  append(circulant_corpus_up_to(options.quick ? std::min<std::size_t>(options.circulant_max, 10) : options.circulant_max, limits));
  append(inf_grid(inf_sigma_family(), options.quick ? std::vector<std::size_t>{2} : std::vector<std::size_t>{2, 3}, limits));
  append(lex_grid(lex_delta_family(), lex_theta_family()));
  append(converse_lex_grid());
  append(praeger_xu_family(options.quick ? 4 : 6));
  append(invariant_union_family(limits));
  append(hard_case_graphs(3, 2, limits));
  if (!options.quick) append(hard_case_graphs(4, 2, limits));
  return out;
}

/// One graph of a corpus run.
struct CorpusRecord {
  std::string family, name, graph6;
  std::size_t order = 0;
  bool vertex_transitive = false;
  std::size_t motion = 0;
  std::string aut_order;
  std::string form;
  bool verified = false;
  bool odd_prime_motion = false;
  bool unclassified = false;
  std::vector<std::string> alternatives;
  std::string error;
  std::string diagnostic;
  // Inf members only
  std::optional<bool> preserver_transitive;
  std::optional<bool> pair_transposition;
};

struct CorpusSummary {
  std::size_t graphs = 0;
  std::size_t vertex_transitive = 0;
  std::size_t odd_prime_motions = 0;
  std::size_t unclassified = 0;
  std::size_t errors = 0;
  std::map<std::string, std::size_t> forms;
  std::map<std::size_t, std::size_t> motions;
  // Inf criteria, counted over the Inf members of the corpus
  std::size_t inf_members = 0;
  std::size_t inf_vt_mismatches = 0;         // VT(Inf) differs from transitivity of Aut_P(Sigma)
  std::size_t inf_vt_members = 0;
  std::size_t inf_motion_not_2_or_4 = 0;
  std::size_t inf_proof_mismatches = 0;      // motion 2 <=> (lambda != kappa and a pair transposition)
  std::size_t inf_statement_violations = 0;  // motion != 4 although (lambda == kappa and a pair transposition) fails

  /// Falsifications only. The two motion-2 readings for Inf are reported as data.
  bool ok() const {
    return odd_prime_motions == 0 && unclassified == 0 && errors == 0 && inf_vt_mismatches == 0 &&
           inf_motion_not_2_or_4 == 0;
  }
};

struct CorpusReport {
  std::vector<CorpusRecord> records;
  CorpusSummary summary;
};

inline bool is_odd_prime(std::size_t v) { return v > 2 && is_prime(v); }

/// Whether some pair {a, b} of P has (a b) in Aut(sigma).
inline bool has_pair_transposition(const Graph& sigma, const PairPartition& P) {
  for (auto [a, b] : P.pairs()) {
    if ((sigma.neighbors(a) & ~bit(b)) == (sigma.neighbors(b) & ~bit(a))) return true;
  }
  return false;
}

inline CorpusRecord verify_item(const CorpusItem& item, const Limits& limits = default_limits()) {
  CorpusRecord rec;
  rec.family = item.family;
  rec.name = item.name;
  rec.graph6 = to_graph6(item.graph);
  rec.order = item.graph.order();
  try {
    const AutResult aut = automorphism_group(item.graph, limits);
    rec.aut_order = aut.order.str();
    rec.vertex_transitive = is_vertex_transitive(aut.group);
    if (item.inf) {
      rec.preserver_transitive = is_transitive(aut_preserving_partition(item.inf->sigma, item.inf->pairs, limits));
      rec.pair_transposition = has_pair_transposition(item.inf->sigma, item.inf->pairs);
    }
    if (!rec.vertex_transitive) return rec;
    const ClassificationReport report = classify_graph(item.graph, limits);
    rec.motion = report.motion;
    rec.odd_prime_motion = is_odd_prime(report.motion);
    rec.form = report.form.label();
    rec.verified = report.verified();
    rec.unclassified = report.falsification();
    rec.alternatives = report.alternatives;
    rec.diagnostic = report.diagnostic;
  } catch (const Error& e) {
    rec.error = e.what();
  }
  return rec;
}

inline void add_to_summary(CorpusSummary& s, const CorpusRecord& rec, const CorpusItem& item) {
  ++s.graphs;
  if (!rec.error.empty()) {
    ++s.errors;
    return;
  }
  if (item.inf) {
    ++s.inf_members;
    if (*rec.preserver_transitive != rec.vertex_transitive) ++s.inf_vt_mismatches;
  }
  if (!rec.vertex_transitive) return;
  ++s.vertex_transitive;
  ++s.motions[rec.motion];
  if (rec.odd_prime_motion) ++s.odd_prime_motions;
  if (rec.unclassified) ++s.unclassified;
  if (rec.verified) ++s.forms[rec.form.substr(0, rec.form.find('('))];
  if (item.inf) {
    ++s.inf_vt_members;
    const int lambda = item.inf->params.lambda, kappa = item.inf->params.kappa;
    const bool t = *rec.pair_transposition;
    if (rec.motion != 2 && rec.motion != 4) ++s.inf_motion_not_2_or_4;
    if ((rec.motion == 2) != (lambda != kappa && t)) ++s.inf_proof_mismatches;
    if (!(lambda == kappa && t) && rec.motion != 4) ++s.inf_statement_violations;
  }
}

/// Runs every item, `jobs` at a time; records keep the corpus order.
inline CorpusReport verify_corpus(const std::vector<CorpusItem>& items, std::size_t jobs = 1,
                                  const Limits& limits = default_limits()) {
  CorpusReport report;
  report.records.resize(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < items.size(); i = next++) report.records[i] = verify_item(items[i], limits);
  };
  jobs = std::max<std::size_t>(1, jobs);
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (std::size_t i = 0; i < items.size(); ++i) add_to_summary(report.summary, report.records[i], items[i]);
  return report;
}

}  // namespace vtmotion

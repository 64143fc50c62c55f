/**
 * @file report_json.hpp
 * @brief Structured documents for reports. Keys are emitted in sorted order so
 * equal inputs give byte-identical output.
 */
#pragma once

#include <nlohmann/json.hpp>

#include "corpus.hpp"
#include "subgroup_pairs.hpp"
#include "table_rows.hpp"

namespace vtmotion {

inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::json;

inline Json to_json(const Graph& g) {
  return Json{{"graph6", to_graph6(g)}, {"vertices", g.order()}, {"edges", g.size()}};
}

inline Json to_json(const PairPartition& P) {
  Json pairs = Json::array();
  for (auto [a, b] : P.pairs()) pairs.push_back(Json::array({a + 1, b + 1}));
  return pairs;
}

inline Json to_json(const MotionResult& r) {
  Json out{{"motion", r.motion}, {"twin_fast_path", r.twin_fast_path}};
  out["witness"] = r.witness ? Json(to_cycle_string(*r.witness)) : Json(nullptr);
  out["aut_order"] = r.aut_order ? Json(r.aut_order->str()) : Json(nullptr);
  return out;
}

inline Json to_json(const FormWitness& f) {
  Json out{{"tag", to_string(f.tag)}, {"label", f.label()}, {"verified", f.verified}};
  if (f.tag == FormTag::none || f.tag == FormTag::unclassified) return out;
  out["m"] = f.m;
  if (f.theta) out["theta"] = to_json(*f.theta);
  if (f.sigma) {
    out["sigma"] = to_json(*f.sigma);
    out["pairs"] = to_json(*f.pairs);
    out["lambda"] = f.lambda;
    out["kappa"] = f.kappa;
  }
  out["reconstruction"] = to_json(f.reconstruction);
  return out;
}

inline Json to_json(const ClassificationReport& r) {
  Json out{{"vertices", r.order},
           {"vertex_transitive", r.vertex_transitive},
           {"motion", r.motion},
           {"aut_order", r.aut_order.str()},
           {"form", to_json(r.form)},
           {"alternatives", r.alternatives},
           {"verified", r.verified()},
           {"falsification", r.falsification()}};
  if (!r.note.empty()) out["note"] = r.note;
  if (!r.diagnostic.empty()) out["diagnostic"] = r.diagnostic;
  return out;
}

inline Json to_json(const CorpusRecord& r) {
  Json out{{"family", r.family},   {"name", r.name},       {"graph6", r.graph6},
           {"vertices", r.order},  {"vertex_transitive", r.vertex_transitive}};
  if (!r.error.empty()) {
    out["error"] = r.error;
    return out;
  }
  out["aut_order"] = r.aut_order;
  if (r.preserver_transitive) {
    out["preserver_transitive"] = *r.preserver_transitive;
    out["pair_transposition"] = *r.pair_transposition;
  }
  if (!r.vertex_transitive) return out;
  out["motion"] = r.motion;
  out["form"] = r.form;
  out["verified"] = r.verified;
  if (!r.alternatives.empty()) out["alternatives"] = r.alternatives;
  if (r.odd_prime_motion) out["odd_prime_motion"] = true;
  if (r.unclassified) {
    out["unclassified"] = true;
    out["diagnostic"] = r.diagnostic;
  }
  return out;
}

inline Json to_json(const CorpusSummary& s) {
  Json forms = Json::object(), motions = Json::object();
  for (const auto& [k, v] : s.forms) forms[k] = v;
  for (const auto& [k, v] : s.motions) motions[std::to_string(k)] = v;
  return Json{{"graphs", s.graphs},
              {"vertex_transitive", s.vertex_transitive},
              {"odd_prime_motions", s.odd_prime_motions},
              {"unclassified", s.unclassified},
              {"errors", s.errors},
              {"forms", forms},
              {"motions", motions},
              {"inf",
               {{"members", s.inf_members},
                {"vertex_transitive", s.inf_vt_members},
                {"transitivity_mismatches", s.inf_vt_mismatches},
                {"motion_not_2_or_4", s.inf_motion_not_2_or_4},
                {"proof_criterion_mismatches", s.inf_proof_mismatches},
                {"statement_reading_violations", s.inf_statement_violations}}},
              {"ok", s.ok()}};
}

inline Json to_json(const CorpusReport& r, bool with_records = true) {
  Json out{{"summary", to_json(r.summary)}};
  if (with_records) {
    Json records = Json::array();
    for (const auto& rec : r.records) records.push_back(to_json(rec));
    out["records"] = std::move(records);
  }
  return out;
}

inline Json to_json(const InstanceReport& r) {
  Json mindeg = Json::array();
  for (const auto& c : r.mindeg) {
    mindeg.push_back({{"group", c.group}, {"condition_C", c.cond_C}, {"predicted_p", c.predicted_is_p},
                      {"observed", c.observed}, {"ok", c.ok}});
  }
  Json out{{"p", r.p},       {"m", r.m},         {"X", r.X},
           {"Y", r.Y},       {"boundary", r.boundary},
           {"status", to_string(r.status)},
           {"witnesses", r.witnesses},
           {"matching", r.matching},
           {"witness", r.witness},
           {"witness_closure_order", r.witness_closure_order.str()},
           {"mindeg", mindeg}};
  if (!r.detail.empty()) out["detail"] = r.detail;
  return out;
}

inline Json to_json(const RowReport& r) {
  Json instances = Json::array();
  for (const auto& i : r.instances) instances.push_back(to_json(i));
  Json out{{"table", r.table}, {"row", r.row}, {"status", to_string(r.status)}, {"instances", instances}};
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

inline Json to_json(const SubgroupPairReport& r) {
  Json pairs = Json::array();
  for (const auto& p : r.pairs) {
    Json j{{"x_order", p.x_order.str()}, {"y_order", p.y_order.str()}, {"witness", p.witness},
           {"kernel", to_string(p.kernel)}, {"class_size", p.class_size}};
    j["exact_row"] = p.exact_row ? Json(*p.exact_row) : Json(nullptr);
    j["sandwich_row"] = p.sandwich_row ? Json(*p.sandwich_row) : Json(nullptr);
    pairs.push_back(std::move(j));
  }
  return Json{{"m", r.m},
              {"group_order", r.group_order},
              {"subgroups", r.subgroup_count},
              {"surviving_subgroups", r.surviving_subgroups},
              {"closed_under_conjugation", r.closed_under_conjugation},
              {"pairs", pairs},
              {"rows_realized", r.rows_realized},
              {"x_set_matches", r.x_set_matches},
              {"all_sandwiched", r.all_sandwiched},
              {"kernel_element_closure_order", r.kernel_element_closure_order.str()},
              {"cross_element_closure_order", r.cross_element_closure_order.str()},
              {"kernel_closure_matches_table3_x", r.kernel_closure_is_table3_x},
              {"cross_closure_matches_table4_x", r.cross_closure_is_table4_x},
              {"ok", r.ok()}};
}

}  // namespace vtmotion

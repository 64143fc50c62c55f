// vtmotion command-line tool. Every command builds one JSON document; the text
// output is rendered from that document.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "vtmotion/report_json.hpp"
#include "vtmotion/vtmotion.hpp"

namespace vt = vtmotion;
using vt::Json;

namespace {

enum Exit { kOk = 0, kFalsified = 1, kInvalid = 2, kCap = 3 };

struct Options {
  std::string format = "text";
  std::size_t jobs = 1;
  std::optional<std::uint64_t> enumeration_cap, node_cap;
  std::optional<std::size_t> orbit_cap, max_vertices;
};

// VTMOTION_CAPS="enumeration=N,nodes=N,orbits=N,vertices=N"
vt::Limits limits_from_env_and_flags(const Options& opt) {
  vt::Limits limits;
  if (const char* env = std::getenv("VTMOTION_CAPS")) {
    for (const auto& item : vt::detail::split(env, ',')) {
      if (item.empty()) continue;
      const auto eq = item.find('=');
      if (eq == std::string::npos) vt::raise(vt::ErrorKind::invalid_input, "VTMOTION_CAPS entries are key=value");
      const std::string key = item.substr(0, eq);
      const std::uint64_t value = vt::detail::parse_size(item.substr(eq + 1), "VTMOTION_CAPS value");
      if (key == "enumeration") limits.enumeration_cap = value;
      else if (key == "nodes") limits.search_node_cap = value;
      else if (key == "orbits") limits.pair_orbit_cap = value;
      else if (key == "vertices") limits.max_vertices = value;
      else vt::raise(vt::ErrorKind::invalid_input, "unknown VTMOTION_CAPS key '" + key + "'");
    }
  }
  if (opt.enumeration_cap) limits.enumeration_cap = *opt.enumeration_cap;
  if (opt.node_cap) limits.search_node_cap = *opt.node_cap;
  if (opt.orbit_cap) limits.pair_orbit_cap = *opt.orbit_cap;
  if (opt.max_vertices) limits.max_vertices = *opt.max_vertices;
  return limits;
}

std::string slurp(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<vt::Graph> graphs_from_text(const std::string& text) {
  const std::string_view t = vt::trim(text);
  if (t.starts_with("vertices") || t.starts_with("#")) return {vt::from_edge_list(t)};
  std::istringstream in(text);
  auto graphs = vt::read_graph6_lines(in);
  if (graphs.empty()) vt::raise(vt::ErrorKind::invalid_input, "no graph in input");
  return graphs;
}

// A graph argument is a file, a family spec, a graph6 string, or '-' for stdin.
std::vector<vt::Graph> load_graphs(const std::string& arg, const vt::Limits& limits) {
  std::vector<vt::Graph> graphs;
  if (arg.empty() || arg == "-") {
    graphs = graphs_from_text(slurp(std::cin));
  } else if (std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg);
    graphs = graphs_from_text(slurp(in));
  } else if (arg.find(':') != std::string::npos || arg == "petersen") {
    graphs.push_back(vt::graph_from_spec(arg));
  } else {
    graphs.push_back(vt::from_graph6(arg));
  }
  for (const auto& g : graphs) {
    if (g.order() > limits.max_vertices) {
      vt::raise(vt::ErrorKind::cap_exceeded, "graph has " + std::to_string(g.order()) + " vertices, cap is " +
                                                 std::to_string(limits.max_vertices));
    }
  }
  return graphs;
}

vt::PermGroup load_group(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg);
    return vt::read_group(in);
  }
  if (arg.find('(') != std::string::npos) return vt::construct(arg);
  return vt::parse_group(arg);
}

Json group_json(const vt::PermGroup& G) {
  Json gens = Json::array();
  for (const auto& g : G.generators()) gens.push_back(vt::to_cycle_string(g));
  return Json{{"degree", G.degree()}, {"generators", gens}, {"order", G.order().str()}};
}

// ---------------------------------------------------------------------------
// Commands. Each returns the "result" member of the document and an exit code.

struct Outcome {
  Json result;
  int code = kOk;
};

struct ConstructArgs {
  std::string family;
  std::optional<std::size_t> n, m, r;
  std::string set, delta, theta, sigma, matching = "alternate";
  int lambda = 1, kappa = 0;
  bool describe = false;
};

std::size_t need(const std::optional<std::size_t>& v, const char* flag, const std::string& family) {
  if (!v) vt::raise(vt::ErrorKind::invalid_input, family + " needs " + flag);
  return *v;
}

Outcome cmd_construct(const ConstructArgs& a) {
  const std::string& f = a.family;
  vt::Graph g(0);
  std::string indexing = "vertices 1..n as given by the family";
  if (f == "circulant") {
    g = vt::circulant_graph(need(a.n, "--n", f), vt::detail::parse_size_list(a.set, "--set"));
    indexing = "vertex i+1 is residue i";
  } else if (f == "cycle" || f == "complete" || f == "empty" || f == "path") {
    g = vt::graph_from_spec(f + ":" + std::to_string(need(a.n, "--n", f)));
  } else if (f == "matching" || f == "prism" || f == "coprism" || f == "bipartite") {
    g = vt::graph_from_spec(f + ":" + std::to_string(need(a.m, "--m", f)));
    if (f != "bipartite") indexing = "vertex 2i+s+1 is copy s of vertex i";
  } else if (f == "px" || f == "spx") {
    g = vt::graph_from_spec(f + ":" + std::to_string(need(a.r, "--r", f)));
    indexing = f == "px" ? "vertex 2i+j+1 is point j of fibre i" : "vertex 2a+i+1 is point i over base vertex a";
  } else if (f == "petersen") {
    g = vt::petersen_graph();
    indexing = "outer cycle 1..5, spokes i to i+5";
  } else if (f == "lex") {
    if (a.delta.empty() || a.theta.empty()) vt::raise(vt::ErrorKind::invalid_input, "lex needs --delta and --theta");
    const vt::Graph delta = vt::graph_from_spec(a.delta);
    g = vt::lex_product(delta, vt::graph_from_spec(a.theta));
    indexing = "vertex c*|delta|+d+1 is (c, d) with c in theta and d in delta";
  } else if (f == "inf") {
    if (a.sigma.empty()) vt::raise(vt::ErrorKind::invalid_input, "inf needs --sigma");
    const vt::Graph sigma = vt::graph_from_spec(a.sigma);
    const vt::InfParams params{a.lambda, a.kappa, need(a.m, "--m", f)};
    g = vt::inf_graph(params, sigma, vt::matching_from_spec(a.matching, sigma.order()));
    indexing = "vertex a*m+i+1 is point i of the fibre over sigma vertex a";
  } else {
    vt::raise(vt::ErrorKind::invalid_input, "unknown family '" + f + "'");
  }
  Json result = vt::to_json(g);
  result["family"] = f;
  if (a.describe) result["indexing"] = indexing;
  return {result, kOk};
}

Outcome cmd_motion(const std::vector<vt::Graph>& graphs, const vt::Limits& limits) {
  Json list = Json::array();
  for (const auto& g : graphs) {
    Json item = vt::to_json(vt::motion(g, limits));
    item["graph"] = vt::to_json(g);
    list.push_back(std::move(item));
  }
  return {list, kOk};
}

Outcome cmd_classify(const std::vector<vt::Graph>& graphs, const vt::Limits& limits) {
  Json list = Json::array();
  int code = kOk;
  for (const auto& g : graphs) {
    const auto report = vt::classify_graph(g, limits);
    if (report.falsification()) code = kFalsified;
    Json item = vt::to_json(report);
    item["graph"] = vt::to_json(g);
    list.push_back(std::move(item));
  }
  return {list, code};
}

Outcome cmd_aut(const std::vector<vt::Graph>& graphs, const vt::Limits& limits) {
  Json list = Json::array();
  for (const auto& g : graphs) {
    const auto aut = vt::automorphism_group(g, limits);
    Json item = group_json(aut.group);
    item["graph"] = vt::to_json(g);
    list.push_back(std::move(item));
  }
  return {list, kOk};
}

Outcome cmd_mindeg(const std::string& arg, bool wreath_s2, const vt::Limits& limits) {
  vt::PermGroup G = arg.find(':') != std::string::npos || arg == "petersen"
                        ? vt::automorphism_group(vt::graph_from_spec(arg), limits).group
                        : load_group(arg);
  if (wreath_s2) G = vt::wreath_product(G, vt::PermGroup(2, {vt::Permutation::from_cycles(2, {{0, 1}})}));
  const auto md = vt::minimal_degree(G, limits);
  Json result = group_json(G);
  result["minimal_degree"] = md.degree;
  result["witness"] = md.degree == 0 ? Json(nullptr) : Json(vt::to_cycle_string(md.witness));
  return {result, kOk};
}

Json verify_tables(const vt::Limits& limits, bool& falsified) {
  Json rows = Json::array(), skipped = Json::array(), discrepancies = Json::array();
  for (const auto& row : vt::table_data().rows) {
    const auto report = vt::check_table_row(row, limits);
    if (report.status == vt::CheckStatus::skip) skipped.push_back(row.id());
    if (report.status == vt::CheckStatus::discrepancy) discrepancies.push_back(row.id());
    if (report.status == vt::CheckStatus::fail) falsified = true;
    rows.push_back(vt::to_json(report));
  }
  Json pairs = Json::array();
  for (std::size_t m : {2, 3}) {
    const auto report = vt::enumerate_small_subgroup_pairs(m, limits);
    if (!report.ok()) falsified = true;
    pairs.push_back(vt::to_json(report));
  }
  return Json{{"rows", rows}, {"skipped", skipped}, {"discrepancies", discrepancies}, {"subgroup_pairs", pairs}};
}

Json verify_graphs(const vt::CorpusOptions& copt, bool records, std::size_t jobs, const vt::Limits& limits,
                   bool& falsified) {
  const auto report = vt::verify_corpus(vt::default_corpus(copt, limits), jobs, limits);
  if (!report.summary.ok()) falsified = true;
  // Records that need attention are always included.
  Json out = vt::to_json(report, records);
  Json flagged = Json::array();
  for (const auto& r : report.records) {
    if (!r.error.empty() || r.odd_prime_motion || r.unclassified) flagged.push_back(vt::to_json(r));
  }
  out["flagged"] = flagged;
  out["options"] = Json{{"circulant_max", copt.circulant_max}, {"quick", copt.quick}};
  return out;
}

// ---------------------------------------------------------------------------
// Text rendering

void render_graph_line(std::ostream& out, const Json& g) { out << "graph " << g["graph6"].get<std::string>() << "\n"; }

void render_text(std::ostream& out, const std::string& command, const Json& r) {
  if (command == "construct") {
    out << r["graph6"].get<std::string>() << "\n";
    if (r.contains("indexing")) {
      out << "vertices " << r["vertices"] << "\nedges " << r["edges"] << "\nindexing "
          << r["indexing"].get<std::string>() << "\n";
    }
    return;
  }
  if (command == "motion" || command == "classify" || command == "aut") {
    bool first = true;
    for (const auto& item : r) {
      if (!first) out << "\n";
      first = false;
      if (r.size() > 1) render_graph_line(out, item["graph"]);
      if (command == "motion") {
        out << "motion " << item["motion"] << "\n";
        out << "witness " << (item["witness"].is_null() ? "none" : item["witness"].get<std::string>()) << "\n";
      } else if (command == "aut") {
        out << "degree " << item["degree"] << "\n";
        for (const auto& g : item["generators"]) out << g.get<std::string>() << "\n";
        out << "order " << item["order"].get<std::string>() << "\n";
      } else {
        const Json& f = item["form"];
        out << "vertex_transitive " << item["vertex_transitive"] << "\nmotion " << item["motion"] << "\naut_order "
            << item["aut_order"].get<std::string>() << "\nform " << f["label"].get<std::string>() << "\n";
        if (f.contains("m")) out << "m " << f["m"] << "\n";
        if (f.contains("theta")) out << "theta " << f["theta"]["graph6"].get<std::string>() << "\n";
        if (f.contains("sigma")) {
          out << "sigma " << f["sigma"]["graph6"].get<std::string>() << " (" << f["sigma"]["vertices"]
              << " vertices)\npairs";
          for (const auto& p : f["pairs"]) out << " " << p[0] << "-" << p[1];
          out << "\n";
        }
        out << "verified " << item["verified"] << "\n";
        for (const auto& alt : item["alternatives"]) out << "alternative " << alt.get<std::string>() << "\n";
        if (item.contains("note")) out << "note " << item["note"].get<std::string>() << "\n";
        if (item.contains("diagnostic")) out << item["diagnostic"].get<std::string>() << "\n";
      }
    }
    return;
  }
  if (command == "mindeg") {
    out << "degree " << r["degree"] << "\norder " << r["order"].get<std::string>() << "\nminimal_degree "
        << r["minimal_degree"] << "\nwitness "
        << (r["witness"].is_null() ? "none" : r["witness"].get<std::string>()) << "\n";
    return;
  }
  // verify
  if (r.contains("tables")) {
    const Json& t = r["tables"];
    for (const auto& row : t["rows"]) {
      out << "table " << row["table"] << " row " << row["row"] << " " << row["status"].get<std::string>() << "\n";
      for (const auto& inst : row["instances"]) {
        if (inst["status"] == "PASS") continue;
        out << "  p=" << inst["p"] << " m=" << inst["m"] << " " << inst["status"].get<std::string>()
            << (inst["boundary"].get<bool>() ? " (boundary)" : "");
        if (inst.contains("detail")) out << ": " << inst["detail"].get<std::string>();
        out << "\n";
      }
    }
    auto list = [&](const char* label, const Json& ids) {
      out << label;
      for (const auto& id : ids) out << " " << id.get<std::string>();
      out << "\n";
    };
    list("skipped", t["skipped"]);
    list("discrepancies", t["discrepancies"]);
    for (const auto& p : t["subgroup_pairs"]) {
      out << "subgroup pairs m=" << p["m"] << ": " << p["subgroups"] << " subgroups, " << p["pairs"].size()
          << " pair classes, " << (p["ok"].get<bool>() ? "ok" : "MISMATCH") << "\n";
    }
  }
  if (r.contains("graphs")) {
    const Json& s = r["graphs"]["summary"];
    out << "graphs " << s["graphs"] << "\nvertex_transitive " << s["vertex_transitive"] << "\nodd_prime_motions "
        << s["odd_prime_motions"] << "\nunclassified " << s["unclassified"] << "\nerrors " << s["errors"] << "\n";
    out << "forms";
    for (const auto& [k, v] : s["forms"].items()) out << " " << k << ":" << v;
    out << "\nmotions";
    std::map<std::size_t, std::size_t> motions;
    for (const auto& [k, v] : s["motions"].items()) motions[std::stoul(k)] = v.get<std::size_t>();
    for (const auto& [k, v] : motions) out << " " << k << ":" << v;
    const Json& inf = s["inf"];
    out << "\ninf members " << inf["members"] << ", vertex-transitive " << inf["vertex_transitive"]
        << ", transitivity mismatches " << inf["transitivity_mismatches"] << ", motion not 2 or 4 "
        << inf["motion_not_2_or_4"] << "\ninf motion-2 criterion (lambda != kappa, pair transposition) mismatches "
        << inf["proof_criterion_mismatches"] << "\ninf motion-4 exception (lambda = kappa, pair transposition) violations "
        << inf["statement_reading_violations"] << "\n";
    for (const auto& f : r["graphs"]["flagged"]) {
      out << "flagged " << f["family"].get<std::string>() << " " << f["name"].get<std::string>() << " "
          << f["graph6"].get<std::string>() << "\n";
    }
  }
  out << "result " << (r["falsified"].get<bool>() ? "FALSIFIED" : "ok") << "\n";
}

int exit_code(vt::ErrorKind kind) { return kind == vt::ErrorKind::cap_exceeded ? kCap : kInvalid; }

std::string kind_name(vt::ErrorKind kind) {
  switch (kind) {
    case vt::ErrorKind::invalid_input: return "invalid_input";
    case vt::ErrorKind::precondition: return "precondition";
    case vt::ErrorKind::cap_exceeded: return "cap_exceeded";
    case vt::ErrorKind::not_constructible: return "not_constructible";
  }
  return "?";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Motion of vertex-transitive graphs and their small-motion forms"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--jobs", opt.jobs, "Worker threads for corpus runs")->check(CLI::PositiveNumber);
  app.add_option("--enumeration-cap", opt.enumeration_cap, "Maximum group elements enumerated");
  app.add_option("--node-cap", opt.node_cap, "Maximum search nodes");
  app.add_option("--orbit-cap", opt.orbit_cap, "Maximum orbits on pairs when listing invariant graphs");
  app.add_option("--max-vertices", opt.max_vertices, "Maximum graph order accepted")->check(CLI::Range(1, 64));

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build a graph and print it in graph6");
  construct->add_option("family", ca.family, "circulant, cycle, complete, empty, path, matching, prism, coprism, "
                                             "bipartite, px, spx, petersen, lex, inf")
      ->required();
  construct->add_option("--n", ca.n);
  construct->add_option("--m", ca.m);
  construct->add_option("--r", ca.r);
  construct->add_option("--set", ca.set, "Connection set, e.g. 1,2");
  construct->add_option("--delta", ca.delta, "Inner graph of a lexicographic product");
  construct->add_option("--theta", ca.theta, "Outer graph of a lexicographic product");
  construct->add_option("--sigma", ca.sigma, "Base graph of an Inf graph");
  construct->add_option("--matching", ca.matching, "alternate, antipodal or pairs like 1-2,3-4");
  construct->add_option("--lambda", ca.lambda)->check(CLI::Range(0, 1));
  construct->add_option("--kappa", ca.kappa)->check(CLI::Range(0, 1));
  construct->add_flag("--describe", ca.describe, "Also print counts and the vertex indexing");

  std::string graph_arg;
  auto add_graph_command = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("graph", graph_arg, "File, family spec (cycle:6), graph6 string, or - for stdin");
    return sub;
  };
  auto* motion = add_graph_command("motion", "Motion and a minimal-support automorphism");
  auto* classify = add_graph_command("classify", "Identify the motion-2 or motion-4 form");
  auto* aut = add_graph_command("aut", "Automorphism group generators and order");

  std::string group_arg;
  bool wreath_s2 = false;
  auto* mindeg = app.add_subcommand("mindeg", "Minimal degree of a permutation group");
  mindeg->add_option("group", group_arg, "Group file, family such as AGL1(7), or graph family spec")->required();
  mindeg->add_flag("--wreath-s2", wreath_s2, "Use the wreath product with Sym(2) instead");

  std::string suite;
  vt::CorpusOptions copt;
  bool records = false;
  auto* verify = app.add_subcommand("verify", "Run the table checks and/or the graph corpus");
  verify->add_option("suite", suite)->required()->check(CLI::IsMember({"tables", "graphs", "all"}));
  verify->add_flag("--quick", copt.quick, "Smaller corpus");
  verify->add_option("--circulant-max", copt.circulant_max, "Largest circulant order in the corpus")
      ->check(CLI::Range(1, 64));
  verify->add_flag("--records", records, "Include one record per corpus graph");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  std::string command;
  for (auto* sub : {construct, motion, classify, aut, mindeg, verify}) {
    if (sub->parsed()) command = sub->get_name();
  }
  Json doc{{"schema_version", vt::kSchemaVersion}, {"command", command}};
  int code = kOk;
  try {
    const vt::Limits limits = limits_from_env_and_flags(opt);
    Outcome outcome;
    if (command == "construct") {
      outcome = cmd_construct(ca);
    } else if (command == "motion") {
      outcome = cmd_motion(load_graphs(graph_arg, limits), limits);
    } else if (command == "classify") {
      outcome = cmd_classify(load_graphs(graph_arg, limits), limits);
    } else if (command == "aut") {
      outcome = cmd_aut(load_graphs(graph_arg, limits), limits);
    } else if (command == "mindeg") {
      outcome = cmd_mindeg(group_arg, wreath_s2, limits);
    } else {
      bool falsified = false;
      Json result = Json::object();
      if (suite != "graphs") result["tables"] = verify_tables(limits, falsified);
      if (suite != "tables") result["graphs"] = verify_graphs(copt, records, opt.jobs, limits, falsified);
      result["falsified"] = falsified;
      outcome = {result, falsified ? kFalsified : kOk};
    }
    doc["result"] = std::move(outcome.result);
    code = outcome.code;
  } catch (const vt::Error& e) {
    doc["error"] = Json{{"kind", kind_name(e.kind())}, {"message", e.what()}};
    doc["exit_code"] = exit_code(e.kind());
    if (opt.format == "json") {
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cerr << "error: " << e.what() << "\n";
    }
    return exit_code(e.kind());
  }
  doc["exit_code"] = code;
  if (opt.format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else {
    render_text(std::cout, command, doc["result"]);
  }
  return code;
}

/**
 * @file table_rows.hpp
 * @brief Table rows parsed from the embedded data, and the per-row checker.
 */
#pragma once

#include "group_families.hpp"
#include "group_io.hpp"
#include "table_data.hpp"

namespace vtmotion {

enum class MindegTag { always, never, cond_C, p3_and_C, not_applicable };

inline std::string to_string(MindegTag tag) {
  switch (tag) {
    case MindegTag::always: return "always";
    case MindegTag::never: return "never";
    case MindegTag::cond_C: return "cond_C";
    case MindegTag::p3_and_C: return "p3_and_C";
    case MindegTag::not_applicable: return "not_applicable";
  }
  return "?";
}

inline MindegTag parse_mindeg_tag(std::string_view s) {
  for (MindegTag t : {MindegTag::always, MindegTag::never, MindegTag::cond_C, MindegTag::p3_and_C,
                      MindegTag::not_applicable}) {
    if (to_string(t) == s) return t;
  }
  raise(ErrorKind::invalid_input, "unknown mindeg tag: " + std::string(s));
}

/// Whether mindeg(G) = p is claimed, given condition (C) for G.
inline bool predicts_mindeg_p(MindegTag tag, std::size_t p, bool cond_C) {
  switch (tag) {
    case MindegTag::always: return true;
    case MindegTag::never: return false;
    case MindegTag::cond_C: return cond_C;
    case MindegTag::p3_and_C: return p == 3 && cond_C;
    case MindegTag::not_applicable: break;
  }
  raise(ErrorKind::precondition, "row carries no minimal-degree claim");
}

struct TableInstance {
  std::map<std::string, std::size_t> vars;  // p and/or m
  std::string X, Y;                         // group specs, overrides already applied
  bool boundary = false;

  std::size_t get(const std::string& key) const {
    auto it = vars.find(key);
    return it == vars.end() ? 0 : it->second;
  }
  GroupSpec x_spec() const { return parse_group_spec(X, vars); }
  GroupSpec y_spec() const { return parse_group_spec(Y, vars); }
};

struct TableRow {
  int table = 0;
  int row = 0;
  std::string p, m, X, Y;  // as written in the data
  MindegTag mindeg = MindegTag::not_applicable;
  std::vector<TableInstance> instances;
  std::string note;

  bool constructible() const { return !instances.empty(); }
  std::string id() const { return std::to_string(table) + "." + std::to_string(row); }

  /// Instance at (p, m) built from the row templates, when the constraints allow it.
  std::optional<TableInstance> instantiate(std::size_t pv, std::size_t mv) const;
};

namespace detail {

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.emplace_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

/// Evaluates "-", "N", ">=N", "p" and "p+1"; any other form only matches listed instances.
inline bool satisfies(const std::string& constraint, std::size_t value, std::size_t p) {
  if (constraint == "-") return true;
  if (constraint == "p") return value == p;
  if (constraint == "p+1") return value == p + 1;
  const bool at_least = constraint.rfind(">=", 0) == 0;
  const std::string number = at_least ? constraint.substr(2) : constraint;
  if (number.empty() || !std::all_of(number.begin(), number.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    return false;
  }
  const std::size_t bound = std::stoul(number);
  return at_least ? value >= bound : value == bound;
}

inline TableInstance parse_instance(const std::string& text, const TableRow& row) {
  TableInstance inst;
  inst.X = row.X;
  inst.Y = row.Y;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    if (token == "boundary") {
      inst.boundary = true;
      continue;
    }
    const auto eq = token.find('=');
    if (eq == std::string::npos) raise(ErrorKind::invalid_input, "bad instance token: " + token);
    const std::string key = token.substr(0, eq);
    const std::string value = token.substr(eq + 1);
    if (key == "X") {
      inst.X = value;
    } else if (key == "Y") {
      inst.Y = value;
    } else if (key == "p" || key == "m") {
      inst.vars[key] = std::stoul(value);
    } else {
      raise(ErrorKind::invalid_input, "unknown instance key: " + key);
    }
  }
  return inst;
}

}  // namespace detail

inline std::optional<TableInstance> TableRow::instantiate(std::size_t pv, std::size_t mv) const {
  for (const auto& inst : instances) {
    if ((table != 1 || inst.get("p") == pv) && inst.get("m") == mv) return inst;
  }
  if (table == 1 && !detail::satisfies(p, pv, pv)) return std::nullopt;
  if (!detail::satisfies(m, mv, pv)) return std::nullopt;
  TableInstance inst;
  if (table == 1) inst.vars["p"] = pv;
  inst.vars["m"] = mv;
  inst.X = X;
  inst.Y = Y;
  if (!inst.x_spec().constructible() || !inst.y_spec().constructible()) return std::nullopt;
  return inst;
}

struct TableData {
  int version = 0;
  std::vector<TableRow> rows;

  const TableRow& row(int table, int index) const {
    for (const auto& r : rows) {
      if (r.table == table && r.row == index) return r;
    }
    raise(ErrorKind::invalid_input, "no row " + std::to_string(table) + "." + std::to_string(index));
  }
  std::vector<const TableRow*> table(int id) const {
    std::vector<const TableRow*> out;
    for (const auto& r : rows) {
      if (r.table == id) out.push_back(&r);
    }
    return out;
  }
};

inline TableData parse_table_data(std::string_view text) {
  TableData data;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const std::string_view view = trim(line);
    if (view.empty() || view.front() == '#') continue;
    if (view.rfind("version ", 0) == 0) {
      data.version = std::stoi(std::string(view.substr(8)));
      continue;
    }
    const auto fields = detail::split(view, '|');
    if (fields.size() != 9) raise(ErrorKind::invalid_input, "table row needs 9 fields: " + std::string(view));
    TableRow row;
    row.table = std::stoi(fields[0]);
    row.row = std::stoi(fields[1]);
    row.p = fields[2];
    row.m = fields[3];
    row.X = fields[4];
    row.Y = fields[5];
    row.mindeg = parse_mindeg_tag(fields[6]);
    if (fields[7] != "-") {
      for (const auto& item : detail::split(fields[7], ';')) row.instances.push_back(detail::parse_instance(item, row));
    }
    row.note = fields[8] == "-" ? "" : fields[8];
    data.rows.push_back(std::move(row));
  }
  if (data.version != 1) raise(ErrorKind::invalid_input, "unsupported table data version");
  return data;
}

inline const TableData& table_data() {
  static const TableData data = parse_table_data(kTableData);
  return data;
}

// ---------------------------------------------------------------------------
// Row checks

enum class CheckStatus { pass, fail, skip, discrepancy };

inline std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::skip: return "SKIP";
    case CheckStatus::discrepancy: return "DISCREPANCY";
  }
  return "?";
}

/// mindeg(W) = p versus the row's claim, for W = X wr Sym(2) or Y wr Sym(2).
struct MindegClaim {
  std::string group;
  bool cond_C = false;
  bool predicted_is_p = false;
  std::size_t observed = 0;
  bool ok = false;
};

struct InstanceReport {
  std::size_t p = 0, m = 0;
  std::string X, Y;
  bool boundary = false;
  CheckStatus status = CheckStatus::pass;
  std::size_t witnesses = 0;  // elements of the row's type found in Y
  std::size_t matching = 0;   // of those, how many have closure permutation isomorphic to X
  std::string witness;        // first witness, 1-indexed cycles
  BigInt witness_closure_order = 0;
  std::vector<MindegClaim> mindeg;
  std::string detail;
};

struct RowReport {
  int table = 0, row = 0;
  CheckStatus status = CheckStatus::skip;
  std::vector<InstanceReport> instances;
  std::string note;
};

namespace detail {

/// Caches permutation-isomorphism answers for closures that coincide as groups.
class ClosureMatcher {
 public:
  ClosureMatcher(PermGroup target, const Limits& limits) : target_(std::move(target)), limits_(limits) {}

  bool matches(const PermGroup& closure) {
    for (const auto& [group, answer] : seen_) {
      if (same_group(group, closure)) return answer;
    }
    const bool answer = closure.order() == target_.order() && permutation_isomorphic(closure, target_, limits_);
    seen_.emplace_back(closure, answer);
    return answer;
  }

 private:
  static bool same_group(const PermGroup& a, const PermGroup& b) {
    if (a.order() != b.order()) return false;
    return std::all_of(b.generators().begin(), b.generators().end(), [&](const auto& g) { return a.contains(g); });
  }

  PermGroup target_;
  const Limits& limits_;
  std::vector<std::pair<PermGroup, bool>> seen_;
};

/// True when x induces a transposition on the blocks {2i, 2i+1}.
inline bool projects_to_transposition(const Permutation& x) {
  std::size_t moved = 0;
  for (Point i = 0; 2 * i < x.degree(); ++i) {
    const Point image = x(2 * i) / 2;
    if (image != i) ++moved;
  }
  return moved == 2;
}

inline MindegClaim check_mindeg_claim(const std::string& name, const PermGroup& top_block, const PermGroup& X,
                                      std::size_t p, MindegTag tag, const Limits& limits) {
  const std::size_t m = top_block.degree();
  const PermGroup W = wreath_product(top_block, PermGroup(2, {Permutation::from_cycles(2, {{0, 1}})}));
  std::vector<Point> rest;
  for (Point q = static_cast<Point>(m); q < W.degree(); ++q) rest.push_back(q);
  const PermGroup fixer = pointwise_stabilizer(W, rest);
  std::vector<Point> block(m);
  std::iota(block.begin(), block.end(), Point{0});
  std::vector<Permutation> restricted;
  for (const auto& g : fixer.generators()) restricted.push_back(restrict_to(g, block));
  const PermGroup local(m, std::move(restricted));
  MindegClaim claim;
  claim.group = name + " wr Sym(2)";
  claim.cond_C = permutation_isomorphic(local, X, limits).has_value();
  claim.predicted_is_p = predicts_mindeg_p(tag, p, claim.cond_C);
  claim.observed = minimal_degree(W, limits).degree;
  claim.ok = (claim.observed == p) == claim.predicted_is_p;
  return claim;
}

}  // namespace detail

inline InstanceReport check_table_instance(const TableRow& row, const TableInstance& inst,
                                           const Limits& limits = default_limits()) {
  InstanceReport rep;
  rep.p = inst.get("p");
  rep.m = inst.get("m");
  rep.boundary = inst.boundary;
  const GroupSpec xs = inst.x_spec();
  const GroupSpec ys = inst.y_spec();
  rep.X = xs.name();
  rep.Y = ys.name();
  const PermGroup X = construct(xs);
  const PermGroup Y = construct(ys);

  auto is_witness = [&](const Permutation& g) {
    switch (row.table) {
      case 1: return is_prime_cycle(g, rep.p);
      case 4: return classify_element(g).kind == ElementKind::two_two && detail::projects_to_transposition(g);
      default: return classify_element(g).kind == ElementKind::two_two;
    }
  };
  detail::ClosureMatcher matcher(X, limits);
  std::map<BigInt, std::size_t> closure_orders;
  for (const auto& g : elements(Y, limits.enumeration_cap)) {
    if (!is_witness(g)) continue;
    const PermGroup closure = normal_closure(Y, g);
    if (rep.witnesses++ == 0) {
      rep.witness = to_cycle_string(g, true);
      rep.witness_closure_order = closure.order();
    }
    ++closure_orders[closure.order()];
    if (matcher.matches(closure)) ++rep.matching;
  }
  // Table 3 asks for some 2^2-element with the stated closure; the others for all of them.
  const bool closures_ok = rep.witnesses > 0 && (row.table == 3 ? rep.matching > 0 : rep.matching == rep.witnesses);
  std::ostringstream detail_text;
  detail_text << rep.matching << "/" << rep.witnesses << " witness closures match " << rep.X << "; closure orders:";
  for (const auto& [order, count] : closure_orders) detail_text << " " << order << "x" << count;
  rep.detail = detail_text.str();

  bool claims_ok = true;
  if (row.table == 1 && row.mindeg != MindegTag::not_applicable) {
    rep.mindeg.push_back(detail::check_mindeg_claim(rep.X, X, X, rep.p, row.mindeg, limits));
    rep.mindeg.push_back(detail::check_mindeg_claim(rep.Y, Y, X, rep.p, row.mindeg, limits));
    for (const auto& c : rep.mindeg) claims_ok = claims_ok && c.ok;
  }
  if (closures_ok && claims_ok) {
    rep.status = CheckStatus::pass;
  } else {
    rep.status = inst.boundary ? CheckStatus::discrepancy : CheckStatus::fail;
  }
  return rep;
}

inline RowReport check_table_row(const TableRow& row, const Limits& limits = default_limits()) {
  RowReport report;
  report.table = row.table;
  report.row = row.row;
  report.note = row.note;
  if (!row.constructible()) {
    report.status = CheckStatus::skip;
    return report;
  }
  report.status = CheckStatus::pass;
  for (const auto& inst : row.instances) {
    InstanceReport r = check_table_instance(row, inst, limits);
    if (r.status == CheckStatus::fail) {
      report.status = CheckStatus::fail;
    } else if (r.status == CheckStatus::discrepancy && report.status == CheckStatus::pass) {
      report.status = CheckStatus::discrepancy;
    }
    report.instances.push_back(std::move(r));
  }
  return report;
}

}  // namespace vtmotion

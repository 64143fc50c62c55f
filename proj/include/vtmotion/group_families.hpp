/**
 * @file group_families.hpp
 * @brief Constructors for the named permutation groups used by the tables.
 *
 * Subgroups of C2 wr Sym(m) act on 2m points with block i = {2i, 2i+1};
 * point 2i plays +i and 2i+1 plays -i.
 */
#pragma once

#include <map>
#include <sstream>

#include "wreath.hpp"

namespace vtmotion {

enum class Family {
  sym,
  alt,
  cyclic,
  dihedral,
  agl1,        // AGL1(p) on F_p
  agl_d2,      // AGL_d(2) on F_2^d
  psl2,        // PSL2(p) on the projective line
  pgl2,        // PGL2(p) on the projective line
  pgl3_2,      // PGL3(2) on the nonzero vectors of F_2^3
  diag_sym,    // {1} x Sym(m) inside C2 wr Sym(m)
  superflip_sym,  // <tau> x Sym(m)
  even,        // E+ (evenly many flips), no top group
  even_sym,    // E+ : Sym(m)
  c2_wr_sym,   // C2 wr Sym(m)
  metadata,    // named in the tables but not constructible here
};

struct GroupSpec {
  Family family = Family::metadata;
  std::size_t param = 0;  // m, p, or d depending on the family
  std::string label;      // original text, kept for metadata rows

  std::string name() const {
    const std::string a = std::to_string(param);
    switch (family) {
      case Family::sym: return "Sym(" + a + ")";
      case Family::alt: return "Alt(" + a + ")";
      case Family::cyclic: return "C(" + a + ")";
      case Family::dihedral: return "D(" + a + ")";
      case Family::agl1: return "AGL1(" + a + ")";
      case Family::agl_d2: return "AGL(" + a + ",2)";
      case Family::psl2: return "PSL2(" + a + ")";
      case Family::pgl2: return "PGL2(" + a + ")";
      case Family::pgl3_2: return "PGL3(2)";
      case Family::diag_sym: return "DiagSym(" + a + ")";
      case Family::superflip_sym: return "SuperflipSym(" + a + ")";
      case Family::even: return "Even(" + a + ")";
      case Family::even_sym: return "EvenSym(" + a + ")";
      case Family::c2_wr_sym: return "C2wrSym(" + a + ")";
      case Family::metadata: return label;
    }
    return label;
  }

  std::size_t degree() const {
    switch (family) {
      case Family::agl_d2: return std::size_t{1} << param;
      case Family::psl2:
      case Family::pgl2: return param + 1;
      case Family::pgl3_2: return 7;
      case Family::diag_sym:
      case Family::superflip_sym:
      case Family::even:
      case Family::even_sym:
      case Family::c2_wr_sym: return 2 * param;
      default: return param;
    }
  }

  bool constructible() const { return family != Family::metadata; }
};

/// Parses "Sym(m)", "AGL1(p)", "PGL3(2)", "AGL(3,2)", ... with symbols bound in `vars`.
/// Unknown names yield a metadata spec rather than an error.
inline GroupSpec parse_group_spec(const std::string& text, const std::map<std::string, std::size_t>& vars = {}) {
  GroupSpec spec;
  spec.label = text;
  const auto open = text.find('(');
  const auto close = text.rfind(')');
  if (open == std::string::npos || close == std::string::npos || close < open) return spec;
  const std::string head = text.substr(0, open);
  const std::string arg = text.substr(open + 1, close - open - 1);
  auto value = [&](const std::string& s, std::size_t& out) {
    if (s.empty()) return false;
    if (auto it = vars.find(s); it != vars.end()) {
      out = it->second;
      return true;
    }
    for (char c : s) {
      if (c < '0' || c > '9') return false;
    }
    out = std::stoul(s);
    return true;
  };
  static const std::map<std::string, Family> single = {
      {"Sym", Family::sym},           {"Alt", Family::alt},
      {"C", Family::cyclic},          {"D", Family::dihedral},
      {"AGL1", Family::agl1},         {"PSL2", Family::psl2},
      {"PGL2", Family::pgl2},         {"DiagSym", Family::diag_sym},
      {"SuperflipSym", Family::superflip_sym}, {"Even", Family::even},
      {"EvenSym", Family::even_sym},  {"C2wrSym", Family::c2_wr_sym},
  };
  if (head == "PGL3" && arg == "2") {
    spec.family = Family::pgl3_2;
    spec.param = 7;
    return spec;
  }
  if (head == "AGL" || head == "AGL3") {
    std::size_t d = 0;
    const std::string darg = head == "AGL3" ? (arg == "2" ? "3" : "") : arg.substr(0, arg.find(','));
    const bool over_two = head == "AGL3" || (arg.find(',') != std::string::npos && arg.substr(arg.find(',') + 1) == "2");
    if (over_two && value(darg, d)) {
      spec.family = Family::agl_d2;
      spec.param = d;
    }
    return spec;
  }
  if (auto it = single.find(head); it != single.end()) {
    std::size_t v = 0;
    if (value(arg, v)) {
      spec.family = it->second;
      spec.param = v;
    }
  }
  return spec;
}

namespace detail {

inline std::size_t smallest_primitive_root(std::size_t p) {
  if (p == 2) return 1;
  for (std::size_t g = 2; g < p; ++g) {
    std::size_t x = 1, order = 0;
    do {
      x = x * g % p;
      ++order;
    } while (x != 1);
    if (order == p - 1) return g;
  }
  raise(ErrorKind::invalid_input, "no primitive root");
}

inline std::size_t inverse_mod(std::size_t a, std::size_t p) {
  for (std::size_t b = 1; b < p; ++b) {
    if (a * b % p == 1) return b;
  }
  raise(ErrorKind::invalid_input, "not invertible");
}

inline Permutation from_map(std::size_t n, const std::function<Point(Point)>& f) {
  std::vector<Point> images(n);
  for (Point i = 0; i < n; ++i) images[i] = f(i);
  return Permutation(std::move(images));
}

inline std::vector<Permutation> sym_generators(std::size_t m) {
  std::vector<Permutation> gens;
  if (m < 2) return gens;
  gens.push_back(Permutation::from_cycles(m, {{0, 1}}));
  if (m > 2) {
    std::vector<Point> cycle(m);
    std::iota(cycle.begin(), cycle.end(), Point{0});
    gens.push_back(Permutation::from_cycles(m, {cycle}));
  }
  return gens;
}

inline std::vector<Permutation> alt_generators(std::size_t m) {
  std::vector<Permutation> gens;
  if (m < 3) return gens;
  gens.push_back(Permutation::from_cycles(m, {{0, 1, 2}}));
  if (m > 3) {
    std::vector<Point> cycle;
    for (Point i = (m % 2 == 1 ? 0 : 1); i < m; ++i) cycle.push_back(i);
    gens.push_back(Permutation::from_cycles(m, {cycle}));
  }
  return gens;
}

inline void require_prime(std::size_t p, std::size_t max) {
  if (!is_prime(p) || p > max) {
    raise(ErrorKind::invalid_input, "parameter must be a prime <= " + std::to_string(max));
  }
}

/// Projective line over F_p: points 0..p-1 then infinity = p.
inline PermGroup projective_group(std::size_t p, bool special) {
  require_prime(p, 23);
  const Point inf = static_cast<Point>(p);
  const std::size_t n = p + 1;
  const std::size_t g = smallest_primitive_root(p);
  const std::size_t scale = special ? g * g % p : g;
  std::vector<Permutation> gens;
  gens.push_back(from_map(n, [&](Point x) { return x == inf ? inf : static_cast<Point>((x + 1) % p); }));
  gens.push_back(from_map(n, [&](Point x) { return x == inf ? inf : static_cast<Point>(x * scale % p); }));
  gens.push_back(from_map(n, [&](Point x) -> Point {
    if (x == inf) return 0;
    if (x == 0) return inf;
    return static_cast<Point>((p - inverse_mod(x, p)) % p);
  }));
  return PermGroup(n, std::move(gens));
}

/// The d x d bit matrices: transvection x0 += x1 and the cyclic shift of coordinates.
inline std::vector<std::function<std::uint32_t(std::uint32_t)>> gl2_generators(std::size_t d) {
  std::vector<std::function<std::uint32_t(std::uint32_t)>> gens;
  if (d < 2) return gens;
  gens.emplace_back([](std::uint32_t v) { return v ^ ((v >> 1) & 1u); });
  gens.emplace_back([d](std::uint32_t v) {
    const std::uint32_t mask = (1u << d) - 1;
    return ((v << 1) | (v >> (d - 1))) & mask;
  });
  return gens;
}

}  // namespace detail

inline PermGroup construct(const GroupSpec& spec) {
  using namespace detail;
  const std::size_t a = spec.param;
  switch (spec.family) {
    case Family::sym: return PermGroup(a, sym_generators(a));
    case Family::alt: return PermGroup(a, alt_generators(a));
    case Family::cyclic: {
      if (a < 1) raise(ErrorKind::invalid_input, "cyclic group needs degree >= 1");
      return PermGroup(a, {from_map(a, [&](Point x) { return static_cast<Point>((x + 1) % a); })});
    }
    case Family::dihedral: {
      if (a < 1) raise(ErrorKind::invalid_input, "dihedral group needs degree >= 1");
      return PermGroup(a, {from_map(a, [&](Point x) { return static_cast<Point>((x + 1) % a); }),
                           from_map(a, [&](Point x) { return static_cast<Point>((a - x) % a); })});
    }
    case Family::agl1: {
      require_prime(a, 23);
      const std::size_t g = smallest_primitive_root(a);
      return PermGroup(a, {from_map(a, [&](Point x) { return static_cast<Point>((x + 1) % a); }),
                           from_map(a, [&](Point x) { return static_cast<Point>(x * g % a); })});
    }
    case Family::agl_d2: {
      if (a < 1 || a > 4) raise(ErrorKind::invalid_input, "AGL(d,2) requires 1 <= d <= 4");
      const std::size_t n = std::size_t{1} << a;
      std::vector<Permutation> gens{from_map(n, [](Point v) { return v ^ 1u; })};
      for (const auto& m : gl2_generators(a)) gens.push_back(from_map(n, [&](Point v) { return m(v); }));
      return PermGroup(n, std::move(gens));
    }
    case Family::psl2: return projective_group(a, true);
    case Family::pgl2: return projective_group(a, false);
    case Family::pgl3_2: {
      std::vector<Permutation> gens;
      for (const auto& m : gl2_generators(3)) {
        gens.push_back(from_map(7, [&](Point i) { return static_cast<Point>(m(i + 1) - 1); }));
      }
      return PermGroup(7, std::move(gens));
    }
    case Family::diag_sym:
    case Family::superflip_sym:
    case Family::even:
    case Family::even_sym:
    case Family::c2_wr_sym: {
      if (a < 1) raise(ErrorKind::invalid_input, "C2 wr Sym(m) subgroups need m >= 1");
      WreathLabeling lab(2, a);
      const std::size_t n = 2 * a;
      std::vector<Permutation> gens;
      const bool top = spec.family != Family::even;
      if (top) {
        for (const auto& s : sym_generators(a)) gens.push_back(lab.top(s));
      }
      const Permutation flip = Permutation::from_cycles(2, {{0, 1}});
      if (spec.family == Family::superflip_sym) {
        std::vector<Permutation> base(a, flip);
        gens.push_back(lab.element(base, Permutation(a)));
      }
      if (spec.family == Family::even || spec.family == Family::even_sym) {
        for (Point i = 0; i + 1 < a; ++i) gens.push_back(lab.in_copy(flip, i) * lab.in_copy(flip, i + 1));
      }
      if (spec.family == Family::c2_wr_sym) gens.push_back(lab.in_copy(flip, 0));
      return PermGroup(n, std::move(gens));
    }
    case Family::metadata:
      raise(ErrorKind::not_constructible, spec.label + " is not constructible in this library");
  }
  raise(ErrorKind::not_constructible, spec.label);
}

inline PermGroup construct(const std::string& text, const std::map<std::string, std::size_t>& vars = {}) {
  return construct(parse_group_spec(text, vars));
}

/// The superflip of C2 wr Sym(m) on 2m points.
inline Permutation superflip(std::size_t m) {
  std::vector<std::vector<Point>> cycles;
  for (Point i = 0; i < m; ++i) cycles.push_back({2 * i, 2 * i + 1});
  return Permutation::from_cycles(2 * m, cycles);
}

}  // namespace vtmotion

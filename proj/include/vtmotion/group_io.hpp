/**
 * @file group_io.hpp
 * @brief Text format for groups: a `degree n` line followed by one generator
 * per line in 1-indexed cycle notation. Blank lines and `#` comments are ignored.
 */
#pragma once

#include <istream>
#include <sstream>

#include "perm_group.hpp"

namespace vtmotion {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline PermGroup read_group(std::istream& in) {
  std::string line;
  std::optional<std::size_t> degree;
  std::vector<Permutation> gens;
  while (std::getline(in, line)) {
    std::string_view view = line;
    if (auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    if (!degree) {
      constexpr std::string_view prefix = "degree";
      if (view.substr(0, prefix.size()) != prefix) raise(ErrorKind::invalid_input, "expected 'degree n' line");
      std::istringstream number{std::string(view.substr(prefix.size()))};
      std::size_t n = 0;
      if (!(number >> n)) raise(ErrorKind::invalid_input, "bad degree line");
      std::string rest;
      if (number >> rest) raise(ErrorKind::invalid_input, "trailing text on degree line");
      degree = n;
      continue;
    }
    gens.push_back(parse_cycles(view, *degree, true));
  }
  if (!degree) raise(ErrorKind::invalid_input, "missing 'degree n' line");
  return PermGroup(*degree, std::move(gens));
}

inline PermGroup parse_group(const std::string& text) {
  std::istringstream in(text);
  return read_group(in);
}

inline std::string format_group(const PermGroup& G) {
  std::string out = "degree " + std::to_string(G.degree()) + "\n";
  for (const auto& g : G.generators()) out += to_cycle_string(g, true) + "\n";
  return out;
}

}  // namespace vtmotion

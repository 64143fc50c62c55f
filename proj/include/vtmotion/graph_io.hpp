/**
 * @file graph_io.hpp
 * @brief graph6 encoding and a plain edge-list format.
 *
 * Edge-list text: a line "vertices N" followed by one "u v" line per edge,
 * 1-indexed; blank lines and lines starting with '#' are ignored.
 */
#pragma once

#include <istream>
#include <optional>
#include <sstream>

#include "graph.hpp"
#include "group_io.hpp"

namespace vtmotion {

inline std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63U) + 63));
  }
  unsigned acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

inline Graph from_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) raise(ErrorKind::invalid_input, "empty graph6 string");
  for (char c : text) {
    if (c < 63 || c > 126) raise(ErrorKind::invalid_input, "invalid graph6 character");
  }
  std::size_t pos = 0;
  std::size_t n = 0;
  if (text[0] != '~') {
    n = static_cast<std::size_t>(text[0] - 63);
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == '~') raise(ErrorKind::cap_exceeded, "graph6 order exceeds 64 vertices");
    for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | static_cast<std::size_t>(text[k] - 63);
    pos = 4;
  }
  if (n > kMaxVertices) raise(ErrorKind::cap_exceeded, "graph6 order exceeds 64 vertices");
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t expected = (bits + 5) / 6;
  if (text.size() - pos != expected) raise(ErrorKind::invalid_input, "graph6 string has the wrong length");
  Graph g(n);
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const unsigned chunk = static_cast<unsigned>(text[pos + k / 6] - 63);
      if ((chunk >> (5 - k % 6)) & 1U) g.add_edge(i, j);
    }
  }
  // Padding bits must be zero for a canonical string.
  if (bits % 6 != 0) {
    const unsigned last = static_cast<unsigned>(text.back() - 63);
    if (last & ((1U << (6 - bits % 6)) - 1)) raise(ErrorKind::invalid_input, "graph6 padding bits are not zero");
  }
  return g;
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "vertices " << g.order() << "\n";
  for (auto [u, v] : g.edges()) out << u + 1 << " " << v + 1 << "\n";
  return out.str();
}

inline Graph from_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<Graph> g;
  while (std::getline(in, line)) {
    const std::string_view t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    std::istringstream fields{std::string(t)};
    if (!g) {
      std::string word;
      long long n = -1;
      if (!(fields >> word >> n) || word != "vertices" || n < 0) {
        raise(ErrorKind::invalid_input, "edge list must start with 'vertices N'");
      }
      g.emplace(static_cast<std::size_t>(n));
      continue;
    }
    long long u = 0, v = 0;
    std::string extra;
    if (!(fields >> u >> v) || (fields >> extra)) raise(ErrorKind::invalid_input, "bad edge line '" + line + "'");
    if (u < 1 || v < 1 || static_cast<std::size_t>(u) > g->order() || static_cast<std::size_t>(v) > g->order()) {
      raise(ErrorKind::invalid_input, "edge endpoint out of range in '" + line + "'");
    }
    g->add_edge(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1));
  }
  if (!g) raise(ErrorKind::invalid_input, "edge list is empty");
  return *g;
}

/// Accepts either format; edge lists are recognised by their header.
inline Graph parse_graph(std::string_view text) {
  const std::string_view t = trim(text);
  if (t.starts_with("vertices") || t.starts_with("#")) return from_edge_list(t);
  return from_graph6(t);
}

/// One graph6 string per non-empty line.
inline std::vector<Graph> read_graph6_lines(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!trim(line).empty()) out.push_back(from_graph6(line));
  }
  return out;
}

}  // namespace vtmotion

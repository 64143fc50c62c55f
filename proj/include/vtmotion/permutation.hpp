/**
 * @file permutation.hpp
 * @brief Permutations of {0,...,n-1} stored as image arrays.
 *
 * Composition follows the right action: compose(p, q) maps i to q(p(i)),
 * so that w^(pq) = (w^p)^q.
 */
#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace vtmotion {

using Point = std::uint32_t;

class Permutation {
 public:
  Permutation() = default;

  /// Identity of the given degree.
  explicit Permutation(std::size_t degree) : images_(degree) {
    std::iota(images_.begin(), images_.end(), Point{0});
  }

  /// Takes an image array; throws invalid_input unless it is a bijection.
  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (Point p : images_) {
      if (p >= images_.size() || seen[p]) {
        raise(ErrorKind::invalid_input, "image array is not a bijection");
      }
      seen[p] = 1;
    }
  }

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  /// Builds a permutation from disjoint cycles given as 0-indexed point lists.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles) {
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), Point{0});
    std::vector<char> used(degree, 0);
    for (const auto& cycle : cycles) {
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        Point a = cycle[i];
        if (a >= degree) raise(ErrorKind::invalid_input, "cycle point out of range");
        if (used[a]) raise(ErrorKind::invalid_input, "cycles are not disjoint");
        used[a] = 1;
        images[a] = cycle[(i + 1) % cycle.size()];
      }
    }
    return Permutation(std::move(images));
  }

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point p) const { return images_[p]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != i) return false;
    }
    return true;
  }

  Permutation inverse() const {
    Permutation r;
    r.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<Point>(i);
    return r;
  }

  /// Non-trivial cycles; each starts at its smallest point, cycles ordered by that point.
  std::vector<std::vector<Point>> cycles() const {
    std::vector<std::vector<Point>> out;
    std::vector<char> seen(images_.size(), 0);
    for (Point start = 0; start < images_.size(); ++start) {
      if (seen[start] || images_[start] == start) continue;
      std::vector<Point> cycle;
      for (Point p = start; !seen[p]; p = images_[p]) {
        seen[p] = 1;
        cycle.push_back(p);
      }
      out.push_back(std::move(cycle));
    }
    return out;
  }

  /// Sorted lengths of the non-trivial cycles.
  std::vector<std::size_t> cycle_type() const {
    std::vector<std::size_t> lengths;
    for (const auto& c : cycles()) lengths.push_back(c.size());
    std::sort(lengths.begin(), lengths.end());
    return lengths;
  }

  std::uint64_t order() const {
    std::uint64_t result = 1;
    for (std::size_t len : cycle_type()) result = std::lcm(result, static_cast<std::uint64_t>(len));
    return result;
  }

  Permutation power(std::int64_t k) const {
    const std::size_t n = images_.size();
    Permutation r(n);
    if (n == 0) return r;
    for (const auto& cycle : cycles()) {
      const auto len = static_cast<std::int64_t>(cycle.size());
      const std::int64_t shift = ((k % len) + len) % len;
      for (std::int64_t i = 0; i < len; ++i) {
        r.images_[cycle[i]] = cycle[(i + shift) % len];
      }
    }
    return r;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  friend Permutation compose(const Permutation& p, const Permutation& q);

 private:
  std::vector<Point> images_;
};

/// i -> q(p(i)).
inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) raise(ErrorKind::invalid_input, "degree mismatch in compose");
  Permutation r;
  r.images_.resize(p.degree());
  for (std::size_t i = 0; i < p.degree(); ++i) r.images_[i] = q.images_[p.images_[i]];
  return r;
}

inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

/// x^g = g^-1 x g.
inline Permutation conjugate(const Permutation& x, const Permutation& g) {
  return g.inverse() * x * g;
}

inline std::vector<Point> support(const Permutation& p) {
  std::vector<Point> out;
  for (Point i = 0; i < p.degree(); ++i) {
    if (p(i) != i) out.push_back(i);
  }
  return out;
}

inline std::size_t support_size(const Permutation& p) {
  std::size_t count = 0;
  for (Point i = 0; i < p.degree(); ++i) count += (p(i) != i);
  return count;
}

inline bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

enum class ElementKind { identity, transposition, p_cycle, two_two, other };

struct ElementClass {
  ElementKind kind = ElementKind::identity;
  std::size_t cycle_length = 0;  // set for transposition (2) and p_cycle
  friend bool operator==(const ElementClass&, const ElementClass&) = default;
};

inline ElementClass classify_element(const Permutation& p) {
  const auto type = p.cycle_type();
  if (type.empty()) return {ElementKind::identity, 0};
  if (type.size() == 1 && type[0] == 2) return {ElementKind::transposition, 2};
  if (type.size() == 1 && is_prime(type[0])) return {ElementKind::p_cycle, type[0]};
  if (type.size() == 2 && type[0] == 2 && type[1] == 2) return {ElementKind::two_two, 0};
  return {ElementKind::other, 0};
}

/// True when p is a single cycle of prime length ell (ell = 2 means a transposition).
inline bool is_prime_cycle(const Permutation& p, std::size_t ell) {
  const auto type = p.cycle_type();
  return type.size() == 1 && type[0] == ell && is_prime(ell);
}

inline std::string to_cycle_string(const Permutation& p, bool one_based = true) {
  const auto cs = p.cycles();
  if (cs.empty()) return "()";
  std::string out;
  for (const auto& cycle : cs) {
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(cycle[i] + (one_based ? 1 : 0));
    }
    out += ')';
  }
  return out;
}

/// Parses disjoint-cycle notation such as "(1,2)(3,4)"; "()" is the identity.
/// Whitespace is ignored and points may also be separated by spaces.
inline Permutation parse_cycles(std::string_view text, std::size_t degree, bool one_based = true) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') raise(ErrorKind::invalid_input, "expected '(' in cycle notation");
    ++i;
    std::vector<Point> cycle;
    while (true) {
      skip_ws();
      if (i >= text.size()) raise(ErrorKind::invalid_input, "unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (text[i] < '0' || text[i] > '9') raise(ErrorKind::invalid_input, "bad character in cycle");
      std::uint64_t v = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (v > (std::uint64_t{1} << 31)) raise(ErrorKind::invalid_input, "point too large");
        ++i;
      }
      if (one_based) {
        if (v == 0) raise(ErrorKind::invalid_input, "points are 1-indexed");
        --v;
      }
      if (v >= degree) raise(ErrorKind::invalid_input, "point exceeds degree");
      cycle.push_back(static_cast<Point>(v));
    }
    if (cycle.size() > 1) cycles.push_back(std::move(cycle));
    skip_ws();
  }
  return Permutation::from_cycles(degree, cycles);
}

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Point v : p.images()) {
      h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace vtmotion

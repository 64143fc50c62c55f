#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace vtmotion {

enum class ErrorKind {
  invalid_input,
  precondition,
  cap_exceeded,
  not_constructible,
};

/// Single exception type used across the library; the kind selects the CLI exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

/// Resource limits. Exceeding one is always an error, never a silent truncation.
struct Limits {
  std::uint64_t enumeration_cap = 1'000'000;
  std::size_t max_vertices = 64;
  std::uint64_t search_node_cap = 200'000'000;
  std::size_t pair_orbit_cap = 20;
};

inline const Limits& default_limits() {
  static const Limits limits{};
  return limits;
}

}  // namespace vtmotion

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace otfgraph {

/// Nodes are numbered 1..n; n+1 is the "no further neighbor" sentinel.
using Node = std::uint64_t;

/// How a parent link is interpreted by the BA layer: a `dir` link points at
/// the BA parent itself, a `rec` link copies the BA parent of its target.
enum class Flag : std::uint8_t { dir, rec };

inline const char* to_string(Flag f) { return f == Flag::dir ? "dir" : "rec"; }

struct ParentLink {
  Node node = 0;
  Flag flag = Flag::dir;

  friend bool operator==(const ParentLink&, const ParentLink&) = default;
};

/// Raised when a generator invariant is found broken. Never expected in a
/// correct build; tests treat any occurrence as a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace otfgraph

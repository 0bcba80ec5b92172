#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cmred {

/// Input violating an operation's contract (bad degree, malformed value, ...).
class invalid_input : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A configured capacity (group order cap, subgroup search cap) was exceeded.
class capacity_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed text; carries the byte offset of the first offending character.
class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& reason, std::size_t offset)
      : std::runtime_error("parse error at byte " + std::to_string(offset) +
                           ": " + reason),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

}  // namespace cmred

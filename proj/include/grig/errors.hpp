#pragma once

#include <stdexcept>
#include <string>

namespace grig {

// Malformed textual input. Carries the 0-based offset of the offending character.
class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

// Operation refused because it would exceed a configured resource cap.
class cap_error : public std::length_error {
public:
  using std::length_error::length_error;
};

// Structural misuse: mismatched depths, vertex deeper than a portrait, etc.
class depth_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Argument outside the mathematical domain of the operation.
class domain_error : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// A lookup needed data beyond the enumerated radius.
class insufficient_radius_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// File I/O failure, message includes the path.
class io_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace grig

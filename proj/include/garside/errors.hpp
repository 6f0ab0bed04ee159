#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace garside {

// Thrown when a search or enumeration exceeds a configured resource cap.
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input; carries the byte offset of the offending token.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

}  // namespace garside

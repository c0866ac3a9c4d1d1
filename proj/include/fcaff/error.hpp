#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fcaff {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input (words, JSON). `position` is a character offset
// into the offending string.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A search exceeded its explicit cap. Never silently truncated.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

}  // namespace fcaff

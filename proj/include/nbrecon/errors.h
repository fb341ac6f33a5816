#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nbrecon {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed arguments: out-of-range ids, mismatched universes, bad labels.
class InputError : public Error {
 public:
  using Error::Error;
};

// Text that could not be decoded. position is a 0-based byte offset.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " (at byte " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// The instance is outside desk scale (a configured ceiling was hit).
class ResourceError : public Error {
 public:
  using Error::Error;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

}  // namespace nbrecon

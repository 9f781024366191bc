#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace powerchord {

/// Base class for everything the library throws.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (n = 0, malformed permutation, ...).
class InvalidInput : public Error {
public:
  using Error::Error;
};

/// A group or graph could not be built: size cap exceeded, missing catalog entry, wrong backend.
class ConstructionError : public Error {
public:
  using Error::Error;
};

/// Group-spec text did not parse. `offset()` is the byte offset of the offending token.
class ParseError : public Error {
public:
  ParseError(const std::string &what, std::size_t offset)
      : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

/// A self-check failed. Indicates a bug in this library, never bad input.
class InternalError : public Error {
public:
  using Error::Error;
};

} // namespace powerchord

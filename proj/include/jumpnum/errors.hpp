#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jumpnum {

/// Malformed or inconsistent user input.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax error in polynomial text; offset is a 0-based character index.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : InputError(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// A branch needs a deeper tower of algebraic extensions than allowed.
class ExtensionDepthError : public InputError {
 public:
  using InputError::InputError;
};

/// An internal consistency check failed. Never expected on valid input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace jumpnum

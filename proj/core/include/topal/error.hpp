#ifndef TOPAL_ERROR_HPP_
#define TOPAL_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace topal {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed formula text. `position` is a 0-based byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Structurally unusable model data: unknown points, bad subsets, malformed files.
class ModelError : public Error {
 public:
  using Error::Error;
};

/// A formula cannot be evaluated against a model (unknown agent or
/// proposition, or a point outside the neighbourhood function's domain).
class EvalError : public Error {
 public:
  using Error::Error;
};

/// A formula lies outside the fragment an operation accepts.
class FragmentError : public Error {
 public:
  using Error::Error;
};

}  // namespace topal

#endif  // TOPAL_ERROR_HPP_

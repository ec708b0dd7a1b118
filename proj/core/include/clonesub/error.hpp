#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace clonesub {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed problem, graph or truth-table text. Line and column are 1-based;
/// zero means "not applicable".
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A configurable enumeration or size cap was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// A Boolean function is not in the clone generated by a base.
class NotExpressibleError : public Error {
 public:
  using Error::Error;
};

/// An instance lies outside the fragment an algorithm accepts.
class FragmentError : public Error {
 public:
  using Error::Error;
};

/// A named algorithm was requested for an instance it does not accept.
class RoutingConflict : public Error {
 public:
  using Error::Error;
};

/// Two deciders disagreed on the same instance.
class CrosscheckFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace clonesub

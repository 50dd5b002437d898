#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace multitwist {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An identifier that does not name a vertex or edge of the graph.
class UnknownIdError : public Error {
 public:
  explicit UnknownIdError(const std::string& kind, const std::string& id)
      : Error("unknown " + kind + " '" + id + "'"), id_(id) {}
  const std::string& id() const { return id_; }

 private:
  std::string id_;
};

/// An operation was called outside of its domain (bridge passed where a
/// non-separating circle is required, invalid system, genus too small, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input.  `line()` is 1-based; 0 means "no specific line".
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(line == 0 ? message
                        : "line " + std::to_string(line) + ": " + message),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace multitwist

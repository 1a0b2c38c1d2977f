#pragma once

#include <stdexcept>
#include <string>

namespace glc {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed objects: length mismatches, ring mismatches, exponent overflow.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Inputs outside an operation's mathematical domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configured resource cap (pair queue, strand dimension, ...) fired.
class ResourceError : public Error {
 public:
  ResourceError(std::string cap, const std::string& what)
      : Error(what), cap_(std::move(cap)) {}
  const std::string& cap() const { return cap_; }

 private:
  std::string cap_;
};

/// Local cohomology requested in an infinite-tail direction without a window.
class WindowRequired : public Error {
 public:
  using Error::Error;
};

/// Ring-spec or expression parse failure; carries a 1-based position.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        detail_(what),
        line_(line),
        column_(column) {}
  /// The message without the position prefix.
  const std::string& detail() const { return detail_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  std::string detail_;
  int line_;
  int column_;
};

}  // namespace glc

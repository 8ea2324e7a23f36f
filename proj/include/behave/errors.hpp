#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace behave {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CompositionError : public Error {
 public:
  using Error::Error;
};

class CarrierMismatch : public Error {
 public:
  using Error::Error;
};

/// A malformed object or map (duplicate labels, wrong matrix shape, ...).
class InvalidObject : public Error {
 public:
  using Error::Error;
};

class NotParallel : public Error {
 public:
  using Error::Error;
};

class CodomainMismatch : public Error {
 public:
  using Error::Error;
};

class NonInjectiveInclusion : public Error {
 public:
  using Error::Error;
};

/// phi_U maps part of the source behavior outside the target behavior.
class BehaviorEscapes : public Error {
 public:
  using Error::Error;
};

class NotCommuting : public Error {
 public:
  using Error::Error;
};

class NotEpi : public Error {
 public:
  using Error::Error;
};

class UniversumMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidHom : public Error {
 public:
  using Error::Error;
};

class SizeBoundExceeded : public Error {
 public:
  using Error::Error;
};

class UnknownVariable : public Error {
 public:
  using Error::Error;
};

class GlueError : public Error {
 public:
  using Error::Error;
};

/// Netlist / glue-file syntax or validation error with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A netlist that declares no nodes at all; the CLI reports it as a usage error.
class EmptyNetlist : public ParseError {
 public:
  using ParseError::ParseError;
};

}  // namespace behave

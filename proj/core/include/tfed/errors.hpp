#pragma once

#include <stdexcept>
#include <string>

namespace tfed {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a structural precondition (not a cluster graph, bags not cliques, ...).
class MalformedInput : public Error {
 public:
  using Error::Error;
};

class NotCliqueBags : public MalformedInput {
 public:
  using MalformedInput::MalformedInput;
};

class NotCliqueComplement : public MalformedInput {
 public:
  using MalformedInput::MalformedInput;
};

class NotSplit : public MalformedInput {
 public:
  using MalformedInput::MalformedInput;
};

/// An exhaustive routine was asked to run above its configured size cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class InvalidDecomposition : public Error {
 public:
  using Error::Error;
};

class InvalidPartition : public Error {
 public:
  using Error::Error;
};

/// Generator parameters too small for the construction to be faithful.
class ParameterTooSmall : public Error {
 public:
  using Error::Error;
};

class AlphaTooSmall : public Error {
 public:
  using Error::Error;
};

/// Construction is well defined but too large to materialize.
class InstanceTooLarge : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

class SemanticError : public Error {
 public:
  SemanticError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace tfed

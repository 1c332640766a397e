#pragma once

#include <stdexcept>
#include <string>

namespace locatable {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class PatternTooLarge : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class Disconnected : public Error {
 public:
  Disconnected() : Error("graph is disconnected") {}
};

class EmptySet : public Error {
 public:
  EmptySet() : Error("vertex set is empty") {}
};

class RejectionLimit : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

/// Raised when an artifact is requested that the verdict does not support.
class WrongVerdict : public Error {
 public:
  using Error::Error;
};

class MalformedTree : public Error {
 public:
  using Error::Error;
};

}  // namespace locatable

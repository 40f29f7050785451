#pragma once

#include <stdexcept>
#include <string>

namespace indexlab {

// Root of every error the library throws on bad input or unsupported use.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class UnsupportedField : public Error {
 public:
  using Error::Error;
};

class InvalidBlock : public Error {
 public:
  using Error::Error;
};

class InvalidModel : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public InvalidModel {
 public:
  using InvalidModel::InvalidModel;
};

class NonTerminatingSum : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

class InconsistentConstraint : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  PreconditionError(std::string hypothesis, const std::string& detail)
      : Error("precondition '" + hypothesis + "' failed: " + detail),
        hypothesis_(std::move(hypothesis)) {}

  const std::string& hypothesis() const noexcept { return hypothesis_; }

 private:
  std::string hypothesis_;
};

// Malformed textual or JSON input; `where` names the offending field.
class ParseError : public Error {
 public:
  ParseError(std::string where, const std::string& what)
      : Error(where + ": " + what), where_(std::move(where)) {}

  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

}  // namespace indexlab

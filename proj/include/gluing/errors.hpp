#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "gluing/report.hpp"

namespace gluing {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed user input (bad tables, unknown names, syntax).
class InputError : public Error {
 public:
  using Error::Error;
};

class InvalidTopology : public InputError {
 public:
  using InputError::InputError;
};
class UnknownPoint : public InputError {
 public:
  using InputError::InputError;
};
class BadArity : public InputError {
 public:
  using InputError::InputError;
};
class CompositionMismatch : public InputError {
 public:
  using InputError::InputError;
};
class UnknownMorphism : public InputError {
 public:
  using InputError::InputError;
};
class MissingLeg : public InputError {
 public:
  using InputError::InputError;
};
class MissingComponent : public InputError {
 public:
  using InputError::InputError;
};

// Spec-file errors carry a location: "line:col" for syntax, a slash path
// such as "gluings/GD-CIRC/anchors/1,2" for semantic problems.
class ParseError : public InputError {
 public:
  ParseError(std::string location, const std::string& message)
      : InputError("ParseError at " + location + ": " + message), location(std::move(location)) {}
  std::string location;
};
class UnresolvedReference : public InputError {
 public:
  UnresolvedReference(std::string name, const std::string& location)
      : InputError("UnresolvedReference(" + name + ") at " + location), name(std::move(name)) {}
  std::string name;
};
class DuplicateName : public InputError {
 public:
  DuplicateName(std::string name, const std::string& location)
      : InputError("DuplicateName(" + name + ") at " + location), name(std::move(name)) {}
  std::string name;
};
class UnknownCommand : public InputError {
 public:
  using InputError::InputError;
};
class UnknownTarget : public InputError {
 public:
  using InputError::InputError;
};

class SearchBudgetExceeded : public Error {
 public:
  using Error::Error;
};

// A mathematical check failed; these map to exit status 1 in the CLI.
class CheckFailure : public Error {
 public:
  using Error::Error;
};
class ValidationFailed : public CheckFailure {
 public:
  explicit ValidationFailed(Report r)
      : CheckFailure("ValidationFailed\n" + r.render()), report(std::move(r)) {}
  Report report;
};
class NotDetermined : public CheckFailure {
 public:
  using CheckFailure::CheckFailure;
};
class NotEquivalence : public CheckFailure {
 public:
  using CheckFailure::CheckFailure;
};
class IllDefined : public CheckFailure {
 public:
  using CheckFailure::CheckFailure;
};
class NotCovering : public CheckFailure {
 public:
  using CheckFailure::CheckFailure;
};
class NotContinuous : public CheckFailure {
 public:
  using CheckFailure::CheckFailure;
};
class HypothesisBFailed : public CheckFailure {
 public:
  using CheckFailure::CheckFailure;
};

}  // namespace gluing

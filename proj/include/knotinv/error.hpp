#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace knotinv {

enum class ErrorKind {
  MalformedPD,
  InvalidPD,
  NotAKnot,
  IndexOutOfRange,
  NotADoublePoint,
  UnknownVariable,
  PoleAtZero,
  BranchUndefined,
  InexactDivision,
  IncompleteGrid,
  TooFewValues,
  DiagramTooLarge,
  GridBudgetExceeded,
  DegenerateG,
  FileNotFound,
  MalformedEntry,
  DuplicateName,
  UnknownKnot,
  SyntaxError,
  InvalidArgument,
  Overflow,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every domain failure in the library is reported through this type; the
// kind is what callers (and the CLI exit-code mapping) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace knotinv

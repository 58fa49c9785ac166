// Error taxonomy shared by all pax modules.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pax {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Mixing scalars or tables that live over different fields.
struct FieldMismatchError : Error {
  using Error::Error;
};

struct DivisionByZeroError : Error {
  using Error::Error;
};

// Dimension or table-shape disagreement between arguments.
struct ShapeError : Error {
  using Error::Error;
};

// A finite enumeration was requested over Q.
struct InfiniteFieldError : Error {
  using Error::Error;
};

// Bad field construction: composite modulus, or modulus out of range.
struct InvalidFieldError : Error {
  using Error::Error;
};

// A documented precondition of an operation does not hold.
struct PreconditionError : Error {
  using Error::Error;
};

struct NotAMorphismError : Error {
  using Error::Error;
};

struct NotASectionError : Error {
  using Error::Error;
};

struct NotPoissonError : Error {
  using Error::Error;
};

struct InvalidCoflagError : Error {
  using Error::Error;
};

// A pre-crossed datum that fails check_crossed_system was passed where a
// valid crossed system is required.
struct NotValidSystemError : Error {
  using Error::Error;
};

struct DimVNotOneError : Error {
  using Error::Error;
};

struct InvalidCMatrixError : Error {
  using Error::Error;
};

// Enumeration workload above the supported search-space cap.
struct TooLargeError : Error {
  using Error::Error;
};

// A decision procedure had no applicable strategy.  Surfaced by
// quotient_classes when a decider declines; never raised by the staged
// classification entry points, whose deciders are total.
struct UndecidableError : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(std::size_t line, const std::string& reason)
      : Error("line " + std::to_string(line) + ": " + reason), line(line) {}
  std::size_t line;
};

struct IndexOutOfRangeError : ParseError {
  using ParseError::ParseError;
};

struct FieldSyntaxError : ParseError {
  using ParseError::ParseError;
};

}  // namespace pax

#pragma once

#include <stdexcept>
#include <string>

namespace grp {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidPerm : Error {
  using Error::Error;
};

struct OrderExceedsCap : Error {
  using Error::Error;
};

struct NotNormal : Error {
  using Error::Error;
};

struct NotConjugationClosed : Error {
  using Error::Error;
};

struct ConstructionFailed : Error {
  using Error::Error;
};

// Enumeration budget ran out where an exhaustive answer was required.
struct BudgetExceeded : Error {
  using Error::Error;
};

// Two independent computation routes disagreed, or an internal invariant
// (closure, Lagrange, normality of a radical) failed.  Always a bug.
struct InternalDisagreement : Error {
  using Error::Error;
};

struct ParseError : Error {
  int line;
  ParseError(const std::string& what, int line_no)
      : Error(what + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
};

struct DegreeMismatch : ParseError {
  using ParseError::ParseError;
};

inline void check_internal(bool cond, const char* msg) {
  if (!cond) throw InternalDisagreement(msg);
}

}  // namespace grp

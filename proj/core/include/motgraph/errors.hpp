#ifndef MOTGRAPH_ERRORS_HPP
#define MOTGRAPH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace motg {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A substituted symbol left a 0^0-style form that has no limit value.
struct IndeterminateForm : Error {
  using Error::Error;
};

/// Numeric evaluation asked for a symbol that has no assigned value.
struct MissingAssignment : Error {
  using Error::Error;
};

/// Numeric evaluation assigned 0 to a symbol in the denominator group.
struct ZeroAssignment : Error {
  using Error::Error;
};

struct InvalidGraph : Error {
  using Error::Error;
};

/// Raised when a combinatorial search exceeds its configured cap.
struct BudgetExceeded : Error {
  using Error::Error;
};

struct DepthExceeded : Error {
  using Error::Error;
};

/// A tensor-layer lift has a residue that admits no symmetrized preimage.
struct LiftObstructed : Error {
  using Error::Error;
};

/// A parsed cycle coordinate is not of the supported linear-fraction form.
struct NotOneLLinear : Error {
  using Error::Error;
};

struct NonConvergent : Error {
  using Error::Error;
};

struct ToleranceNotMet : Error {
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

}  // namespace motg

#endif

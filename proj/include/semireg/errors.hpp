#pragma once

#include <stdexcept>
#include <string>

namespace semireg {

/// Caller passed arguments outside an operation's domain.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input is valid but the requested work exceeds what we are prepared to do.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant failed; indicates a bug in a construction.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A graph could not be built from the supplied data.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace semireg

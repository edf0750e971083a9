#pragma once

#include <stdexcept>
#include <string>

namespace lcgl2 {

/// Base of every exception the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller broke a documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class PrimeMismatch : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NotAUnit : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class SingularCurve : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// An internal consistency check failed; indicates a bug, not bad input.
class InvariantError : public Error {
 public:
  using Error::Error;
};

class HenselPreconditionError : public PreconditionError {
 public:
  HenselPreconditionError(const std::string& what, long tau, long value_valuation)
      : PreconditionError(what), tau_(tau), value_valuation_(value_valuation) {}

  /// Computed v_p(f'(alpha)).
  long tau() const { return tau_; }
  /// Computed v_p(f(alpha)), or the working precision when f(alpha) vanished there.
  long value_valuation() const { return value_valuation_; }

 private:
  long tau_;
  long value_valuation_;
};

/// Certificate text that does not follow the schema.
class ParseError : public Error {
 public:
  ParseError(std::string field, const std::string& what)
      : Error(field.empty() ? what : field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

}  // namespace lcgl2

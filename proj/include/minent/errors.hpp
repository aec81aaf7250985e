#pragma once

#include <stdexcept>
#include <string>

namespace minent {

/// Base class for all library errors. `code()` is a stable machine-readable
/// identifier used by the CLI result format.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

/// Vertex / assignment enumeration exceeded its budget.
class LimitExceeded : public Error {
 public:
  explicit LimitExceeded(const std::string& message)
      : Error("LimitExceeded", message) {}
};

/// Common denominator too large for the pseudo-polynomial dynamic program.
class DenominatorOverflow : public Error {
 public:
  explicit DenominatorOverflow(const std::string& message)
      : Error("DenominatorOverflow", message) {}
};

/// Subset-sum target exceeds the total weight; the reduced column marginal
/// would not be a distribution.
class TargetExceedsTotal : public Error {
 public:
  explicit TargetExceedsTotal(const std::string& message)
      : Error("TargetExceedsTotal", message) {}
};

/// Problem instance violates its structural invariants.
class MalformedInstance : public Error {
 public:
  explicit MalformedInstance(const std::string& message)
      : Error("MalformedInstance", message) {}
};

/// Input text is not valid JSON.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message)
      : Error("ParseError", message) {}
};

/// JSON is well-formed but does not match the instance schema.
class SchemaError : public Error {
 public:
  explicit SchemaError(const std::string& message)
      : Error("SchemaError", message) {}
};

/// A field parsed but carries an unusable value (negative weight, marginals
/// not summing to one, float literal where an exact rational is required).
class ValueError : public Error {
 public:
  explicit ValueError(const std::string& message)
      : Error("ValueError", message) {}
};

}  // namespace minent

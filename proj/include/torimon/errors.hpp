#pragma once

#include <stdexcept>
#include <string>

namespace torimon {

/// Coarse error categories, mapped to CLI exit codes.
enum class ErrorKind {
  usage,       // exit 1
  validation,  // exit 2
  scale_limit  // exit 3
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

#define TORIMON_ERROR_CLASS(Name, Kind)                                      \
  class Name : public Error {                                                \
   public:                                                                   \
    explicit Name(const std::string& what) : Error(ErrorKind::Kind, what) {} \
  }

TORIMON_ERROR_CLASS(DimensionMismatch, validation);
TORIMON_ERROR_CLASS(NotStronglyConvex, validation);
TORIMON_ERROR_CLASS(NotInSemigroup, validation);
TORIMON_ERROR_CLASS(NotADemazureRoot, validation);
TORIMON_ERROR_CLASS(RayIndexOutOfRange, validation);
TORIMON_ERROR_CLASS(NotAFace, validation);
TORIMON_ERROR_CLASS(InvalidPoint, validation);
TORIMON_ERROR_CLASS(IncoherentZeroPattern, validation);
TORIMON_ERROR_CLASS(ZeroValue, validation);
TORIMON_ERROR_CLASS(NotInvertible, validation);
TORIMON_ERROR_CLASS(TemplateMismatch, validation);
TORIMON_ERROR_CLASS(ParseError, validation);
TORIMON_ERROR_CLASS(SchemaError, validation);
TORIMON_ERROR_CLASS(ValidationError, validation);
TORIMON_ERROR_CLASS(ScaleLimit, scale_limit);
TORIMON_ERROR_CLASS(UsageError, usage);

#undef TORIMON_ERROR_CLASS

}  // namespace torimon

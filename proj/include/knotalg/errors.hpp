#pragma once

#include <stdexcept>
#include <string>

namespace knotalg {

enum class ErrorKind {
  ShapeMismatch,
  RingMismatch,
  NotSquare,
  NotInvertible,
  NotIdempotent,
  NotIntertwining,
  NotNearProjection,
  InvalidPresentation,
  SourceTargetMismatch,
  SingularForm,
  NotSymmetric,
  NotNonsingularForm,
  WrongEta,
  ResourceLimit,
  InternalAssertion,
  ParseError,
};

const char* error_name(ErrorKind k);

// Errors caused by malformed input rather than by the mathematics.
bool is_validation_error(ErrorKind k);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void check(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

// Self-check of an identity the algorithms rely on; must never fire.
inline void ensure(bool cond, const std::string& what) {
  if (!cond) fail(ErrorKind::InternalAssertion, what);
}

}  // namespace knotalg

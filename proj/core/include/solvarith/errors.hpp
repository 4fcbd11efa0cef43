#pragma once

#include <stdexcept>
#include <string>

namespace solvarith {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A resource cap (orbit size, group order, factorization bound, ...) was hit.
// These are recoverable in the sense that the caller may retry with a larger cap.
struct CapError : Error {
  using Error::Error;
};

struct SingularMatrix : Error {
  SingularMatrix() : Error("matrix is singular") {}
};
struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& msg) : Error("dimension mismatch: " + msg) {}
};

struct NotSolvable : Error {
  NotSolvable() : Error("Lie algebra is not solvable") {}
};
struct NotNilpotent : Error {
  NotNilpotent() : Error("matrix is not nilpotent") {}
};
struct NotUnipotent : Error {
  NotUnipotent() : Error("matrix is not unipotent") {}
};
struct SplitVerificationFailed : Error {
  explicit SplitVerificationFailed(const std::string& what) : Error("d+n split verification failed: " + what) {}
};

struct NotAUnit : Error {
  NotAUnit() : Error("element is not a unit of the quadratic order") {}
};
struct UnsupportedDegree : Error {
  explicit UnsupportedDegree(const std::string& msg) : Error("unsupported field degree: " + msg) {}
};
struct FactorizationCapExceeded : CapError {
  explicit FactorizationCapExceeded(const std::string& msg) : CapError("factorization cap exceeded: " + msg) {}
};
struct FactorIncomplete : Error {
  explicit FactorIncomplete(const std::string& msg) : Error("polynomial factorization incomplete: " + msg) {}
};

struct BadPrime : Error {
  explicit BadPrime(const std::string& msg) : Error("bad congruence prime: " + msg) {}
};
struct OrderCapExceeded : CapError {
  explicit OrderCapExceeded(const std::string& msg) : CapError("group order cap exceeded: " + msg) {}
};
struct OrbitCapExceeded : CapError {
  explicit OrbitCapExceeded(const std::string& msg) : CapError("orbit cap exceeded: " + msg) {}
};

struct NotIntegral : Error {
  explicit NotIntegral(const std::string& msg) : Error("group is not integral: " + msg) {}
};
struct NonIntegralGrowth : Error {
  NonIntegralGrowth()
      : Error("lattice closure escaped Z^n; the supplied denominator is not a common denominator") {}
};

struct ResourceExhausted : CapError {
  explicit ResourceExhausted(const std::string& msg) : CapError("resource exhausted: " + msg) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error("parse error: " + msg) {}
};

}  // namespace solvarith

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace czorb {

enum class ErrorKind {
  Domain,
  NotCoprime,
  Overflow,
  UncoveredCase,
  Convergence,
  Resolution,
  Internal,
};

/// Base of every exception thrown by the library. The kind drives the
/// C API status code and the CLI exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what)
      : Error(ErrorKind::Domain, what) {}
};

/// Raised when a weight vector has a common factor. Carries that factor.
class NotCoprimeError : public Error {
 public:
  explicit NotCoprimeError(std::int64_t gcd)
      : Error(ErrorKind::NotCoprime,
              "weights are not coprime (gcd = " + std::to_string(gcd) + ")"),
        gcd_(gcd) {}

  std::int64_t gcd() const noexcept { return gcd_; }

 private:
  std::int64_t gcd_;
};

class OverflowError : public Error {
 public:
  explicit OverflowError(const std::string& what)
      : Error(ErrorKind::Overflow, "integer overflow: " + what) {}
};

/// A formula branch exists but no worked case pins it down, and the caller
/// did not opt into extrapolation.
class UncoveredCaseError : public Error {
 public:
  explicit UncoveredCaseError(const std::string& what)
      : Error(ErrorKind::UncoveredCase, what) {}
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double achieved_error)
      : Error(ErrorKind::Convergence, what), achieved_error_(achieved_error) {}

  double achieved_error() const noexcept { return achieved_error_; }

 private:
  double achieved_error_;
};

/// Phase unwrapping could not resolve the winding to the required accuracy.
class ResolutionError : public Error {
 public:
  ResolutionError(const std::string& what, double residual)
      : Error(ErrorKind::Resolution, what), residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what)
      : Error(ErrorKind::Internal, "internal consistency failure: " + what) {}
};

}  // namespace czorb

#pragma once

#include <stdexcept>
#include <string>

namespace kl {

enum class ErrorKind {
  Domain,
  Validation,
  UnknownParameter,
  Resource,
  Consistency,
  InsufficientData,
  Convergence,
  NonHorizontal,
  Transversality,
  Pipeline,
  Io,
};

const char* to_string(ErrorKind kind);

/// Base of every error raised by the library. The kind selects the CLI exit
/// code (see cli::exit_code_for).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorKind::Domain, what) {}
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(ErrorKind::Validation, what) {}
};

class UnknownParameterError : public Error {
 public:
  explicit UnknownParameterError(const std::string& what)
      : Error(ErrorKind::UnknownParameter, what) {}
};

/// A grid, cover or sample would exceed its configured budget.
class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& what) : Error(ErrorKind::Resource, what) {}
};

/// A certificate failed re-verification. Never expected to fire.
class ConsistencyError : public Error {
 public:
  explicit ConsistencyError(const std::string& what) : Error(ErrorKind::Consistency, what) {}
};

class InsufficientDataError : public Error {
 public:
  explicit InsufficientDataError(const std::string& what)
      : Error(ErrorKind::InsufficientData, what) {}
};

class ConvergenceError : public Error {
 public:
  explicit ConvergenceError(const std::string& what) : Error(ErrorKind::Convergence, what) {}
};

class NonHorizontalError : public Error {
 public:
  explicit NonHorizontalError(const std::string& what) : Error(ErrorKind::NonHorizontal, what) {}
};

class TransversalityError : public Error {
 public:
  explicit TransversalityError(const std::string& what)
      : Error(ErrorKind::Transversality, what) {}
};

class PipelineError : public Error {
 public:
  explicit PipelineError(const std::string& what) : Error(ErrorKind::Pipeline, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorKind::Io, what) {}
};

}  // namespace kl

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gcs {

// Base of every error thrown by the library.
class GcsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public GcsError {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : GcsError(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class UnknownIdentifierError : public ParseError {
 public:
  UnknownIdentifierError(const std::string& name, std::size_t offset)
      : ParseError("unknown identifier '" + name + "'", offset), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

// Numeric evaluation left the real domain (negative base, ln of non-positive,
// near-zero denominator, overflow). Samplers catch this and resample.
class DomainError : public GcsError {
 public:
  using GcsError::GcsError;
};

// An argument violates a structural precondition (wrong jet variables etc).
class InvalidArgument : public GcsError {
 public:
  using GcsError::GcsError;
};

class NonQuasilinearError : public GcsError {
 public:
  using GcsError::GcsError;
};

class TrivialOperatorError : public GcsError {
 public:
  using GcsError::GcsError;
};

class SingularAnsatzError : public GcsError {
 public:
  using GcsError::GcsError;
};

class EssentialityError : public GcsError {
 public:
  using GcsError::GcsError;
};

class NotSolutionError : public GcsError {
 public:
  using GcsError::GcsError;
};

class IntegrationError : public GcsError {
 public:
  using GcsError::GcsError;
};

}  // namespace gcs

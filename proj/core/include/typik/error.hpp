#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace typik {

/// A located complaint about a knowledge base, network or query document.
struct Diagnostic {
  std::string location;
  std::string message;

  bool operator==(const Diagnostic&) const = default;
};

std::string format_diagnostics(const std::vector<Diagnostic>& diagnostics);

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

class IoError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "io"; }
};

/// Malformed input text (JSON shape, concept expression, decimal literal, query).
class ParseError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "parse"; }
};

/// A structurally well-formed document that violates a knowledge base invariant.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Diagnostic> diagnostics);
  const std::vector<Diagnostic>& diagnostics() const noexcept { return diagnostics_; }
  const char* kind() const noexcept override { return "validation"; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

class UnknownAtomError : public Error {
 public:
  explicit UnknownAtomError(const std::string& name)
      : Error("unknown atom '" + name + "'"), name_(name) {}
  const std::string& name() const noexcept { return name_; }
  const char* kind() const noexcept override { return "unknown-atom"; }

 private:
  std::string name_;
};

/// Raised when a search would exceed its configured node cap.
class ResourceError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "resource"; }
};

/// Raised by operations whose preconditions on the KB shape do not hold
/// (cyclic feedforward graph, undistinguished non-input concept, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "precondition"; }
};

}  // namespace typik

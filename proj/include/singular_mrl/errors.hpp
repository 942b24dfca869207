#pragma once

#include <stdexcept>
#include <string>

namespace singular_mrl {

enum class ErrorKind {
  domain,       // argument outside the support [0, 1]
  parameter,    // invalid family parameter or configuration
  resource,     // requested output exceeds a configured cap
  convergence,  // a solver bracket failed to sign-change
};

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
  explicit DomainError(const std::string& what) : Error(ErrorKind::domain, what) {}
};

class ParameterError : public Error {
 public:
  explicit ParameterError(const std::string& what)
      : Error(ErrorKind::parameter, what) {}
};

class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& what)
      : Error(ErrorKind::resource, what) {}
};

class ConvergenceError : public Error {
 public:
  explicit ConvergenceError(const std::string& what)
      : Error(ErrorKind::convergence, what) {}
};

}  // namespace singular_mrl

#pragma once

#include <stdexcept>
#include <string>

namespace tightpoly {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Live cosets reached the configured bound; the group may be infinite.
class BoundExceeded : public Error {
 public:
  BoundExceeded(std::size_t bound)
      : Error("coset enumeration exceeded " + std::to_string(bound) + " cosets"), bound_(bound) {}
  std::size_t bound() const noexcept { return bound_; }

 private:
  std::size_t bound_;
};

class InvalidPresentation : public Error {
 public:
  using Error::Error;
};

/// Schläfli parameters outside the supported range (p, q >= 2).
class InvalidType : public Error {
 public:
  using Error::Error;
};

class InvalidK : public Error {
 public:
  using Error::Error;
};

class TypeMismatch : public Error {
 public:
  using Error::Error;
};

class LabelError : public Error {
 public:
  using Error::Error;
};

class UnsupportedFormat : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A closed-form record failed its group-level checks. Never expected on a correct build.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace tightpoly

#pragma once

#include <stdexcept>
#include <string>

namespace rgood {

// Malformed input or a violated precondition.
class InvalidInput : public std::runtime_error {
 public:
  explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

// An exact search would exceed its configured size or node budget.
class GuardExceeded : public std::runtime_error {
 public:
  explicit GuardExceeded(const std::string& what) : std::runtime_error(what) {}
};

// A certificate failed re-validation.
class CertificateInvalid : public std::runtime_error {
 public:
  explicit CertificateInvalid(const std::string& what) : std::runtime_error(what) {}
};

// Internal consistency failure; never expected on valid input.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw InvalidInput(message);
}

}  // namespace rgood

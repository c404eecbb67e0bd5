#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace weylgrowth {

/// Malformed or unsupported user input (bad preset name, bad JSON, wrong dimensions).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its documented domain.
class PreconditionFailure : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An enumeration would exceed its configured cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A growth model violates one of the structural properties of a growth indicator.
class ModelInvariantError : public std::runtime_error {
 public:
  explicit ModelInvariantError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

}  // namespace weylgrowth

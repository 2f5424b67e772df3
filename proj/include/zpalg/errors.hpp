#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace zpalg {

/// Malformed or out-of-range input (CLI exit code 2).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input that is well-formed but outside what an operation supports,
/// e.g. a non-free module where a free one is required.
class Unsupported : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// A size guard tripped (CLI exit code 3).
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation's documented precondition does not hold for the given data.
class PreconditionViolation : public InvalidInput {
 public:
  PreconditionViolation(std::string which, const std::string& what)
      : InvalidInput(what), which_(std::move(which)) {}
  const std::string& which() const noexcept { return which_; }

 private:
  std::string which_;
};

/// Thrown by split_injection_normalize when the map has a kernel. The witness
/// is a nonzero domain element (coordinates in the domain basis) mapping to 0.
class NotInjective : public InvalidInput {
 public:
  NotInjective(int degree, std::vector<long long> witness, const std::string& what)
      : InvalidInput(what), degree_(degree), witness_(std::move(witness)) {}
  int degree() const noexcept { return degree_; }
  const std::vector<long long>& witness() const noexcept { return witness_; }

 private:
  int degree_;
  std::vector<long long> witness_;
};

/// A complex expected to be exact has homology at (degree, weight).
class NotAcyclic : public InvalidInput {
 public:
  NotAcyclic(int degree, int weight, const std::string& what)
      : InvalidInput(what), degree_(degree), weight_(weight) {}
  int degree() const noexcept { return degree_; }
  int weight() const noexcept { return weight_; }

 private:
  int degree_;
  int weight_;
};

}  // namespace zpalg

#pragma once

#include <stdexcept>
#include <string>

namespace spectra {

/// Precondition on an operation's arguments was not met.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Input is well formed but violates a standing hypothesis of the theory
/// (cuspidal fibers, isotrivial fibration, non-coprime generators, ...).
class HypothesisViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An identity that must always hold failed at a concrete instance.
class Falsification : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Requested direct image is not one of the tabulated entries.
class UnsupportedRegistry : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed textual or JSON input.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace spectra

#pragma once

#include <stdexcept>
#include <string>

namespace qdiss {

// Bad argument value or shape (out-of-range index, dimension mismatch, p outside [0,1], ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input violates a numerical precondition (non-Hermitian, not PSD beyond the clamp tolerance).
class StateError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Iteration failed to converge or an objective produced a non-finite value.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// (state, channel) pair has no closed-form element table.
class UnsupportedCombination : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Sweep configuration rejected before any computation.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qdiss

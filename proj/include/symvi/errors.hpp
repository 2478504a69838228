#pragma once

#include <stdexcept>
#include <string>

namespace symvi {

/// Raised by the quadrature engine when the subdivision budget is exhausted
/// with the error estimate still above tolerance.
class NonConvergence : public std::runtime_error {
 public:
  explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an integrand evaluates to NaN or +/-inf inside a panel.
class NonFiniteIntegrand : public std::runtime_error {
 public:
  explicit NonFiniteIntegrand(const std::string& what) : std::runtime_error(what) {}
};

class DimensionMismatch : public std::invalid_argument {
 public:
  explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// Operation not defined for the requested divergence (e.g. the RKL has no
/// location-simplified weight form).
class UnsupportedSpec : public std::invalid_argument {
 public:
  explicit UnsupportedSpec(const std::string& what) : std::invalid_argument(what) {}
};

class InvalidAlpha : public std::invalid_argument {
 public:
  explicit InvalidAlpha(const std::string& what) : std::invalid_argument(what) {}
};

/// Config-file parse failure; carries the offending line number in the message.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace symvi

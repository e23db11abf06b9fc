#pragma once

#include <stdexcept>
#include <string>

namespace dudelab {

// Reason codes for rejecting a parameter set. Validation is total: every input
// either validates or raises exactly one of these (first violation in the
// documented check order wins).
enum class ValidationCode {
  DensityNonPositive,
  AlphaTooSmall,
  PowerNonPositive,
  PowerOrderingViolated,
  ConditionOneViolated,
  NegativeNoise,
  BandwidthNonPositive,
  AmpEfficiencyOutOfRange,
  CircuitPowerNegative,
  DropsZero,
  WindowNonPositive,
  InterfererDensityNonPositive,
};

inline const char* validation_code_name(ValidationCode c) {
  switch (c) {
    case ValidationCode::DensityNonPositive: return "DensityNonPositive";
    case ValidationCode::AlphaTooSmall: return "AlphaTooSmall";
    case ValidationCode::PowerNonPositive: return "PowerNonPositive";
    case ValidationCode::PowerOrderingViolated: return "PowerOrderingViolated";
    case ValidationCode::ConditionOneViolated: return "ConditionOneViolated";
    case ValidationCode::NegativeNoise: return "NegativeNoise";
    case ValidationCode::BandwidthNonPositive: return "BandwidthNonPositive";
    case ValidationCode::AmpEfficiencyOutOfRange: return "AmpEfficiencyOutOfRange";
    case ValidationCode::CircuitPowerNegative: return "CircuitPowerNegative";
    case ValidationCode::DropsZero: return "DropsZero";
    case ValidationCode::WindowNonPositive: return "WindowNonPositive";
    case ValidationCode::InterfererDensityNonPositive: return "InterfererDensityNonPositive";
  }
  return "Unknown";
}

class ValidationError : public std::runtime_error {
 public:
  ValidationError(ValidationCode code, const std::string& msg)
      : std::runtime_error(std::string(validation_code_name(code)) + ": " + msg), code_(code) {}
  ValidationCode code() const noexcept { return code_; }

 private:
  ValidationCode code_;
};

// Malformed configuration input: unreadable file, bad JSON, unknown keys, or
// wrongly typed values. Distinct from ValidationError, which rejects
// well-formed parameter sets on physical grounds.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Filesystem failure while emitting an output artifact.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside a function's mathematical domain (e.g. dB conversion of a
// non-positive power).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The defining integral has no finite value for the requested exponent.
class DivergentIntegral : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A conditional quantity was requested for an association case of probability
// zero (Case 3 always; Case 2 exactly at the power-ratio boundary).
class InfeasibleCase : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Adaptive quadrature exhausted its subdivision budget before reaching the
// requested tolerance. Carries the best estimate so callers can still inspect
// how far off the run was.
class IntegrationFailure : public std::runtime_error {
 public:
  IntegrationFailure(const std::string& msg, double best_estimate, double achieved_error)
      : std::runtime_error(msg), best_estimate_(best_estimate), achieved_error_(achieved_error) {}
  double best_estimate() const noexcept { return best_estimate_; }
  double achieved_error() const noexcept { return achieved_error_; }

 private:
  double best_estimate_;
  double achieved_error_;
};

}  // namespace dudelab

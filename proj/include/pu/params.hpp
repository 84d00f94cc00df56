#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace pu {

/// Which constraint a parameter set violated.
enum class ParamError {
  NonFinite,
  NonPositiveGamma,
  NonPositiveOmega2,
  DegenerateFrequencies,  // omega1 == omega2
  DisorderedFrequencies,  // omega1 < omega2
};

class InvalidParams : public std::invalid_argument {
 public:
  InvalidParams(ParamError kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}

  ParamError kind() const noexcept { return kind_; }

 private:
  ParamError kind_;
};

/// Model constants: action weight gamma and the oscillator frequencies,
/// restricted to omega1 > omega2 > 0.
template <typename Scalar = double>
struct BasicParams {
  Scalar gamma;
  Scalar omega1;
  Scalar omega2;

  Scalar omega1_sq() const { return omega1 * omega1; }
  Scalar omega2_sq() const { return omega2 * omega2; }
  /// omega1^2 + omega2^2
  Scalar omega_sq_sum() const { return omega1_sq() + omega2_sq(); }
  /// omega1^2 * omega2^2
  Scalar omega_sq_prod() const { return omega1_sq() * omega2_sq(); }
};

using Params = BasicParams<double>;

template <typename Scalar>
BasicParams<Scalar> validate_params(Scalar gamma, Scalar omega1, Scalar omega2) {
  if (!(std::isfinite(gamma) && std::isfinite(omega1) && std::isfinite(omega2))) {
    throw InvalidParams(ParamError::NonFinite, "non-finite parameter");
  }
  if (gamma <= Scalar(0)) {
    throw InvalidParams(ParamError::NonPositiveGamma, "gamma must be positive");
  }
  if (omega2 <= Scalar(0)) {
    throw InvalidParams(ParamError::NonPositiveOmega2, "omega2 must be positive");
  }
  if (omega1 == omega2) {
    throw InvalidParams(ParamError::DegenerateFrequencies,
                        "degenerate frequencies: omega1 must be strictly greater than omega2");
  }
  if (omega1 < omega2) {
    throw InvalidParams(ParamError::DisorderedFrequencies,
                        "disordered frequencies: omega1 must be strictly greater than omega2");
  }
  return {gamma, omega1, omega2};
}

inline Params validate_params(double gamma, double omega1, double omega2) {
  return validate_params<double>(gamma, omega1, omega2);
}

}  // namespace pu

#pragma once

namespace coulomb {

/// Physical constants. Defaults form the dimensionless system
/// eps0 = c = hbar = q = 1; set SI values for dimensional runs.
struct Constants {
  double eps0 = 1.0;
  double c = 1.0;
  double hbar = 1.0;
  double q = 1.0;
};

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kFourPi = 4.0 * kPi;

}  // namespace coulomb

#pragma once

#include <span>

namespace coulomb {

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
};

/// Ordinary least squares y = slope * x + intercept. Needs >= 2 distinct x.
LineFit fit_line(std::span<const double> x, std::span<const double> y);

/// Exponent p of |y| ~ C x^p from a log-log least-squares fit.
/// All x and y must be nonzero.
double fit_power_law(std::span<const double> x, std::span<const double> y);

/// Observed convergence order from errors at two resolutions h_coarse > h_fine.
double convergence_order(double err_coarse, double err_fine, double h_coarse, double h_fine);

}  // namespace coulomb

#include "coulomb/fit.hpp"

#include <cmath>
#include <vector>

#include "coulomb/error.hpp"

namespace coulomb {

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw ParameterError("line fit needs >= 2 paired samples");
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw ParameterError("line fit needs distinct abscissae");
  const double slope = sxy / sxx;
  return {slope, my - slope * mx};
}

double fit_power_law(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw ParameterError("power-law fit needs paired samples");
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0.0 || y[i] == 0.0) throw DomainError("power-law fit needs nonzero samples");
    lx.push_back(std::log(std::abs(x[i])));
    ly.push_back(std::log(std::abs(y[i])));
  }
  return fit_line(lx, ly).slope;
}

double convergence_order(double err_coarse, double err_fine, double h_coarse, double h_fine) {
  if (!(err_coarse > 0.0 && err_fine > 0.0 && h_coarse > 0.0 && h_fine > 0.0) || h_coarse == h_fine) {
    throw DomainError("convergence order needs positive errors and distinct spacings");
  }
  return std::log(err_coarse / err_fine) / std::log(h_coarse / h_fine);
}

}  // namespace coulomb

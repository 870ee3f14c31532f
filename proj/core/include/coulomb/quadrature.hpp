#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace coulomb {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::size_t order() const { return nodes.size(); }
};

/// Rule of the given order, computed by Newton iteration on P_n and cached.
const GaussLegendreRule& gauss_legendre(std::size_t order);

/// Composite Gauss-Legendre over [a, b] split into `panels` equal panels.
double integrate_gauss(const std::function<double(double)>& f, double a, double b,
                       std::size_t order, std::size_t panels = 1);

struct AdaptiveResult {
  double value = 0.0;
  double error_estimate = 0.0;
};

/// Adaptive Gauss-Kronrod (G7/K15) on [a, b] to the given relative tolerance.
AdaptiveResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                  double rel_tol = 1e-10, unsigned max_depth = 30);

}  // namespace coulomb

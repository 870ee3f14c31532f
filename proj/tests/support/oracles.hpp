#pragma once

// Closed forms and plain quadratures used as references in the tests. None of
// them go through the library's own integration or convolution code.

#include <cmath>
#include <functional>

#include "coulomb/vec3.hpp"

namespace oracle {

inline constexpr double pi = 3.14159265358979323846;

/// int_0^a int_0^b int_0^c dV / |r|, the potential of a box at one corner.
inline double box_corner_integral(double a, double b, double c) {
  const double d = std::sqrt(a * a + b * b + c * c);
  return b * c * std::log((a + d) / std::hypot(b, c)) + a * c * std::log((b + d) / std::hypot(a, c)) +
         a * b * std::log((c + d) / std::hypot(a, b)) - 0.5 * a * a * std::atan(b * c / (a * d)) -
         0.5 * b * b * std::atan(a * c / (b * d)) - 0.5 * c * c * std::atan(a * b / (c * d));
}

/// int dV / |r| over a box of edges (hx, hy, hz) centered on the origin.
inline double centered_box_integral(double hx, double hy, double hz) {
  return 8.0 * box_corner_integral(0.5 * hx, 0.5 * hy, 0.5 * hz);
}

/// Composite Simpson rule with n (even) panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n) {
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

/// Potential of the density exp(-r^2/w^2) (not normalized):
/// pi^{3/2} w^3 erf(r/w) / (4 pi r).
inline double gaussian_newtonian(double r, double w) {
  const double mass = std::pow(pi, 1.5) * w * w * w;
  if (r < 1e-12 * w) return mass * 2.0 / (w * std::sqrt(pi)) / (4.0 * pi);
  return mass * std::erf(r / w) / (4.0 * pi * r);
}

/// Coulomb-gauge vector potential of B = B0 (-y, x, 0) exp(-r^2/w^2) with
/// B0 = 2 flux / (w^3 sqrt(pi)). B = curl(z u) for u = (B0 w^2/2) exp(-r^2/w^2);
/// the gauge fix adds grad d_z N[u] with N[u] radial, so every term is closed.
inline coulomb::Vec3 flux_ring_coulomb_A(const coulomb::Vec3& p, double flux, double w) {
  const double B0 = 2.0 * flux / (w * w * w * std::sqrt(pi));
  const double u0 = 0.5 * B0 * w * w;
  const double c0 = u0 * std::pow(pi, 1.5) * w * w * w / (4.0 * pi);
  const double r = coulomb::norm(p);
  const double e = std::exp(-r * r / (w * w));
  const double er = std::erf(r / w);
  const double k = 2.0 / (w * std::sqrt(pi));
  // s = erf(r/w)/r and its first two radial derivatives.
  const double s1 = k * e / r - er / (r * r);
  const double s2 = k * e * (-2.0 / (w * w) - 2.0 / (r * r)) + 2.0 * er / (r * r * r);
  const double f1 = c0 * s1, f2 = c0 * s2;
  const double z = p.z, r2 = r * r, r3 = r2 * r;
  return {f2 * p.x * z / r2 - f1 * z * p.x / r3, f2 * p.y * z / r2 - f1 * z * p.y / r3,
          f2 * z * z / r2 + f1 * (1.0 / r - z * z / r3) + u0 * e};
}

}  // namespace oracle

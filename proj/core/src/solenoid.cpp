#include "coulomb/solenoid.hpp"

#include <algorithm>
#include <cmath>

#include "coulomb/constants.hpp"
#include "coulomb/error.hpp"
#include "coulomb/integrals.hpp"
#include "coulomb/quadrature.hpp"

namespace coulomb {

SquareFluxLoop::SquareFluxLoop(double half_side, double flux) : half_side_(half_side), flux_(flux) {
  if (!(half_side > 0.0) || !std::isfinite(half_side)) throw ParameterError("loop half side must be positive");
  if (!std::isfinite(flux)) throw ParameterError("loop flux must be finite");
}

std::vector<Vec3> SquareFluxLoop::corners() const {
  const double r = half_side_;
  return {{0.0, 0.0, -r}, {0.0, 0.0, r}, {2.0 * r, 0.0, r}, {2.0 * r, 0.0, -r}};
}

double a_near_side(double rho, double z, const SquareFluxLoop& loop) {
  if (!(rho > 0.0)) throw SingularityError("near-side potential is singular on the flux line");
  const double R = loop.half_side();
  const double up = R - z;
  const double dn = R + z;
  const double bracket = up / std::hypot(rho, up) + dn / std::hypot(rho, dn);
  return loop.flux() / (4.0 * kPi * rho) * bracket;
}

double a_near_side_series(double rho, double z, const SquareFluxLoop& loop) {
  const double R = loop.half_side();
  const double s = 1.0 + (rho / R) * (rho / R);
  const double lead = 1.0 / (2.0 * kPi * rho * std::sqrt(s));
  const double quad = 3.0 / (4.0 * kPi * R * std::pow(s, 2.5)) * (rho / R) * (z / R) * (z / R);
  return loop.flux() * (lead - quad);
}

double a_stokes(double rho, double flux) {
  if (!(rho > 0.0)) throw SingularityError("Stokes potential is singular on the flux line");
  return flux / (2.0 * kPi * rho);
}

Vec3 a_loop_full(const Vec3& point, const SquareFluxLoop& loop) {
  const auto c = loop.corners();
  const double scale = loop.flux() / kFourPi;
  Vec3 total;
  for (std::size_t s = 0; s < 4; ++s) {
    const Vec3 a = c[s];
    const Vec3 b = c[(s + 1) % 4];
    const double len = norm(b - a);
    const Vec3 t = (b - a) / len;
    // Distance from the point to the segment.
    const double u = std::clamp(dot(point - a, t), 0.0, len);
    if (norm(point - (a + t * u)) < 1e-14 * loop.half_side()) {
      throw SingularityError("evaluation point lies on the flux circuit");
    }
    for (std::size_t comp = 0; comp < 3; ++comp) {
      // Each component of t x (r - r'), split at the foot of the
      // perpendicular so the peak sits on a panel boundary.
      auto integrand = [&](double l) {
        const Vec3 d = point - (a + t * l);
        const double r = norm(d);
        return cross(t, d)[comp] / (r * r * r);
      };
      if (cross(t, point - a)[comp] == 0.0) continue;  // component identically zero
      double v = 0.0;
      if (u > 0.0) v += integrate_adaptive(integrand, 0.0, u, 1e-10).value;
      if (u < len) v += integrate_adaptive(integrand, u, len, 1e-10).value;
      total[comp] += scale * v;
    }
  }
  return total;
}

double a_loop_full_theta(double rho, double theta, double z, const SquareFluxLoop& loop) {
  const Vec3 p{rho * std::cos(theta), rho * std::sin(theta), z};
  const Vec3 a = a_loop_full(p, loop);
  return -std::sin(theta) * a.x + std::cos(theta) * a.y;
}

double stokes_consistency(const SquareFluxLoop& loop, double rho) {
  if (!(rho > 0.0)) throw SingularityError("circle radius must be positive");
  const auto path = PathPolyline::circle({0.0, 0.0, 0.0}, rho, 64);
  return line_integral([&](const Vec3& p) { return a_loop_full(p, loop); }, path, {8, 2});
}

}  // namespace coulomb

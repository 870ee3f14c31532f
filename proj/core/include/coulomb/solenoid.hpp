#pragma once

#include <vector>

#include "coulomb/vec3.hpp"

namespace coulomb {

/// Infinitely thin flux circuit shaped as a square of side 2R in the x-z
/// plane. The near side runs along +z from (0, 0, -R) to (0, 0, R); the
/// circuit continues (0,0,R) -> (2R,0,R) -> (2R,0,-R) -> (0,0,-R), so the
/// flux threading a counterclockwise circle about the near side is +flux.
class SquareFluxLoop {
 public:
  SquareFluxLoop(double half_side, double flux);

  double half_side() const { return half_side_; }
  double flux() const { return flux_; }

  /// The four corners in circulation order, starting at (0, 0, -R).
  std::vector<Vec3> corners() const;
  /// Center of the square, (R, 0, 0).
  Vec3 center() const { return {half_side_, 0.0, 0.0}; }

 private:
  double half_side_;
  double flux_;
};

/// Azimuthal potential of the near side alone, from the closed-form
/// antiderivative of the rho / [rho^2 + (z - z')^2]^{3/2} kernel:
///   A_theta = flux / (4 pi rho) [ (R - z) / sqrt(rho^2 + (R - z)^2)
///                               + (R + z) / sqrt(rho^2 + (R + z)^2) ].
/// Throws SingularityError for rho <= 0.
double a_near_side(double rho, double z, const SquareFluxLoop& loop);

/// Two-term expansion in z of a_near_side (z^0 and z^2 terms).
double a_near_side_series(double rho, double z, const SquareFluxLoop& loop);

/// Infinite-line value flux / (2 pi rho).
double a_stokes(double rho, double flux);

/// Vector potential of the whole circuit: sum over the four sides of
///   (flux / 4 pi) int t x (r - r') / |r - r'|^3 dl'
/// by adaptive Gauss-Kronrod (relative tolerance 1e-10 per side).
/// Throws SingularityError when the point lies on a side.
Vec3 a_loop_full(const Vec3& point, const SquareFluxLoop& loop);

/// Azimuthal component of a_loop_full about the near side at (rho cos t, rho sin t, z).
double a_loop_full_theta(double rho, double theta, double z, const SquareFluxLoop& loop);

/// Flux recovered by the line integral of a_loop_full around a circle of
/// radius rho centered on the near side at z = 0.
double stokes_consistency(const SquareFluxLoop& loop, double rho);

}  // namespace coulomb

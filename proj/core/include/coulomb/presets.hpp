#pragma once

#include <cstdint>
#include <vector>

#include "coulomb/constants.hpp"
#include "coulomb/vec3.hpp"

/// Closed-form fields used as inputs and oracles. All of them are smooth and
/// decay fast enough to be treated as compactly supported on a grid whose
/// half width is a few characteristic lengths.
namespace coulomb::presets {

/// Closed flux tube bent into a ring about the z axis:
///   B = B0 (-y, x, 0) exp(-r^2 / width^2),
/// azimuthal and axisymmetric, hence exactly divergence-free. B0 is chosen so
/// the flux through the half plane {y = 0, x > 0} equals `flux`.
struct FluxRing {
  double flux = 1.0;
  double width = 1.0;

  Vec3 B(const Vec3& p) const;
};

/// Straight Gaussian flux tube along z: B_z = flux / (pi w^2) exp(-rho^2 / w^2).
struct StraightFluxTube {
  double flux = 1.0;
  double width = 1.0;

  Vec3 B(const Vec3& p) const;
  /// Azimuthal Coulomb-gauge potential of the infinite tube,
  /// flux / (2 pi rho) (1 - exp(-rho^2 / w^2)).
  double a_theta(double rho) const;
};

/// Scalar bump f = amplitude exp(-|r - center|^2 / width^2).
struct GaussianBump {
  double amplitude = 1.0;
  double width = 1.0;
  Vec3 center{};

  double value(const Vec3& p) const;
  Vec3 gradient(const Vec3& p) const;
};

/// Point charge whose core of radius `core` is replaced by a uniformly
/// charged ball: outside the core the field and potential are exactly those
/// of a point charge.
struct ChargeBall {
  double charge = 1.0;
  double core = 1.0;
  Vec3 center{};

  Vec3 E(const Vec3& p, const Constants& k = {}) const;
  double phi(const Vec3& p, const Constants& k = {}) const;
};

/// Gaussian charge density rho = q exp(-r^2 / w^2) / (pi^{3/2} w^3).
struct GaussianCharge {
  double charge = 1.0;
  double width = 1.0;

  double density(const Vec3& p) const;
  Vec3 E(const Vec3& p, const Constants& k = {}) const;
  double phi(const Vec3& p, const Constants& k = {}) const;
};

/// Source-free electric-dipole radiation pulse built from the Hertz vector
/// Pi = z_hat f(r, t) with f = [g(r - ct) - g(r + ct)] / r and g(s) =
/// amplitude exp(-s^2 / width^2):
///   E = curl curl Pi,  B = (1/c^2) d/dt curl Pi.
/// These satisfy the vacuum Maxwell equations exactly, and at any finite time
/// both fields are localized near the shell r = ct.
struct DipolePulse {
  double amplitude = 1.0;
  double width = 1.0;
  double c = 1.0;

  Vec3 E(const Vec3& p, double t) const;
  Vec3 B(const Vec3& p, double t) const;
};

/// A deliberately non-solenoidal field: B = (x, y, z) exp(-r^2 / width^2).
struct RadialBlob {
  double amplitude = 1.0;
  double width = 1.0;

  Vec3 B(const Vec3& p) const;
};

/// Sum of Gaussian vector bumps with random centers and amplitudes;
/// smooth and localized, with both longitudinal and transverse parts.
struct RandomBumpField {
  struct Bump {
    Vec3 center;
    Vec3 amplitude;
    double width;
  };
  std::vector<Bump> bumps;

  /// `count` bumps with centers inside a ball of radius `spread`.
  static RandomBumpField make(std::uint64_t seed, std::size_t count, double spread, double width);

  Vec3 value(const Vec3& p) const;
};

/// Random smooth single-valued gauge bumps, used to perturb potentials.
std::vector<GaussianBump> random_gauge_bumps(std::uint64_t seed, std::size_t count, double spread,
                                             double min_width, double max_width);

}  // namespace coulomb::presets

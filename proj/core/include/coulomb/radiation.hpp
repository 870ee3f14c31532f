#pragma once

#include <span>
#include <vector>

#include "coulomb/integrals.hpp"

namespace coulomb {

/// Components in the local spherical basis (r_hat, theta_hat, phi_hat).
struct SphericalVector {
  double r = 0.0;
  double theta = 0.0;
  double phi = 0.0;
};

Vec3 to_cartesian(const SphericalVector& v, double theta, double phi);

/// Dominant far-zone terms of an electric dipole oscillating along z:
///   E_r = cos(th) sin(kr) / r^2,  E_th = sin(th) cos(kr) / r,  E_ph = 0
///   B_r = B_th = 0,               B_ph = sin(th) cos(kr) / r
/// times `amplitude`.
struct DipoleFarField {
  double k = 1.0;
  double amplitude = 1.0;

  void validate() const;
  Vec3 E(const Vec3& p) const;
  Vec3 B(const Vec3& p) const;
};

struct DipoleFields {
  SphericalVector E;
  SphericalVector B;
};

/// Throws DomainError for r <= 0.
DipoleFields dipole_fields(double r, double theta, double phi, double k, double amplitude = 1.0);

/// Surface integral of E(r') / |r - r'| through the sphere of the given radius
/// about the origin, for an observation point r inside it.
double c1_surface_integral(const VectorFunction& E, double radius, const Vec3& eval_point,
                           const SphereQuadrature& quad = {});

struct DecayScan {
  std::vector<double> radii;
  std::vector<double> integrals;
  /// Slope of log|integral| against log radius; NaN when vanishing.
  double exponent = 0.0;
  /// Every integral is below 1e-14 in magnitude.
  bool vanishes_identically = false;
};

/// Integrals below this magnitude count as zero.
inline constexpr double kVanishingIntegral = 1e-14;

/// c1_surface_integral at each radius and a log-log fit over the radii.
/// Needs >= 4 radii spanning at least a decade, all >= 10 |eval_point|.
DecayScan surface_decay_scan(const VectorFunction& E, std::span<const double> radii,
                             const Vec3& eval_point, const SphereQuadrature& quad = {});
DecayScan surface_decay_scan(const DipoleFarField& field, std::span<const double> radii,
                             const Vec3& eval_point, const SphereQuadrature& quad = {});

/// Radius nearest to each target with k r = pi/2 (mod 2 pi), where sin(kr) = 1.
std::vector<double> fixed_phase_radii(double k, std::span<const double> targets);

/// Largest |B_r| over the samples. Throws ParameterError for an empty set.
double radiation_b_radial_check(std::span<const SphericalVector> samples);

/// Samples of the dipole B on a theta-phi lattice at the given radius.
std::vector<SphericalVector> dipole_b_samples(const DipoleFarField& field, double radius,
                                              std::size_t n_theta, std::size_t n_phi);

/// Outward flux of E x B through the sphere of the given radius.
double poynting_flux(const DipoleFarField& field, double radius, const SphereQuadrature& quad = {});

}  // namespace coulomb

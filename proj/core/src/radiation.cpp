#include "coulomb/radiation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "coulomb/constants.hpp"
#include "coulomb/error.hpp"
#include "coulomb/fit.hpp"

namespace coulomb {

Vec3 to_cartesian(const SphericalVector& v, double theta, double phi) {
  const double st = std::sin(theta), ct = std::cos(theta);
  const double sp = std::sin(phi), cp = std::cos(phi);
  const Vec3 rhat{st * cp, st * sp, ct};
  const Vec3 that{ct * cp, ct * sp, -st};
  const Vec3 phat{-sp, cp, 0.0};
  return rhat * v.r + that * v.theta + phat * v.phi;
}

DipoleFields dipole_fields(double r, double theta, double phi, double k, double amplitude) {
  (void)phi;  // axisymmetric
  if (!(r > 0.0)) throw DomainError("dipole fields need r > 0");
  if (!(k > 0.0)) throw ParameterError("wavevector must be positive");
  const double st = std::sin(theta), ct = std::cos(theta);
  const double skr = std::sin(k * r), ckr = std::cos(k * r);
  DipoleFields f;
  f.E = {amplitude * ct * skr / (r * r), amplitude * st * ckr / r, 0.0};
  f.B = {0.0, 0.0, amplitude * st * ckr / r};
  return f;
}

void DipoleFarField::validate() const {
  if (!(k > 0.0)) throw ParameterError("wavevector must be positive");
}

namespace {

struct Angles {
  double r, theta, phi;
};

Angles angles_of(const Vec3& p) {
  const double r = norm(p);
  return {r, r > 0.0 ? std::acos(std::clamp(p.z / r, -1.0, 1.0)) : 0.0, std::atan2(p.y, p.x)};
}

}  // namespace

Vec3 DipoleFarField::E(const Vec3& p) const {
  const auto a = angles_of(p);
  return to_cartesian(dipole_fields(a.r, a.theta, a.phi, k, amplitude).E, a.theta, a.phi);
}

Vec3 DipoleFarField::B(const Vec3& p) const {
  const auto a = angles_of(p);
  return to_cartesian(dipole_fields(a.r, a.theta, a.phi, k, amplitude).B, a.theta, a.phi);
}

double c1_surface_integral(const VectorFunction& E, double radius, const Vec3& eval_point,
                           const SphereQuadrature& quad) {
  if (!(radius > norm(eval_point))) throw DomainError("observation point must lie inside the sphere");
  return sphere_surface_integral(
      E, radius, [&](const Vec3& rp) { return 1.0 / norm(eval_point - rp); }, quad);
}

DecayScan surface_decay_scan(const VectorFunction& E, std::span<const double> radii,
                             const Vec3& eval_point, const SphereQuadrature& quad) {
  if (radii.size() < 4) throw ParameterError("decay scan needs at least 4 radii");
  const auto [lo, hi] = std::minmax_element(radii.begin(), radii.end());
  if (!(*lo > 0.0) || *hi < 10.0 * *lo * (1.0 - 1e-12)) {
    throw ParameterError("decay scan radii must be positive and span at least one decade");
  }
  if (*lo < 10.0 * norm(eval_point)) {
    throw ParameterError("decay scan radii must be at least 10 times the observation distance");
  }
  DecayScan scan;
  scan.radii.assign(radii.begin(), radii.end());
  for (double r : radii) scan.integrals.push_back(c1_surface_integral(E, r, eval_point, quad));
  scan.vanishes_identically = std::all_of(scan.integrals.begin(), scan.integrals.end(),
                                          [](double v) { return std::abs(v) < kVanishingIntegral; });
  scan.exponent = scan.vanishes_identically ? std::numeric_limits<double>::quiet_NaN()
                                            : fit_power_law(scan.radii, scan.integrals);
  return scan;
}

DecayScan surface_decay_scan(const DipoleFarField& field, std::span<const double> radii,
                             const Vec3& eval_point, const SphereQuadrature& quad) {
  field.validate();
  return surface_decay_scan([&](const Vec3& p) { return field.E(p); }, radii, eval_point, quad);
}

std::vector<double> fixed_phase_radii(double k, std::span<const double> targets) {
  if (!(k > 0.0)) throw ParameterError("wavevector must be positive");
  std::vector<double> out;
  for (double t : targets) {
    const double m = std::max(0.0, std::round((k * t - 0.5 * kPi) / (2.0 * kPi)));
    out.push_back((0.5 * kPi + 2.0 * kPi * m) / k);
  }
  return out;
}

double radiation_b_radial_check(std::span<const SphericalVector> samples) {
  if (samples.empty()) throw ParameterError("radial-B check needs at least one sample");
  double m = 0.0;
  for (const auto& s : samples) m = std::max(m, std::abs(s.r));
  return m;
}

std::vector<SphericalVector> dipole_b_samples(const DipoleFarField& field, double radius,
                                              std::size_t n_theta, std::size_t n_phi) {
  field.validate();
  std::vector<SphericalVector> out;
  for (std::size_t i = 0; i < n_theta; ++i) {
    const double th = kPi * (static_cast<double>(i) + 0.5) / static_cast<double>(n_theta);
    for (std::size_t j = 0; j < n_phi; ++j) {
      const double ph = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(n_phi);
      out.push_back(dipole_fields(radius, th, ph, field.k, field.amplitude).B);
    }
  }
  return out;
}

double poynting_flux(const DipoleFarField& field, double radius, const SphereQuadrature& quad) {
  field.validate();
  return sphere_surface_integral(
      [&](const Vec3& p) { return cross(field.E(p), field.B(p)); }, radius,
      [](const Vec3&) { return 1.0; }, quad);
}

}  // namespace coulomb

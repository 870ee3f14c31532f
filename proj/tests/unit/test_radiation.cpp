#include <doctest.h>

#include <cmath>
#include <limits>

#include "coulomb/error.hpp"
#include "coulomb/radiation.hpp"
#include "oracles.hpp"

using namespace coulomb;

TEST_CASE("dipole component formulas") {
  const double r = 4.0 * oracle::pi;  // k r = 2 pi m with k = 1, m = 2
  const auto f = dipole_fields(r, oracle::pi / 2.0, 0.3, 1.0);
  CHECK(f.E.theta == doctest::Approx(1.0 / r));
  CHECK(f.E.r == doctest::Approx(0.0).scale(1.0));
  CHECK(f.E.phi == 0.0);
  CHECK(f.B.r == 0.0);
  CHECK(f.B.theta == 0.0);
  const auto axis = dipole_fields(2.0, 0.0, 0.0, 1.0);
  CHECK(axis.E.theta == 0.0);
  CHECK(axis.B.phi == 0.0);
  CHECK(axis.E.r == doctest::Approx(std::sin(2.0) / 4.0));
  CHECK_THROWS_AS(dipole_fields(0.0, 0.1, 0.1, 1.0), DomainError);
}

TEST_CASE("E and B are orthogonal everywhere") {
  const DipoleFarField d{1.3, 2.0};
  for (const Vec3 p : {Vec3{3, 4, 5}, Vec3{-10, 2, 0.5}, Vec3{0.1, 0.2, -30}}) {
    CHECK(std::abs(dot(d.E(p), d.B(p))) < 1e-15 * norm(d.E(p)) * norm(d.B(p)) + 1e-300);
    // The Cartesian conversion preserves the spherical components.
    const double r = norm(p), th = std::acos(p.z / r), ph = std::atan2(p.y, p.x);
    const auto s = dipole_fields(r, th, ph, 1.3, 2.0);
    CHECK(norm(d.E(p) - to_cartesian(s.E, th, ph)) < 1e-14);
  }
}

TEST_CASE("the surface integral sees only the radial component") {
  const DipoleFarField d{1.0, 1.0};
  const Vec3 r0{0.3, 0.2, 0.1};
  auto E = [&](const Vec3& p) { return d.E(p); };
  auto swapped = [&](const Vec3& p) {
    const double r = norm(p), th = std::acos(p.z / r), ph = std::atan2(p.y, p.x);
    auto s = dipole_fields(r, th, ph, 1.0);
    s.E.theta = 5.0 * std::cos(3.0 * ph);
    s.E.phi = -2.0;
    return to_cartesian(s.E, th, ph);
  };
  const double a = c1_surface_integral(E, 50.0, r0), b = c1_surface_integral(swapped, 50.0, r0);
  CHECK(a == doctest::Approx(b).epsilon(1e-12));
  CHECK_THROWS_AS(c1_surface_integral(E, 0.1, r0), DomainError);
}

TEST_CASE("decay scans") {
  const Vec3 r0{0.3, 0.2, 0.1};
  const std::vector<double> targets{50, 100, 200, 400, 800};
  // Static unit charge: int r_hat . dS / |r - r'| = 4 pi / r' exactly for r inside.
  auto point = [](const Vec3& p) { return p / std::pow(norm(p), 3); };
  const auto scan = surface_decay_scan(point, targets, r0);
  CHECK(scan.exponent == doctest::Approx(-1.0).epsilon(1e-6));
  CHECK(scan.integrals[0] == doctest::Approx(4.0 * oracle::pi / 50.0).epsilon(1e-10));

  // Dipole: the monopole term of 1/|r - r'| cancels against cos(theta), leaving
  // (4 pi / 3) z sin(k r') / r'^2; at fixed phase sin = 1.
  const DipoleFarField d{1.0, 1.0};
  const auto radii = fixed_phase_radii(1.0, targets);
  for (double rr : radii) CHECK(std::sin(rr) == doctest::Approx(1.0).epsilon(1e-12));
  const auto dip = surface_decay_scan(d, radii, r0);
  for (std::size_t i = 0; i < radii.size(); ++i)
    CHECK(dip.integrals[i] == doctest::Approx(4.0 * oracle::pi / 3.0 * r0.z / (radii[i] * radii[i])).epsilon(1e-3));
  CHECK(dip.exponent == doctest::Approx(-2.0).epsilon(1e-3));

  auto tangential = [](const Vec3& p) { return Vec3{-p.y, p.x, 0.0} / dot(p, p); };
  const auto t = surface_decay_scan(tangential, targets, r0);
  CHECK(t.vanishes_identically);
  CHECK(std::isnan(t.exponent));

  CHECK_THROWS(surface_decay_scan(point, std::vector<double>{50, 100, 200}, r0));
  CHECK_THROWS(surface_decay_scan(point, std::vector<double>{50, 100, 200, 400}, r0));
  CHECK_THROWS(surface_decay_scan(point, std::vector<double>{1, 10, 20, 40}, r0));
}

TEST_CASE("radial B check") {
  const DipoleFarField d{2.0, 1.0};
  CHECK(radiation_b_radial_check(dipole_b_samples(d, 100.0, 12, 24)) == 0.0);
  const std::vector<SphericalVector> eps{{1e-3, 0.0, 0.0}, {-2e-3, 1.0, 0.0}};
  CHECK(radiation_b_radial_check(eps) == doctest::Approx(2e-3));
  const std::vector<SphericalVector> one{{0.25, 0.0, 0.0}};
  CHECK(radiation_b_radial_check(one) == 0.25);
  CHECK_THROWS_AS(radiation_b_radial_check(std::vector<SphericalVector>{}), ParameterError);
}

TEST_CASE("Poynting flux stays finite at large radius") {
  const DipoleFarField d{1.0, 1.0};
  // At k r = 2 pi m the flux is (8 pi / 3) cos^2(k r) = 8 pi / 3.
  for (double m : {10.0, 100.0, 1000.0})
    CHECK(poynting_flux(d, 2.0 * oracle::pi * m) == doctest::Approx(8.0 * oracle::pi / 3.0).epsilon(1e-10));
  CHECK_THROWS_AS((DipoleFarField{0.0, 1.0}.validate()), ParameterError);
}

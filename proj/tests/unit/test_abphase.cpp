#include <doctest.h>

#include <cmath>

#include "coulomb/abphase.hpp"
#include "coulomb/error.hpp"
#include "coulomb/presets.hpp"
#include "oracles.hpp"

using namespace coulomb;

TEST_CASE("half-circle phases") {
  const PureGaugeField g(2.0);
  CHECK(path_phase(upper_slit_path(), g, 1.0, 1.0) == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(path_phase(lower_slit_path(), g, 1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(two_slit_phase_difference(2.0, 1.0, 1.0) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(two_slit_phase_difference(1.5, 3.0, 0.5) == doctest::Approx(9.0).epsilon(1e-14));
}

TEST_CASE("winding angle counts turns") {
  CHECK(winding_angle(PathPolyline::circle({}, 1.0, 16)) == doctest::Approx(2.0 * oracle::pi));
  const auto twice = PathPolyline::arc({}, 1.0, 0.0, 4.0 * oracle::pi - 0.1, 64);
  CHECK(winding_angle(twice) == doctest::Approx(4.0 * oracle::pi - 0.1));
  CHECK(winding_angle(PathPolyline::circle({3.0, 0.0, 0.0}, 1.0, 16)) == doctest::Approx(0.0).scale(1.0));
  CHECK_THROWS_AS(winding_angle(PathPolyline::open({{-1, 0, 0}, {1, 0, 0}})), SingularityError);
}

TEST_CASE("pure gauge field values and gradient") {
  const PureGaugeField g(2.0 * oracle::pi);
  CHECK(g.value(oracle::pi, 0) == doctest::Approx(oracle::pi));
  CHECK(g.value(0.0, 1) == doctest::Approx(2.0 * oracle::pi));
  const Vec3 grad = g.gradient({0.0, 2.0, 0.0});
  CHECK(grad.x == doctest::Approx(-0.5));
  CHECK(grad.y == doctest::Approx(0.0).scale(1.0));
  // The closed-loop integral of grad g is the flux, for any loop around the axis.
  CHECK(line_integral([&](const Vec3& p) { return g.gradient(p); }, PathPolyline::circle({0.1, 0.2, 0}, 1.0, 64),
                      {16, 8}) == doctest::Approx(2.0 * oracle::pi).epsilon(1e-10));
}

TEST_CASE("smooth single-valued gauge bumps add nothing around closed loops") {
  const auto bumps = presets::random_gauge_bumps(2024, 20, 1.0, 0.3, 1.0);
  const PureGaugeField g(1.3);
  const double base = closed_loop_phase(PathPolyline::circle({}, 1.0, 64), g, [](const Vec3&) { return 0.0; }, 1.0, 1.0);
  for (const auto& b : bumps) {
    auto chi = [&](const Vec3& p) { return b.value(p); };
    const auto r = gauge_addition_invariance(PathPolyline::circle({0.2, -0.1, 0.0}, 1.0, 64), chi);
    CHECK(std::abs(r.value) < 1e-9);
    CHECK_FALSE(r.multivalued);
    const double shifted = closed_loop_phase(PathPolyline::circle({}, 1.0, 64), g, chi, 1.0, 1.0);
    CHECK(std::abs(shifted - base) < 1e-9);
  }
  CHECK(base == doctest::Approx(1.3).epsilon(1e-12));
}

TEST_CASE("a multivalued chi is detected") {
  const PureGaugeField g(1.0);
  auto chi = [&](const Vec3& p) { return g.branch_value(p); };
  const auto r = gauge_addition_invariance(PathPolyline::circle({}, 1.0, 64), chi);
  CHECK(r.multivalued);
}

TEST_CASE("fringe period from a noiseless scan") {
  FringeGeometry geom;
  std::vector<double> fluxes, positions;
  for (int i = 0; i <= 96; ++i) fluxes.push_back(3.0 * 2.0 * oracle::pi * i / 96.0);
  for (int i = 0; i < 64; ++i) positions.push_back(-1.0 + 2.0 * i / 64.0);
  const auto scan = make_fringe_scan(geom, fluxes, positions, 1.0, 1.0);
  CHECK(flux_period(scan) == doctest::Approx(2.0 * oracle::pi).epsilon(1e-6));
  for (const auto& row : scan.intensities) CHECK(*std::max_element(row.begin(), row.end()) == doctest::Approx(1.0));

  std::vector<double> half_fluxes;
  for (double f : fluxes) half_fluxes.push_back(f / 2.0);
  CHECK(flux_period(make_fringe_scan(geom, half_fluxes, positions, 2.0, 1.0)) == doctest::Approx(oracle::pi).epsilon(1e-6));

  const auto noisy = make_fringe_scan(geom, fluxes, positions, 1.0, 1.0, 0.05, 7);
  CHECK(flux_period(noisy) == doctest::Approx(2.0 * oracle::pi).epsilon(1e-2));
  CHECK(make_fringe_scan(geom, fluxes, positions, 1.0, 1.0, 0.05, 7).intensities == noisy.intensities);
}

TEST_CASE("fringe pattern and scan guards") {
  FringeGeometry geom{1.0, 1.0, 1.0};
  const auto I = fringe_pattern(geom, {0.0, 0.5}, 0.0, 1.0, 1.0);
  CHECK(I[0] == doctest::Approx(1.0));
  CHECK(I[1] == doctest::Approx(0.0).scale(1.0));
  // A flux of pi / q shifts the pattern by half a fringe.
  const auto J = fringe_pattern(geom, {0.0, 0.5}, oracle::pi, 1.0, 1.0);
  CHECK(J[0] == doctest::Approx(0.0).scale(1.0));
  CHECK_THROWS_AS((FringeGeometry{0.0, 1.0, 1.0}.validate()), ParameterError);

  std::vector<double> fluxes, positions;
  for (int i = 0; i < 20; ++i) fluxes.push_back(3.0 * 2.0 * oracle::pi * i / 19.0);
  for (int i = 0; i < 32; ++i) positions.push_back(-1.0 + 2.0 * i / 32.0);
  CHECK_THROWS_AS(flux_period(make_fringe_scan(geom, fluxes, positions, 1.0, 1.0)), ResolutionError);
}

#include <doctest.h>

#include <cmath>
#include <random>

#include "coulomb/abphase.hpp"
#include "coulomb/convolution.hpp"
#include "coulomb/diffops.hpp"
#include "coulomb/helmholtz.hpp"
#include "coulomb/potentials.hpp"
#include "coulomb/presets.hpp"
#include "oracles.hpp"

using namespace coulomb;

namespace {

VectorField3 random_field(const Grid3& g, std::uint64_t seed) {
  const auto f = presets::RandomBumpField::make(seed, 4, 0.8, 0.9);
  return VectorField3::sample(g, [&](const Vec3& p) { return f.value(p); });
}

ScalarField random_scalar(const Grid3& g, std::uint64_t seed) {
  const auto bumps = presets::random_gauge_bumps(seed, 4, 0.8, 0.6, 1.1);
  return ScalarField::sample(g, [&](const Vec3& p) {
    double v = 0.0;
    for (const auto& b : bumps) v += b.value(p);
    return v;
  });
}

double inner(const ScalarField& a, const ScalarField& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

TEST_CASE("differential operators are linear") {
  const auto g = Grid3::cube(9, 3.0);
  for (std::uint64_t seed : {1, 2, 3}) {
    const auto F = random_field(g, seed), G = random_field(g, seed + 10);
    const double a = 0.7, b = -1.9;
    CHECK(max_norm(curl(a * F + b * G) - (a * curl(F) + b * curl(G))) < 1e-13);
    CHECK(max_abs(divergence(a * F + b * G) - (a * divergence(F) + b * divergence(G))) < 1e-13);
    const auto f = random_scalar(g, seed);
    CHECK(max_norm(gradient(a * f) - a * gradient(f)) < 1e-13);
  }
}

TEST_CASE("the discrete Newtonian operator is symmetric") {
  const auto g = Grid3::cube(8, 2.5);
  const auto f = random_scalar(g, 5), h = random_scalar(g, 6);
  const double lhs = inner(f, newtonian_convolve(h)), rhs = inner(newtonian_convolve(f), h);
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
  CHECK(inner(f, newtonian_convolve(f)) > 0.0);
}

TEST_CASE("fields are gauge invariant on the grid") {
  const auto g = Grid3::cube(10, 3.0);
  for (std::uint64_t seed : {3, 4, 5, 6}) {
    const auto A = random_field(g, seed);
    const auto chi = random_scalar(g, seed + 100);
    CHECK(max_norm(curl(A + gradient(chi)) - curl(A)) < 1e-12);
  }
}

TEST_CASE("longitudinal and transverse parts are nearly orthogonal") {
  const auto g = Grid3::cube(14, 3.5);
  for (std::uint64_t seed : {7, 8}) {
    const auto d = decompose(random_field(g, seed));
    const double cross = volume_inner(d.longitudinal, d.transverse);
    const double scale = std::sqrt(volume_integral_squared(d.longitudinal) * volume_integral_squared(d.transverse));
    CHECK(std::abs(cross) < 0.05 * scale);
  }
}

TEST_CASE("Coulomb gauge is idempotent to truncation order") {
  const auto g = Grid3::cube(14, 3.5);
  const auto A = to_coulomb_gauge(random_field(g, 9));
  const auto twice = to_coulomb_gauge(A);
  CHECK(max_norm(twice - A, 2) < 0.1 * max_norm(A, 2));
}

TEST_CASE("phase depends only on the winding, not on the path shape") {
  const PureGaugeField gauge(0.8);
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> jitter(-0.3, 0.3);
  for (int trial = 0; trial < 10; ++trial) {
    // A wobbly loop around the axis, and one that winds twice.
    std::vector<Vec3> once, twice;
    for (int i = 0; i < 48; ++i) {
      const double t = 2.0 * oracle::pi * i / 48.0;
      const double r = 1.0 + jitter(rng);
      once.push_back({r * std::cos(t), r * std::sin(t), jitter(rng)});
    }
    for (int i = 0; i < 96; ++i) {
      const double t = 4.0 * oracle::pi * i / 96.0;
      twice.push_back({(1.5 + 0.5 * std::sin(3 * t)) * std::cos(t), (1.5 + 0.5 * std::sin(3 * t)) * std::sin(t), 0.0});
    }
    CHECK(path_phase(PathPolyline::loop(once), gauge, 1.0, 1.0) == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(path_phase(PathPolyline::loop(twice), gauge, 1.0, 1.0) == doctest::Approx(1.6).epsilon(1e-12));
  }
  // Open paths with the same ends and no net winding carry the same phase.
  const auto a = PathPolyline::open({{1, -1, 0}, {1, 0, 0}, {1, 1, 0}});
  const auto b = PathPolyline::open({{1, -1, 0}, {3, -0.5, 1}, {2, 2, 0}, {1, 1, 0}});
  CHECK(path_phase(a, gauge, 1.0, 1.0) == doctest::Approx(path_phase(b, gauge, 1.0, 1.0)).epsilon(1e-12));
}

TEST_CASE("repeated runs are bit identical") {
  const auto g = Grid3::cube(10, 3.0);
  const auto F = random_field(g, 12);
  CHECK(newtonian_convolve(F).values() == newtonian_convolve(F).values());
  CHECK(newtonian_curl_convolve(F, {2, 2, 2}).values() == newtonian_curl_convolve(F, {2, 2, 2}).values());
  CHECK(presets::RandomBumpField::make(5, 3, 1.0, 1.0).bumps.front().center ==
        presets::RandomBumpField::make(5, 3, 1.0, 1.0).bumps.front().center);
}

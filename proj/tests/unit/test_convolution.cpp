#include <doctest.h>

#include <cmath>

#include "coulomb/convolution.hpp"
#include "coulomb/error.hpp"
#include "coulomb/fit.hpp"
#include "coulomb/presets.hpp"
#include "oracles.hpp"

using namespace coulomb;

namespace {

// Potential of exp(-r^2/w^2) from the radial shell integrals
//   N(r) = (1/r) int_0^r rho s^2 ds + int_r^inf rho s ds.
double radial_oracle(double r, double w) {
  auto rho = [&](double s) { return std::exp(-s * s / (w * w)); };
  const double inner = oracle::simpson([&](double s) { return rho(s) * s * s; }, 0.0, r, 2000) / r;
  const double outer = oracle::simpson([&](double s) { return rho(s) * s; }, r, r + 12.0 * w, 4000);
  return inner + outer;
}

double gaussian_d_dr(double r, double w) {
  const double mass = std::pow(oracle::pi, 1.5) * w * w * w;
  const double k = 2.0 / (w * std::sqrt(oracle::pi));
  return mass / (4.0 * oracle::pi) * (k * std::exp(-r * r / (w * w)) / r - std::erf(r / w) / (r * r));
}

}  // namespace

TEST_CASE("self-cell integral matches the closed-form box potential") {
  CHECK(self_cell_integral({1, 1, 1}) == doctest::Approx(oracle::centered_box_integral(1, 1, 1)).epsilon(1e-13));
  CHECK(self_cell_integral({1, 1, 2}) == doctest::Approx(oracle::centered_box_integral(1, 1, 2)).epsilon(1e-13));
  CHECK(self_cell_integral({0.3, 0.5, 0.2}) ==
        doctest::Approx(oracle::centered_box_integral(0.3, 0.5, 0.2)).epsilon(1e-13));
  // Frozen values; the cube also equals 3 ln(2 + sqrt 3) - pi/2.
  CHECK(self_cell_integral({1, 1, 1}) == doctest::Approx(2.380077363979554).epsilon(1e-14));
  CHECK(self_cell_integral({1, 1, 2}) == doctest::Approx(3.585620486357549).epsilon(1e-14));
  CHECK(3.0 * std::log(2.0 + std::sqrt(3.0)) - oracle::pi / 2.0 == doctest::Approx(2.380077363979554).epsilon(1e-15));
  CHECK(self_cell_integral({0.5, 0.5, 0.5}) == doctest::Approx(2.380077363979554 / 4.0).epsilon(1e-14));
}

TEST_CASE("the two oracles for the Gaussian potential agree") {
  for (double r : {0.3, 1.0, 2.5}) CHECK(radial_oracle(r, 1.0) == doctest::Approx(oracle::gaussian_newtonian(r, 1.0)).epsilon(1e-9));
}

TEST_CASE("Gaussian source within 0.5% of the radial quadrature at r = w, 2w") {
  // Odd cell count with h = w/4 puts cell centers at r = w and r = 2w.
  const double w = 1.0, h = 0.25;
  const auto g = Grid3::centered({33, 33, 33}, {h, h, h});
  const auto src = ScalarField::sample(g, [&](const Vec3& p) { return std::exp(-dot(p, p) / (w * w)); });
  const auto pot = newtonian_convolve(src);
  for (const Index3 c : {Index3{20, 16, 16}, Index3{16, 24, 16}, Index3{16, 16, 12}, Index3{8, 16, 16}}) {
    const double r = norm(g.center(c[0], c[1], c[2]));
    CHECK(pot(c[0], c[1], c[2]) == doctest::Approx(radial_oracle(r, w)).epsilon(5e-3));
  }
}

TEST_CASE("a single cell far away acts as a point source") {
  const auto g = Grid3::cube(11, 1.1);
  ScalarField src(g);
  src(5, 5, 5) = 1.0 / g.cell_volume();
  const auto pot = newtonian_convolve(src);
  const double r = norm(g.center(0, 5, 5));
  CHECK(pot(0, 5, 5) == doctest::Approx(1.0 / (4.0 * oracle::pi * r)).epsilon(1e-12));
  CHECK(std::isfinite(pot(5, 5, 5)));
  CHECK(pot(5, 5, 5) == doctest::Approx(self_cell_integral(g.spacing()) / (4.0 * oracle::pi * g.cell_volume())));
}

TEST_CASE("far field of a displaced source follows the multipole expansion") {
  const auto g = Grid3::cube(16, 3.0);
  const Vec3 c{0.4, -0.2, 0.3};
  const auto src = ScalarField::sample(g, [&](const Vec3& p) { const Vec3 d = p - c; return std::exp(-dot(d, d) / 0.49); });
  double q = 0.0;
  Vec3 dip{};
  for (std::size_t i = 0; i < g.size(); ++i) {
    q += src[i] * g.cell_volume();
    dip += (src[i] * g.cell_volume()) * g.center(i);
  }
  for (const Vec3 x : {Vec3{20, 0, 0}, Vec3{-5, 12, 9}, Vec3{0, 0, -30}}) {
    const double R = norm(x);
    const double multipole = q / (4.0 * oracle::pi * R) + dot(dip, x) / (4.0 * oracle::pi * R * R * R);
    CHECK(newtonian_potential_at(src, x) == doctest::Approx(multipole).epsilon(1e-2));
  }
}

TEST_CASE("kernel gradient and divergence of a Gaussian converge at second order") {
  const double w = 1.0;
  std::vector<double> h, err_g, err_d;
  for (std::size_t n : {16, 24}) {
    const auto g = Grid3::cube(n, 4.0);
    const auto src = ScalarField::sample(g, [&](const Vec3& p) { return std::exp(-dot(p, p) / (w * w)); });
    const auto grad = newtonian_gradient_convolve(src);
    VectorField3 zsrc(g);
    zsrc.set_component(2, src);
    const auto div = newtonian_divergence_convolve(zsrc);
    double worst_g = 0.0, worst_d = 0.0, peak = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      const Vec3 p = g.center(i);
      const double r = norm(p);
      const Vec3 exact = (gaussian_d_dr(r, w) / r) * p;
      peak = std::max(peak, norm(exact));
      worst_g = std::max(worst_g, norm(grad[i] - exact));
      worst_d = std::max(worst_d, std::abs(div[i] - exact.z));
      // The divergence of a z-only field is the z derivative, bit for bit.
      if (div[i] != grad[i].z) FAIL("divergence differs from d/dz");
    }
    h.push_back(g.spacing()[0]);
    err_g.push_back(worst_g / peak);
    err_d.push_back(worst_d / peak);
  }
  CHECK(err_g.back() < 5e-2);
  CHECK(err_d.back() < 5e-2);
  CHECK(fit_power_law(h, err_g) == doctest::Approx(2.0).epsilon(0.25));
}

TEST_CASE("padded targets extend the same integral outside the source") {
  const auto g = Grid3::cube(10, 2.5);
  const auto src = ScalarField::sample(g, [](const Vec3& p) { return std::exp(-dot(p, p)); });
  const auto inner = newtonian_gradient_convolve(src);
  const auto padded = newtonian_gradient_convolve(src, {3, 2, 1});
  CHECK(padded.grid() == g.padded({3, 2, 1}));
  for (std::size_t k = 0; k < 10; ++k)
    for (std::size_t j = 0; j < 10; ++j)
      for (std::size_t i = 0; i < 10; ++i) CHECK(padded(i + 3, j + 2, k + 1) == inner(i, j, k));
  // Outside the box the value approaches -q r / (4 pi r^3).
  const std::size_t far = padded.grid().index(0, 7, 5);
  const Vec3 p = padded.grid().center(far);
  const double q = std::pow(oracle::pi, 1.5);
  const Vec3 exact = (-q / (4.0 * oracle::pi * std::pow(norm(p), 3))) * p;
  CHECK(norm(padded[far] - exact) / norm(exact) < 2e-2);
}

TEST_CASE("curl of the Newtonian potential of a flux ring converges to the exact A") {
  std::vector<double> h, err;
  for (std::size_t n : {12, 16, 20}) {
    const auto g = Grid3::cube(n, 3.0);
    presets::FluxRing ring{1.0, 1.0};
    const auto B = VectorField3::sample(g, [&](const Vec3& p) { return ring.B(p); });
    const auto exact = VectorField3::sample(g, [](const Vec3& p) { return oracle::flux_ring_coulomb_A(p, 1.0, 1.0); });
    const auto A = newtonian_curl_convolve(B);
    h.push_back(g.spacing()[0]);
    err.push_back(max_norm(A - exact) / max_norm(exact));
  }
  CHECK(err.back() < 5e-2);
  const double order = fit_power_law(h, err);
  CHECK(order > 1.5);
  CHECK(order < 2.5);
}

TEST_CASE("convolution is linear and keeps exact zeros") {
  const auto g = Grid3::cube(8, 2.0);
  const auto a = ScalarField::sample(g, [](const Vec3& p) { return std::exp(-dot(p, p)) * p.x; });
  const auto b = ScalarField::sample(g, [](const Vec3& p) { return std::cos(p.y) * std::exp(-dot(p, p)); });
  const auto lhs = newtonian_convolve(2.0 * a + b);
  const auto rhs = 2.0 * newtonian_convolve(a) + newtonian_convolve(b);
  CHECK(max_abs(lhs - rhs) < 1e-14 * max_abs(rhs) * 10);
  VectorField3 F(g);
  F.set_component(1, a);
  const auto NF = newtonian_convolve(F);
  CHECK(NF.component_is_zero(0));
  CHECK(NF.component_is_zero(2));
  CHECK(NF.component(1).values() == newtonian_convolve(a).values());
}

TEST_CASE("mismatched target grid") {
  const auto g = Grid3::cube(4, 1.0);
  CHECK_THROWS_AS(newtonian_convolve(ScalarField(g), Grid3::cube(5, 1.0)), GridError);
  CHECK_NOTHROW(newtonian_convolve(ScalarField(g), g));
}

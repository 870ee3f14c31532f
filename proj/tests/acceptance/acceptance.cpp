// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "coulomb/abphase.hpp"
#include "coulomb/diffops.hpp"
#include "coulomb/fit.hpp"
#include "coulomb/helmholtz.hpp"
#include "coulomb/potentials.hpp"
#include "coulomb/presets.hpp"
#include "coulomb/radiation.hpp"
#include "coulomb/solenoid.hpp"
#include "oracles.hpp"

using namespace coulomb;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

VectorField3 flux_ring(const Grid3& g) {
  presets::FluxRing ring{1.0, 1.0};
  return VectorField3::sample(g, [&](const Vec3& p) { return ring.B(p); });
}

double near_side_quadrature(double rho, double z, double R, double flux) {
  auto f = [&](double zp) { return rho / std::pow(rho * rho + (z - zp) * (z - zp), 1.5); };
  return flux / (4.0 * oracle::pi) * oracle::simpson(f, -R, R, 200000);
}

Outcome solenoid_stokes_limit() {
  const double flux = 2.0 * oracle::pi;
  const double a = a_near_side(1.0, 0.0, SquareFluxLoop(10.0, flux));
  const double ref = near_side_quadrature(1.0, 0.0, 10.0, flux);
  const double limit = a_near_side(1.0, 0.0, SquareFluxLoop(1e8, flux));
  const bool ok = std::abs(a - ref) <= 1e-9 && std::abs(a - 1.0 / std::sqrt(1.01)) <= 1e-9 && std::abs(limit - 1.0) < 1e-9;
  return {ok, fmt("a(R=10)=%.12f quadrature=%.12f diff=%.2e, a(R=1e8)=%.12f", a, ref, std::abs(a - ref), limit)};
}

Outcome series_order() {
  const SquareFluxLoop loop(10.0, 2.0 * oracle::pi);
  std::vector<double> z{0.05, 0.1, 0.2}, err;
  for (double zz : z) err.push_back(std::abs(a_near_side_series(1.0, zz, loop) - a_near_side(1.0, zz, loop)));
  const double p = fit_power_law(z, err);
  return {p >= 3.5 && p <= 4.5, fmt("exponent=%.4f (band [3.5, 4.5])", p)};
}

Outcome return_path_bound() {
  std::vector<double> R{25, 50, 100, 200}, diff;
  for (double r : R) {
    const SquareFluxLoop loop(r, 2.0 * oracle::pi);
    diff.push_back(std::abs(a_loop_full_theta(1.0, 0.0, 0.0, loop) - a_near_side(1.0, 0.0, loop)));
  }
  const double p = fit_power_law(R, diff);
  return {std::abs(p + 1.0) <= 0.2, fmt("exponent=%.4f (band [-1.2, -0.8])", p)};
}

struct CurlRun {
  double err;
  double div_rel;
  double h;
};

CurlRun curl_reconstruction(std::size_t n) {
  const auto g = Grid3::cube(n, 3.0);
  const auto B = flux_ring(g);
  const auto A = vector_potential_from_B(B).value;
  const double err = max_norm(curl(A) - B, 2) / max_norm(B, 2);
  const double div_rel = max_abs(divergence(A), 2) * g.spacing()[0] / max_norm(A, 2);
  return {err, div_rel, g.spacing()[0]};
}

CurlRun coarse_run;

Outcome coulomb_reconstruction() {
  coarse_run = curl_reconstruction(24);
  const auto fine = curl_reconstruction(32);
  const double order = convergence_order(coarse_run.err, fine.err, coarse_run.h, fine.h);
  const bool ok = coarse_run.err <= 0.05 && order >= 1.5 && order <= 2.5;
  return {ok, fmt("24^3 error=%.4f (limit 0.05), 32^3 error=%.4f, ratio=%.2f, order=%.2f (band [1.5, 2.5])",
                  coarse_run.err, fine.err, coarse_run.err / fine.err, order)};
}

Outcome gauge_condition() {
  return {coarse_run.div_rel <= 0.05, fmt("max|div A| h / max|A| = %.4g (limit 0.05) on 24^3", coarse_run.div_rel)};
}

Outcome a_squared() {
  const auto g = Grid3::cube(24, 3.0);
  const auto B = flux_ring(g);
  const auto plain = a_squared_identity(B);
  presets::GaussianBump bump{0.3, 0.8, {0.2, 0.1, -0.1}};
  const auto chi = ScalarField::sample(g, [&](const Vec3& p) { return bump.value(p); });
  const auto gauged = a_squared_identity(B, chi);
  const double r1 = std::abs(plain.lhs - plain.rhs_bb) / plain.rhs_bb;
  const double r2 = std::abs(gauged.identity_residual()) / gauged.lhs;
  const double r3 = std::abs(plain.i2_cross) / plain.rhs_bb;
  const bool ok = r1 <= 0.03 && r2 <= 0.03 && r3 <= 0.03;
  return {ok, fmt("|lhs-rhs|/rhs=%.4f, with chi %.4f (gauge_term=%.4g), i2/rhs=%.4f (limits 0.03)", r1, r2,
                  gauged.gauge_term, r3)};
}

Outcome four_potential_routes() {
  const auto g = Grid3::cube(16, 4.0);
  presets::DipolePulse pulse{1.0, 1.0, 1.0};
  const auto E = VectorField3::sample(g, [&](const Vec3& p) { return pulse.E(p, 0.5); });
  const auto B = VectorField3::sample(g, [&](const Vec3& p) { return pulse.B(p, 0.5); });
  const auto four = four_potential_equal_time(field_tensor(E, B));
  const double d0 = max_abs(four.a0 - scalar_potential_from_E(E).value);
  const double d1 = max_norm(four.a - vector_potential_from_B(B).value);
  return {d0 <= 1e-12 && d1 <= 1e-12, fmt("max |A^0 - phi/c|=%.3g, max |A^i - A|=%.3g (limit 1e-12)", d0, d1)};
}

Outcome ab_phases() {
  const double flux = 1.7, q = 1.0, hbar = 1.0;
  const PureGaugeField gauge(flux);
  const double upper = path_phase(upper_slit_path(), gauge, q, hbar);
  const double diff = two_slit_phase_difference(flux, q, hbar);
  std::vector<double> fluxes, positions;
  for (int i = 0; i <= 96; ++i) fluxes.push_back(3.0 * 2.0 * oracle::pi * hbar / q * i / 96.0);
  for (int i = 0; i < 64; ++i) positions.push_back(-1.0 + 2.0 * i / 64.0);
  const double period = flux_period(make_fringe_scan({}, fluxes, positions, q, hbar));
  const double e1 = std::abs(upper + q * flux / (2.0 * hbar));
  const double e2 = std::abs(diff - q * flux / hbar);
  const double e3 = std::abs(period - 2.0 * oracle::pi * hbar / q) / (2.0 * oracle::pi * hbar / q);
  const bool ok = e1 <= 1e-14 && e2 <= 1e-14 && e3 <= 1e-6;
  return {ok, fmt("half-circle error=%.2g, two-slit error=%.2g, period rel error=%.2g", e1, e2, e3)};
}

Outcome phase_gauge_invariance() {
  const PureGaugeField gauge(1.3);
  const auto bumps = presets::random_gauge_bumps(20240101, 20, 1.2, 0.3, 1.0);
  const std::vector<PathPolyline> loops{PathPolyline::circle({}, 1.0, 64), PathPolyline::circle({0.4, -0.3, 0.2}, 1.5, 96),
                                        PathPolyline::circle({2.5, 0.0, 0.0}, 1.0, 64)};
  auto zero = [](const Vec3&) { return 0.0; };
  double worst = 0.0;
  for (const auto& loop : loops) {
    const double base = closed_loop_phase(loop, gauge, zero, 1.0, 1.0);
    for (const auto& b : bumps) {
      const double shifted = closed_loop_phase(loop, gauge, [&](const Vec3& p) { return b.value(p); }, 1.0, 1.0);
      worst = std::max(worst, std::abs(shifted - base));
    }
  }
  return {worst < 1e-9, fmt("max phase change over 20 bumps x 3 loops = %.3g (limit 1e-9)", worst)};
}

Outcome radiation_surface_terms() {
  const DipoleFarField dipole{1.0, 1.0};
  const std::vector<double> targets{50, 100, 200, 400, 800};
  const auto radii = fixed_phase_radii(1.0, targets);
  const auto scan = surface_decay_scan(dipole, radii, {0.3, 0.2, 0.1});
  const double br = radiation_b_radial_check(dipole_b_samples(dipole, radii.back(), 24, 48));
  const bool ok = scan.exponent >= -1.3 && scan.exponent <= -0.7 && br == 0.0;
  return {ok, fmt("exponent=%.4f (band [-1.3, -0.7]), max|B_r|=%g", scan.exponent, br)};
}

Outcome helmholtz_properties() {
  double worst_t = 0.0, worst_l = 0.0;
  std::string rows;
  for (std::size_t n : {16, 24, 32}) {
    const auto g = Grid3::cube(n, 3.5);
    const double h = g.spacing()[0];
    presets::GaussianBump bump{1.0, 1.0, {}};
    const auto F = VectorField3::sample(g, [&](const Vec3& p) { return bump.gradient(p); });
    const auto G = flux_ring(g);
    const double t = max_norm(decompose(F).transverse, 2) / max_norm(F, 2) / (h * h);
    const double l = max_norm(decompose(G).longitudinal, 2) / max_norm(G, 2) / (h * h);
    worst_t = std::max(worst_t, t);
    worst_l = std::max(worst_l, l);
    rows += fmt(" n=%zu:T/h^2=%.3f,L/h^2=%.3f", n, t, l);
  }
  // Minimality: the Coulomb-gauge A has the least int A^2 among A + grad chi.
  const auto g = Grid3::cube(16, 3.0);
  const auto A = to_coulomb_gauge(vector_potential_from_B(flux_ring(g)).value);
  const double base = volume_integral_squared(A);
  int minimal = 0;
  for (const auto& b : presets::random_gauge_bumps(99, 10, 1.0, 0.6, 1.2)) {
    const auto shifted = A + VectorField3::sample(g, [&](const Vec3& p) { return b.gradient(p); });
    minimal += volume_integral_squared(shifted) > base;
  }
  const bool ok = worst_t <= 0.25 && worst_l <= 0.25 && minimal == 10;
  return {ok, fmt("C bound 0.25:%s; minimal against %d/10 random chi", rows.c_str(), minimal)};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double time_limit;  // seconds
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "solenoid Stokes limit", 1.0, solenoid_stokes_limit},
      {2, "series order z^4", 1.0, series_order},
      {3, "return-path bound", 10.0, return_path_bound},
      {4, "Coulomb-gauge reconstruction", 120.0, coulomb_reconstruction},
      {5, "gauge condition", 1.0, gauge_condition},
      {6, "A^2 identity", 300.0, a_squared},
      {7, "four-potential routes", 60.0, four_potential_routes},
      {8, "AB phases and fringe period", 1.0, ab_phases},
      {9, "phase gauge invariance", 60.0, phase_gauge_invariance},
      {10, "radiation surface terms", 5.0, radiation_surface_terms},
      {11, "Helmholtz properties", 600.0, helmholtz_properties},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs <= c.time_limit;
    const bool pass = o.pass && in_time;
    failures += !pass;
    std::printf("criterion %2d: %s  %s: %s [%.2f s, limit %.0f s%s]\n", c.id, pass ? "PASS" : "FAIL", c.name,
                o.detail.c_str(), secs, c.time_limit, in_time ? "" : ", too slow");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

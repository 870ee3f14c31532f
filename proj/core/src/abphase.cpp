#include "coulomb/abphase.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "coulomb/constants.hpp"
#include "coulomb/error.hpp"
#include "coulomb/fit.hpp"
#include "coulomb/quadrature.hpp"

namespace coulomb {

double PureGaugeField::value(double theta, long winding) const {
  if (!(theta >= 0.0 && theta < 2.0 * kPi)) throw DomainError("branch angle must lie in [0, 2 pi)");
  return flux_ * (static_cast<double>(winding) + theta / (2.0 * kPi));
}

double PureGaugeField::branch_value(const Vec3& p) const {
  double theta = std::atan2(p.y, p.x);
  if (theta < 0.0) theta += 2.0 * kPi;
  if (theta >= 2.0 * kPi) theta = 0.0;
  return value(theta, 0);
}

Vec3 PureGaugeField::gradient(const Vec3& p) const {
  const double rho2 = p.x * p.x + p.y * p.y;
  if (rho2 == 0.0) throw SingularityError("pure gauge field is singular on the flux axis");
  const double s = flux_ / (2.0 * kPi * rho2);
  return {-s * p.y, s * p.x, 0.0};
}

double winding_angle(const PathPolyline& path) {
  double scale = 0.0;
  for (const auto& p : path.points()) scale = std::max(scale, std::hypot(p.x, p.y));
  const double tiny = 1e-14 * (scale > 0.0 ? scale : 1.0);
  for (const auto& p : path.points()) {
    if (std::hypot(p.x, p.y) <= tiny) throw SingularityError("path touches the flux axis");
  }
  double total = 0.0;
  for (std::size_t s = 0; s < path.segment_count(); ++s) {
    const auto [a, b] = path.segment(s);
    const double cr = a.x * b.y - a.y * b.x;
    const double dt = a.x * b.x + a.y * b.y;
    if (std::abs(cr) <= tiny * tiny && dt < 0.0) {
      throw SingularityError("path segment crosses the flux axis");
    }
    total += std::atan2(cr, dt);
  }
  return total;
}

double path_phase(const PathPolyline& path, const PureGaugeField& gauge, double q, double hbar) {
  if (!(hbar > 0.0)) throw ParameterError("hbar must be positive");
  return q / hbar * gauge.flux() / (2.0 * kPi) * winding_angle(path);
}

PathPolyline upper_slit_path(std::size_t segments) {
  return PathPolyline::arc({0.0, 0.0, 0.0}, 1.0, kPi, 0.0, segments);
}

PathPolyline lower_slit_path(std::size_t segments) {
  return PathPolyline::arc({0.0, 0.0, 0.0}, 1.0, kPi, 2.0 * kPi, segments);
}

double two_slit_phase_difference(double flux, double q, double hbar) {
  const PureGaugeField g(flux);
  const double diff = path_phase(lower_slit_path(), g, q, hbar) - path_phase(upper_slit_path(), g, q, hbar);
  const double expected = q * flux / hbar;
  if (std::abs(diff - expected) > 1e-12 * std::max(1.0, std::abs(expected))) {
    throw InvariantError("two-slit phase difference disagrees with q flux / hbar");
  }
  return diff;
}

namespace {

Vec3 numerical_gradient(const ScalarFunction& f, const Vec3& p) {
  const double h = 2e-3 * (1.0 + norm(p));
  Vec3 g;
  for (std::size_t a = 0; a < 3; ++a) {
    auto at = [&](double s) {
      Vec3 q = p;
      q[a] += s * h;
      return f(q);
    };
    g[a] = (-at(-3) + 9.0 * at(-2) - 45.0 * at(-1) + 45.0 * at(1) - 9.0 * at(2) + at(3)) / (60.0 * h);
  }
  return g;
}

}  // namespace

GaugeLoopIntegral gauge_addition_invariance(const PathPolyline& path, const ScalarFunction& chi,
                                            const LineQuadrature& quad) {
  if (!path.closed()) throw ParameterError("gauge invariance check needs a closed path");
  auto grad = [&](const Vec3& p) { return numerical_gradient(chi, p); };
  GaugeLoopIntegral out;
  double scale = 0.0;
  for (const auto& p : path.points()) scale = std::max(scale, std::abs(chi(p)));
  for (std::size_t s = 0; s < path.segment_count(); ++s) {
    const auto [a, b] = path.segment(s);
    const double seg = line_integral(grad, PathPolyline::open({a, b}), quad);
    const double jump = chi(b) - chi(a);
    if (std::abs(seg - jump) > 1e-6 * (1.0 + scale)) out.multivalued = true;
    out.value += seg;
  }
  return out;
}

double closed_loop_phase(const PathPolyline& path, const PureGaugeField& gauge,
                         const ScalarFunction& chi, double q, double hbar) {
  return path_phase(path, gauge, q, hbar) + q / hbar * gauge_addition_invariance(path, chi).value;
}

void FringeGeometry::validate() const {
  if (!(slit_separation > 0.0 && wavelength > 0.0 && screen_distance > 0.0)) {
    throw ParameterError("slit separation, wavelength and screen distance must be positive");
  }
}

namespace {

void normalize_row(std::vector<double>& row) {
  const double m = *std::max_element(row.begin(), row.end());
  if (m > 0.0) {
    for (double& v : row) v /= m;
  }
}

}  // namespace

std::vector<double> fringe_pattern(const FringeGeometry& geometry, const std::vector<double>& positions,
                                   double flux, double q, double hbar) {
  geometry.validate();
  if (!(hbar > 0.0)) throw ParameterError("hbar must be positive");
  if (positions.empty()) throw ParameterError("fringe pattern needs detector positions");
  const double k = kPi * geometry.slit_separation / (geometry.wavelength * geometry.screen_distance);
  const double offset = q * flux / (2.0 * hbar);
  std::vector<double> row(positions.size());
  for (std::size_t i = 0; i < positions.size(); ++i) {
    const double c = std::cos(k * positions[i] + offset);
    row[i] = c * c;
  }
  normalize_row(row);
  return row;
}

FringeScan make_fringe_scan(const FringeGeometry& geometry, const std::vector<double>& fluxes,
                            const std::vector<double>& positions, double q, double hbar,
                            double noise, std::uint64_t seed) {
  if (noise < 0.0) throw ParameterError("noise level must be non-negative");
  FringeScan scan{geometry, fluxes, positions, {}};
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (double f : fluxes) {
    auto row = fringe_pattern(geometry, positions, f, q, hbar);
    if (noise > 0.0) {
      for (double& v : row) v = std::max(0.0, v + noise * gauss(rng));
      normalize_row(row);
    }
    scan.intensities.push_back(std::move(row));
  }
  return scan;
}

double flux_period(const FringeScan& scan) {
  scan.geometry.validate();
  const std::size_t nf = scan.fluxes.size();
  const std::size_t nx = scan.positions.size();
  if (nf < 2 || nx < 3) throw ResolutionError("scan needs >= 2 flux samples and >= 3 positions");
  if (scan.intensities.size() != nf) throw ParameterError("intensity rows do not match flux samples");
  for (std::size_t i = 1; i < nf; ++i) {
    if (!(scan.fluxes[i] > scan.fluxes[i - 1])) throw ParameterError("flux samples must increase");
  }

  const double spacing = scan.geometry.fringe_spacing();
  const double k = 2.0 * kPi / spacing;

  // Normal equations for a + b cos(kx) + c sin(kx); the design matrix does
  // not depend on the row.
  double m[3][3] = {};
  std::vector<std::array<double, 3>> basis(nx);
  for (std::size_t j = 0; j < nx; ++j) {
    basis[j] = {1.0, std::cos(k * scan.positions[j]), std::sin(k * scan.positions[j])};
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) m[r][c] += basis[j][r] * basis[j][c];
  }
  auto det3 = [](const double a[3][3]) {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  };
  const double det = det3(m);
  if (std::abs(det) < 1e-12 * static_cast<double>(nx * nx * nx)) {
    throw ResolutionError("detector positions cannot resolve the fringe phase");
  }

  std::vector<double> peak(nf);
  for (std::size_t i = 0; i < nf; ++i) {
    const auto& row = scan.intensities[i];
    if (row.size() != nx) throw ParameterError("intensity row length does not match positions");
    double rhs[3] = {};
    for (std::size_t j = 0; j < nx; ++j)
      for (int r = 0; r < 3; ++r) rhs[r] += basis[j][r] * row[j];
    double coef[3];
    for (int col = 0; col < 3; ++col) {
      double mc[3][3];
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) mc[r][c] = c == col ? rhs[r] : m[r][c];
      coef[col] = det3(mc) / det;
    }
    if (std::hypot(coef[1], coef[2]) < 1e-6) throw ResolutionError("no fringe contrast in a scan row");
    // cos(kx + alpha): b = A cos(alpha), c = -A sin(alpha); peak at x = -alpha / k.
    const double alpha = std::atan2(-coef[2], coef[1]);
    double x = -alpha / k;
    if (i > 0) {
      // Unwrap modulo the fringe spacing.
      x += spacing * std::round((peak[i - 1] - x) / spacing);
    }
    peak[i] = x;
  }

  const double slope = fit_line(scan.fluxes, peak).slope;
  if (slope == 0.0) throw ResolutionError("fringe pattern does not move with flux");
  const double period = spacing / std::abs(slope);

  const double span = scan.fluxes.back() - scan.fluxes.front();
  const double step = span / static_cast<double>(nf - 1);
  if (span < 2.0 * period * (1.0 - 1e-9)) throw ResolutionError("scan covers fewer than 2 flux periods");
  if (period / step < 16.0 * (1.0 - 1e-9)) throw ResolutionError("fewer than 16 flux samples per period");
  return period;
}

}  // namespace coulomb

#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

#include "cli.hpp"
#include "commands.hpp"
#include "coulomb/field_io.hpp"
#include "coulomb/radiation.hpp"

namespace coulomb::cli {

ScanResult run_decay_scan(const RunConfig& cfg, const Json& sec) {
  const std::string field = value_or<std::string>(sec, "field", "dipole");
  const double k = value_or<double>(sec, "k", 1.0);
  const auto targets = value_or<std::vector<double>>(sec, "radii", {50.0, 100.0, 200.0, 400.0, 800.0});
  const auto eval = value_or<std::vector<double>>(sec, "eval_point", {0.3, 0.2, 0.1});
  SphereQuadrature quad;
  quad.polar_order = value_or<std::size_t>(sec, "polar_order", quad.polar_order);
  quad.azimuth_count = value_or<std::size_t>(sec, "azimuth_count", quad.azimuth_count);
  if (!(k > 0.0)) throw UsageError("k must be positive");
  if (eval.size() != 3) throw UsageError("eval_point must have three components");
  const Vec3 r{eval[0], eval[1], eval[2]};

  std::vector<double> scaled;
  for (double t : targets) scaled.push_back(t / k);

  ScanResult res;
  if (field == "dipole") {
    const DipoleFarField dipole{k, 1.0};
    const auto radii = fixed_phase_radii(k, scaled);
    res.scan = surface_decay_scan(dipole, radii, r, quad);
    const auto samples = dipole_b_samples(dipole, radii.back(), 16, 32);
    res.b_radial_max = radiation_b_radial_check(samples);
  } else if (field == "point-charge") {
    const double q = kFourPi * cfg.units.eps0;
    const auto E = [&](const Vec3& p) { return (q / (kFourPi * cfg.units.eps0 * std::pow(norm(p), 3))) * p; };
    res.scan = surface_decay_scan(E, scaled, r, quad);
  } else if (field == "tangential") {
    const auto E = [](const Vec3& p) {
      const double s = 1.0 / dot(p, p);
      return Vec3{-p.y * s, p.x * s, 0.0};
    };
    res.scan = surface_decay_scan(E, scaled, r, quad);
  } else {
    throw UsageError("radiation field must be dipole, point-charge or tangential");
  }
  return res;
}

int cmd_radiation_scan(const RunConfig& cfg, std::ostream& out) {
  const Json& sec = cfg.section("radiation-scan");
  const auto res = run_decay_scan(cfg, sec);
  std::ostringstream csv;
  csv << "radius,integral_value\n";
  for (std::size_t i = 0; i < res.scan.radii.size(); ++i)
    csv << format_number(res.scan.radii[i]) << ',' << format_number(res.scan.integrals[i]) << '\n';
  csv << "fitted_exponent," << format_number(res.scan.exponent) << '\n';
  write_output(cfg, "radiation_scan.csv", csv.str());

  Json j;
  j["field"] = value_or<std::string>(sec, "field", "dipole");
  j["radii"] = res.scan.radii;
  j["integrals"] = res.scan.integrals;
  j["fitted_exponent"] = res.scan.vanishes_identically ? Json(nullptr) : Json(res.scan.exponent);
  j["vanishes_identically"] = res.scan.vanishes_identically;
  if (res.b_radial_max) j["b_radial_max"] = *res.b_radial_max;
  out << render(j);
  return kExitPass;
}

}  // namespace coulomb::cli

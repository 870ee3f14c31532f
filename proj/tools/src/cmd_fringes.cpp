#include <cmath>
#include <ostream>
#include <sstream>

#include "cli.hpp"
#include "commands.hpp"
#include "coulomb/abphase.hpp"
#include "coulomb/error.hpp"
#include "coulomb/field_io.hpp"

namespace coulomb::cli {

int cmd_ab_fringes(const RunConfig& cfg, std::ostream& out) {
  const Json& sec = cfg.section("ab-fringes");
  const double q = cfg.units.q;
  const double hbar = cfg.units.hbar;
  if (q == 0.0) throw UsageError("q must be nonzero for a fringe scan");
  const double expected = 2.0 * kPi * hbar / std::abs(q);

  FringeGeometry geom;
  geom.slit_separation = value_or<double>(sec, "slit_separation", 1.0);
  geom.wavelength = value_or<double>(sec, "wavelength", 1.0);
  geom.screen_distance = value_or<double>(sec, "screen_distance", 1.0);
  geom.validate();

  const double flux_min = value_or<double>(sec, "flux_min", 0.0);
  const double flux_max = value_or<double>(sec, "flux_max", flux_min + 3.0 * expected);
  const long flux_samples = value_or<long>(sec, "flux_samples", 97);
  const long n_pos = value_or<long>(sec, "positions", 64);
  const double noise = value_or<double>(sec, "noise", 0.0);
  const double tolerance = value_or<double>(sec, "tolerance", noise > 0.0 ? 1e-2 : 1e-6);
  if (flux_samples < 2 || n_pos < 3) throw UsageError("need >= 2 flux samples and >= 3 positions");
  if (!(flux_max > flux_min)) throw UsageError("flux_max must exceed flux_min");
  if (!(noise >= 0.0)) throw UsageError("noise must be non-negative");

  std::vector<double> fluxes(static_cast<std::size_t>(flux_samples));
  for (std::size_t i = 0; i < fluxes.size(); ++i)
    fluxes[i] = flux_min + (flux_max - flux_min) * static_cast<double>(i) / static_cast<double>(fluxes.size() - 1);
  // Two fringe spacings centered on the axis.
  const double s = geom.fringe_spacing();
  std::vector<double> positions(static_cast<std::size_t>(n_pos));
  for (std::size_t i = 0; i < positions.size(); ++i)
    positions[i] = -s + 2.0 * s * static_cast<double>(i) / static_cast<double>(positions.size());

  const auto scan = make_fringe_scan(geom, fluxes, positions, q, hbar, noise, cfg.seed);
  double period = 0.0;
  try {
    period = flux_period(scan);
  } catch (const ResolutionError& e) {
    throw UsageError(std::string("under-sampled scan: ") + e.what());
  }
  const double rel = std::abs(period - expected) / expected;

  std::vector<std::string> header{"flux"};
  for (double x : positions) header.push_back(format_number(x));
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < fluxes.size(); ++i) {
    std::vector<double> row{fluxes[i]};
    row.insert(row.end(), scan.intensities[i].begin(), scan.intensities[i].end());
    rows.push_back(std::move(row));
  }
  std::ostringstream csv;
  write_csv(csv, header, rows);
  write_output(cfg, "fringes.csv", csv.str());

  Json j;
  j["period_estimate"] = period;
  j["expected"] = expected;
  j["rel_error"] = rel;
  j["tolerance"] = tolerance;
  j["noise"] = noise;
  j["seed"] = cfg.seed;
  j["status"] = rel <= tolerance ? "pass" : "fail";
  const std::string report = render(j);
  write_output(cfg, "period.json", report);
  out << report;
  return rel <= tolerance ? kExitPass : kExitCheckFailed;
}

}  // namespace coulomb::cli

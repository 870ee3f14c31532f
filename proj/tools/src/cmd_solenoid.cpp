#include <ostream>
#include <sstream>

#include "cli.hpp"
#include "commands.hpp"
#include "coulomb/field_io.hpp"
#include "coulomb/solenoid.hpp"

namespace coulomb::cli {

int cmd_solenoid_profile(const RunConfig& cfg, std::ostream& out) {
  const Json& sec = cfg.section("solenoid-profile");
  const double R = value_or<double>(sec, "R", 10.0);
  const double z = value_or<double>(sec, "z", 0.0);
  const double flux = value_or<double>(sec, "flux", 2.0 * kPi);
  const double rho_min = value_or<double>(sec, "rho_min", 0.5);
  const double rho_max = value_or<double>(sec, "rho_max", 5.0);
  const long samples = value_or<long>(sec, "samples", 10);
  const double theta = value_or<double>(sec, "theta", 0.0);

  if (!(rho_min > 0.0)) throw UsageError("rho range must exclude 0 (rho_min > 0)");
  if (!(rho_max >= rho_min)) throw UsageError("rho_max must not be below rho_min");
  if (samples < 1) throw UsageError("samples must be >= 1");
  if (samples > 1 && rho_max == rho_min) throw UsageError("rho range is empty");
  if (rho_max >= 2.0 * R) throw UsageError("rho range must stay inside the loop (rho < 2R)");
  const SquareFluxLoop loop(R, flux);

  std::vector<std::vector<double>> rows;
  for (long i = 0; i < samples; ++i) {
    const double t = samples == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(samples - 1);
    const double rho = rho_min + t * (rho_max - rho_min);
    rows.push_back({rho, z, R, flux, a_near_side(rho, z, loop), a_near_side_series(rho, z, loop),
                    a_stokes(rho, flux), a_loop_full_theta(rho, theta, z, loop)});
  }
  std::ostringstream os;
  write_csv(os, {"rho", "z", "R", "Phi", "a_exact", "a_series", "a_stokes", "a_full_theta"}, rows);
  write_output(cfg, "solenoid_profile.csv", os.str());
  out << os.str();
  return kExitPass;
}

}  // namespace coulomb::cli

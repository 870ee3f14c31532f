#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "config.hpp"
#include "coulomb/radiation.hpp"

namespace coulomb::cli {

// Each command writes its files under cfg.out, prints its JSON report (or
// a short summary) to `out`, and returns kExitPass or kExitCheckFailed.
// Input problems are thrown as UsageError or coulomb::Error.
int cmd_helmholtz(const RunConfig& cfg, std::ostream& out);
int cmd_potentials(const RunConfig& cfg, std::ostream& out);
int cmd_solenoid_profile(const RunConfig& cfg, std::ostream& out);
int cmd_ab_fringes(const RunConfig& cfg, std::ostream& out);
int cmd_radiation_scan(const RunConfig& cfg, std::ostream& out);
int cmd_verify(const RunConfig& cfg, std::ostream& out);

/// One thresholded quantity in a report. `inconclusive` checks count as
/// failures for the exit code.
struct Check {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  std::string status;  // pass, fail, inconclusive

  static Check upper_bound(std::string name, double value, double tolerance);
};

Json checks_json(const std::vector<Check>& checks);
bool all_pass(const std::vector<Check>& checks);

/// max |a - b| / max |b| over cells at least `margin` from the faces.
double relative_difference(const VectorField3& a, const VectorField3& b, std::size_t margin);

struct ScanResult {
  DecayScan scan;
  std::optional<double> b_radial_max;  // dipole field only
};

/// Decay scan configured by a radiation-scan style section.
ScanResult run_decay_scan(const RunConfig& cfg, const Json& section);

std::string field_text(const VectorField3& f);
std::string field_text(const ScalarField& f);

}  // namespace coulomb::cli

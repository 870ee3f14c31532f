#include <cmath>
#include <optional>
#include <ostream>

#include "cli.hpp"
#include "commands.hpp"
#include "coulomb/diffops.hpp"
#include "coulomb/potentials.hpp"
#include "coulomb/presets.hpp"
#include "scenarios.hpp"

namespace coulomb::cli {

namespace {

BoundaryClosure parse_closure(const std::string& s) {
  if (s == "none") return BoundaryClosure::none;
  if (s == "boundary-flux") return BoundaryClosure::boundary_flux;
  throw UsageError("closure must be 'none' or 'boundary-flux'");
}

// Point charge normalized so phi = 1/r; compared on the shell between three
// cells from the core and half the box half width.
double point_charge_error(const ScalarField& phi, double half) {
  const Grid3& g = phi.grid();
  const double r_min = 3.0 * g.min_spacing();
  double worst = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double r = norm(g.center(i));
    if (r < r_min || r > 0.5 * half) continue;
    worst = std::max(worst, std::abs(phi[i] * r - 1.0));
  }
  return worst;
}

double gaussian_charge_error(const ScalarField& phi, double width, const Constants& k) {
  presets::GaussianCharge cloud{1.0, width};
  const auto exact = ScalarField::sample(phi.grid(), [&](const Vec3& p) { return cloud.phi(p, k); });
  return max_abs(phi - exact) / max_abs(exact);
}

}  // namespace

int cmd_potentials(const RunConfig& cfg, std::ostream& out) {
  const Json& sec = cfg.section("potentials");
  const std::string preset = value_or<std::string>(sec, "preset", "point-charge");
  const auto input_e = optional_value<std::string>(sec, "input_e");
  const auto input_b = optional_value<std::string>(sec, "input_b");
  const double width = value_or<double>(sec, "width", 1.0);
  const bool b_preset = preset == "flux-tube" || preset == "radial-blob";
  const double half = value_or<double>(sec, "half_width", b_preset ? 3.0 : 4.0);
  const double time = value_or<double>(sec, "time", 0.5);
  const auto closure = parse_closure(value_or<std::string>(sec, "closure", "boundary-flux"));
  const auto tolerance = optional_value<double>(sec, "tolerance");
  if (!(width > 0.0 && half > 0.0)) throw UsageError("width and half_width must be positive");

  std::optional<VectorField3> E, B;
  const bool from_files = input_e || input_b;
  if (from_files) {
    if (input_e) E = read_vector_field_file(*input_e);
    if (input_b) B = read_vector_field_file(*input_b);
  } else {
    const Grid3 grid = Grid3::cube(cfg.grid, half);
    const PresetParams params{width, time, cfg.seed, cfg.units};
    if (preset == "point-charge" || preset == "gaussian-charge") {
      E = sample_preset(preset, grid, params);
    } else if (b_preset) {
      B = sample_preset(preset, grid, params);
    } else if (preset == "dipole-radiation") {
      E = sample_preset("dipole-e", grid, params);
      B = sample_preset("dipole-b", grid, params);
    } else {
      throw UsageError("potentials preset must be point-charge, gaussian-charge, flux-tube, radial-blob or dipole-radiation");
    }
  }

  Json j;
  j["input"] = from_files ? "files" : preset;
  j["closure"] = closure == BoundaryClosure::none ? "none" : "boundary-flux";
  Json warnings = Json::array();
  std::vector<Check> checks;

  if (E) {
    const auto phi = scalar_potential_from_E(*E, closure);
    for (const auto& m : phi.diagnostics.messages()) warnings.push_back("phi: " + m);
    Json p;
    p["grid"] = {{"dims", E->grid().dims()}, {"spacing", E->grid().spacing()}};
    p["max_abs"] = max_abs(phi.value);
    // Static inputs only: with B present E also carries -dA/dt.
    if (!B) p["gradient_residual"] = relative_difference(-1.0 * gradient(phi.value), *E, 2);
    if (!from_files && preset == "point-charge") {
      p["oracle_relative_error"] = point_charge_error(phi.value, half);
    } else if (!from_files && preset == "gaussian-charge") {
      p["oracle_relative_error"] = gaussian_charge_error(phi.value, width, cfg.units);
    }
    if (tolerance && p.contains("oracle_relative_error"))
      checks.push_back(Check::upper_bound("phi_oracle", p["oracle_relative_error"].get<double>(), *tolerance));
    j["phi"] = p;
    write_output(cfg, "phi.field", field_text(phi.value));
  }
  if (B) {
    const auto A = vector_potential_from_B(*B);
    for (const auto& m : A.diagnostics.messages()) warnings.push_back("A: " + m);
    const double a_max = max_norm(A.value, 2);
    Json a;
    a["grid"] = {{"dims", B->grid().dims()}, {"spacing", B->grid().spacing()}};
    a["max_norm"] = max_norm(A.value);
    a["curl_residual"] = relative_difference(curl(A.value), *B, 2);
    a["divergence_relative"] =
        a_max > 0.0 ? max_abs(divergence(A.value), 2) * B->grid().min_spacing() / a_max : 0.0;
    a["input_divergence_ratio"] = A.diagnostics.divergence_ratio;
    if (tolerance) checks.push_back(Check::upper_bound("curl_residual", a["curl_residual"].get<double>(), *tolerance));
    j["A"] = a;
    write_output(cfg, "A.field", field_text(A.value));
  }
  j["warnings"] = warnings;
  j["checks"] = checks_json(checks);
  j["status"] = !tolerance ? "unchecked" : (all_pass(checks) ? "pass" : "fail");

  const std::string report = render(j);
  write_output(cfg, "potentials.json", report);
  out << report;
  return all_pass(checks) ? kExitPass : kExitCheckFailed;
}

}  // namespace coulomb::cli

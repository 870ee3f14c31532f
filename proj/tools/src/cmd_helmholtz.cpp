#include <ostream>

#include "cli.hpp"
#include "commands.hpp"
#include "coulomb/diffops.hpp"
#include "coulomb/helmholtz.hpp"
#include "scenarios.hpp"

namespace coulomb::cli {

namespace {

double divergence_relative(const VectorField3& F) {
  const double scale = max_norm(F, 2);
  if (scale == 0.0) return 0.0;
  return max_abs(divergence(F), 2) * F.grid().min_spacing() / scale;
}

double curl_relative(const VectorField3& F) {
  const double scale = max_norm(F, 2);
  if (scale == 0.0) return 0.0;
  return max_norm(curl(F), 2) * F.grid().min_spacing() / scale;
}

}  // namespace

int cmd_helmholtz(const RunConfig& cfg, std::ostream& out) {
  const Json& sec = cfg.section("helmholtz");
  const auto input = optional_value<std::string>(sec, "input");
  const std::string preset = value_or<std::string>(sec, "preset", "gradient-bump");
  const double width = value_or<double>(sec, "width", 1.0);
  const double half = value_or<double>(sec, "half_width", 3.5);
  const auto tolerance = optional_value<double>(sec, "tolerance");

  std::optional<VectorField3> F;
  if (input) {
    F = read_vector_field_file(*input);
  } else {
    if (!(width > 0.0 && half > 0.0)) throw UsageError("width and half_width must be positive");
    F = sample_preset(preset, Grid3::cube(cfg.grid, half), {width, 0.0, cfg.seed, cfg.units});
  }
  const auto d = decompose(*F);
  const double f_max = max_norm(*F, 2);
  const double l_rel = f_max > 0.0 ? max_norm(d.longitudinal, 2) / f_max : 0.0;
  const double t_rel = f_max > 0.0 ? max_norm(d.transverse, 2) / f_max : 0.0;
  const double recon = relative_difference(d.longitudinal + d.transverse, *F, 2);

  Json j;
  j["input"] = input ? *input : preset;
  j["grid"] = {{"dims", F->grid().dims()}, {"spacing", F->grid().spacing()}};
  j["input_max"] = f_max;
  j["longitudinal_relative"] = l_rel;
  j["transverse_relative"] = t_rel;
  j["reconstruction_residual"] = recon;
  j["longitudinal_curl_relative"] = curl_relative(d.longitudinal);
  j["transverse_divergence_relative"] = divergence_relative(d.transverse);
  j["support_touches_boundary"] = d.support_touches_boundary;

  std::vector<Check> checks;
  if (tolerance) {
    checks.push_back(Check::upper_bound("reconstruction_residual", recon, *tolerance));
    if (!input && preset == "gradient-bump") checks.push_back(Check::upper_bound("transverse_relative", t_rel, *tolerance));
    if (!input && (preset == "flux-tube" || preset == "divergence-free"))
      checks.push_back(Check::upper_bound("longitudinal_relative", l_rel, *tolerance));
  }
  j["checks"] = checks_json(checks);
  j["status"] = !tolerance ? "unchecked" : (all_pass(checks) ? "pass" : "fail");

  write_output(cfg, "longitudinal.field", field_text(d.longitudinal));
  write_output(cfg, "transverse.field", field_text(d.transverse));
  const std::string report = render(j);
  write_output(cfg, "helmholtz.json", report);
  out << report;
  return all_pass(checks) ? kExitPass : kExitCheckFailed;
}

}  // namespace coulomb::cli

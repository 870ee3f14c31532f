#include "cli.hpp"

#include <functional>
#include <ostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "config.hpp"
#include "coulomb/error.hpp"

namespace coulomb::cli {

namespace {

// Every flag writes into `overrides`, which is merged over the config file.
class Binder {
 public:
  explicit Binder(Json& overrides) : overrides_(overrides) {}

  template <class T>
  CLI::Option* bind(CLI::App* app, const std::string& flag, std::string section, std::string key,
                    const std::string& help) {
    return app->add_option_function<T>(
        flag,
        [this, section = std::move(section), key = std::move(key)](const T& v) {
          if (section.empty()) {
            set_path(overrides_, {key}, v);
          } else {
            set_path(overrides_, {section, key}, v);
          }
        },
        help);
  }

 private:
  Json& overrides_;
};

using Command = std::function<int(const RunConfig&, std::ostream&)>;

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coulomb-gauge potentials, Aharonov-Bohm phases and identity checks", "coulomb"};
  app.require_subcommand(1);
  app.fallthrough();

  Json overrides = Json::object();
  Binder b(overrides);
  std::string config_path;
  app.add_option("--config", config_path, "JSON config file; flags override its values");
  b.bind<std::string>(&app, "--out", "", "out", "Output directory");
  b.bind<long>(&app, "--grid", "", "grid", "Cells per axis");
  b.bind<std::uint64_t>(&app, "--seed", "", "seed", "Seed for random presets and noise");
  b.bind<double>(&app, "--q", "units", "q", "Charge");
  b.bind<double>(&app, "--hbar", "units", "hbar", "Reduced Planck constant");
  b.bind<double>(&app, "--c", "units", "c", "Speed of light");
  b.bind<double>(&app, "--eps0", "units", "eps0", "Vacuum permittivity");

  std::vector<std::pair<CLI::App*, Command>> commands;

  {
    const std::string s = "helmholtz";
    auto* sub = app.add_subcommand(s, "Longitudinal/transverse split of a vector field");
    b.bind<std::string>(sub, "--preset", s, "preset", "gradient-bump, flux-tube, divergence-free or random");
    b.bind<std::string>(sub, "--input", s, "input", "Vector field file to decompose");
    b.bind<double>(sub, "--width", s, "width", "Preset width");
    b.bind<double>(sub, "--half-width", s, "half_width", "Half width of the cubic box");
    b.bind<double>(sub, "--tolerance", s, "tolerance", "Fail above this relative residual");
    commands.emplace_back(sub, cmd_helmholtz);
  }
  {
    const std::string s = "potentials";
    auto* sub = app.add_subcommand(s, "Scalar and vector potentials from field snapshots");
    b.bind<std::string>(sub, "--preset", s, "preset",
                        "point-charge, gaussian-charge, flux-tube, radial-blob or dipole-radiation");
    b.bind<std::string>(sub, "--input-e", s, "input_e", "Electric field file");
    b.bind<std::string>(sub, "--input-b", s, "input_b", "Magnetic field file");
    b.bind<std::string>(sub, "--closure", s, "closure", "none or boundary-flux");
    b.bind<double>(sub, "--width", s, "width", "Preset width");
    b.bind<double>(sub, "--half-width", s, "half_width", "Half width of the cubic box");
    b.bind<double>(sub, "--time", s, "time", "Snapshot time for dipole-radiation");
    b.bind<double>(sub, "--tolerance", s, "tolerance", "Fail above this relative error");
    commands.emplace_back(sub, cmd_potentials);
  }
  {
    const std::string s = "solenoid-profile";
    auto* sub = app.add_subcommand(s, "Near-side potential of a square flux loop against rho");
    b.bind<double>(sub, "--half-side", s, "R", "Loop half side R");
    b.bind<double>(sub, "--z", s, "z", "Height along the near side");
    b.bind<double>(sub, "--flux", s, "flux", "Flux Phi");
    b.bind<double>(sub, "--rho-min", s, "rho_min", "Smallest rho (> 0)");
    b.bind<double>(sub, "--rho-max", s, "rho_max", "Largest rho");
    b.bind<long>(sub, "--samples", s, "samples", "Number of rho values");
    b.bind<double>(sub, "--theta", s, "theta", "Azimuth of the full-loop samples");
    commands.emplace_back(sub, cmd_solenoid_profile);
  }
  {
    const std::string s = "ab-fringes";
    auto* sub = app.add_subcommand(s, "Two-slit fringes against enclosed flux and the flux period");
    b.bind<double>(sub, "--flux-min", s, "flux_min", "First flux value");
    b.bind<double>(sub, "--flux-max", s, "flux_max", "Last flux value");
    b.bind<long>(sub, "--flux-samples", s, "flux_samples", "Number of flux values");
    b.bind<long>(sub, "--positions", s, "positions", "Detector positions across two fringes");
    b.bind<double>(sub, "--noise", s, "noise", "Gaussian noise relative to the peak");
    b.bind<double>(sub, "--tolerance", s, "tolerance", "Allowed relative period error");
    commands.emplace_back(sub, cmd_ab_fringes);
  }
  {
    const std::string s = "radiation-scan";
    auto* sub = app.add_subcommand(s, "Decay of the far-surface integral with sphere radius");
    b.bind<std::string>(sub, "--field", s, "field", "dipole, point-charge or tangential");
    b.bind<double>(sub, "--k", s, "k", "Wavenumber");
    b.bind<std::vector<double>>(sub, "--radii", s, "radii", "Target radii in units of 1/k");
    commands.emplace_back(sub, cmd_radiation_scan);
  }
  {
    const std::string s = "verify";
    auto* sub = app.add_subcommand(s, "Defining relations, A^2 identity and surface decay in one report");
    b.bind<std::string>(sub, "--b-preset", s, "b_preset", "flux-tube or radial-blob");
    b.bind<std::string>(sub, "--input-b", s, "input_b", "Magnetic field file for the A^2 identity");
    b.bind<double>(sub, "--padding", s, "padding", "A^2 padding as a fraction of the grid");
    b.bind<double>(sub, "--tolerance", s, "tolerance", "Override every relative tolerance");
    commands.emplace_back(sub, cmd_verify);
  }

  std::vector<std::string> argv_store{"coulomb"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    Json doc = config_path.empty() ? Json::object() : load_config_file(config_path);
    doc.merge_patch(overrides);
    const RunConfig cfg = finalize(std::move(doc));
    for (const auto& [sub, command] : commands)
      if (sub->parsed()) return command(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const coulomb::Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace coulomb::cli

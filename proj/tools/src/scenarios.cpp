#include "scenarios.hpp"

#include <array>
#include <fstream>

#include "config.hpp"
#include "coulomb/field_io.hpp"
#include "coulomb/presets.hpp"

namespace coulomb::cli {

namespace {

constexpr std::array kPresets{"gradient-bump", "flux-tube",  "divergence-free", "random",
                              "point-charge",  "gaussian-charge", "radial-blob", "dipole-e",
                              "dipole-b"};

}  // namespace

void require_known_preset(const std::string& name) {
  for (const char* p : kPresets)
    if (name == p) return;
  throw UsageError("unknown preset '" + name + "'");
}

VectorField3 sample_preset(const std::string& name, const Grid3& grid, const PresetParams& p) {
  require_known_preset(name);
  const double w = p.width;
  if (name == "gradient-bump") {
    presets::GaussianBump bump{1.0, w, {}};
    return VectorField3::sample(grid, [&](const Vec3& x) { return bump.gradient(x); });
  }
  if (name == "flux-tube" || name == "divergence-free") {
    presets::FluxRing ring{1.0, w};
    return VectorField3::sample(grid, [&](const Vec3& x) { return ring.B(x); });
  }
  if (name == "random") {
    const auto field = presets::RandomBumpField::make(p.seed, 5, 0.8 * w, w);
    return VectorField3::sample(grid, [&](const Vec3& x) { return field.value(x); });
  }
  if (name == "point-charge") {
    presets::ChargeBall ball{kFourPi * p.units.eps0, 2.0 * grid.min_spacing(), {}};
    return VectorField3::sample(grid, [&](const Vec3& x) { return ball.E(x, p.units); });
  }
  if (name == "gaussian-charge") {
    presets::GaussianCharge cloud{1.0, w};
    return VectorField3::sample(grid, [&](const Vec3& x) { return cloud.E(x, p.units); });
  }
  if (name == "radial-blob") {
    presets::RadialBlob blob{1.0, w};
    return VectorField3::sample(grid, [&](const Vec3& x) { return blob.B(x); });
  }
  presets::DipolePulse pulse{1.0, w, p.units.c};
  if (name == "dipole-e") return VectorField3::sample(grid, [&](const Vec3& x) { return pulse.E(x, p.time); });
  return VectorField3::sample(grid, [&](const Vec3& x) { return pulse.B(x, p.time); });
}

VectorField3 read_vector_field_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open field file " + path);
  return read_vector_field(in);
}

}  // namespace coulomb::cli

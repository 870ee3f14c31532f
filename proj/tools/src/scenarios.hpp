#pragma once

#include <cstdint>
#include <string>

#include "coulomb/constants.hpp"
#include "coulomb/grid.hpp"

namespace coulomb::cli {

/// Named analytic inputs shared by the subcommands.
///   gradient-bump    grad of a Gaussian bump (pure longitudinal)
///   flux-tube        Gaussian flux ring about z (pure transverse, B input)
///   divergence-free  alias of flux-tube
///   random           seeded sum of Gaussian vector bumps
///   point-charge     point charge q = 4 pi eps0 with a two-cell core
///   gaussian-charge  unit Gaussian charge cloud
///   radial-blob      deliberately non-solenoidal B
///   dipole-e/dipole-b  dipole radiation pulse at time t
struct PresetParams {
  double width = 1.0;
  double time = 0.5;
  std::uint64_t seed = 1;
  Constants units;
};

VectorField3 sample_preset(const std::string& name, const Grid3& grid, const PresetParams& p);

/// Throws UsageError when the name is unknown.
void require_known_preset(const std::string& name);

VectorField3 read_vector_field_file(const std::string& path);

}  // namespace coulomb::cli

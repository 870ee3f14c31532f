#pragma once

#include "coulomb/grid.hpp"

namespace coulomb {

/// Integral of 1/|r| over a single cell centered on the origin with the
/// given edge lengths. Evaluated once per spacing by numerical quadrature
/// and cached. For a unit cube it is 2.3800773640 (units of length^2).
double self_cell_integral(const Spacing3& spacing);

// Direct O(N^2) Newtonian convolution on the source's own grid:
//
//   out(r_i) = sum_j F(r_j) vol / (4 pi |r_i - r_j|)
//
// with the i == j term replaced by the exact cell average of the kernel, so
// the result is finite everywhere. Vector fields are convolved per component.
// No periodic images: the source is taken to vanish outside the grid.

ScalarField newtonian_convolve(const ScalarField& source);
VectorField3 newtonian_convolve(const VectorField3& source);

/// Same, evaluated on `target`; throws GridError unless it equals the source grid.
ScalarField newtonian_convolve(const ScalarField& source, const Grid3& target);
VectorField3 newtonian_convolve(const VectorField3& source, const Grid3& target);

// Derivatives of the Newtonian potential taken on the kernel,
//   d_a N[F](r_i) = -sum_j F(r_j) vol (r_i - r_j)_a / (4 pi |r_i - r_j|^3),
// with the singular cell contributing zero (the kernel gradient averages to
// zero over a centered cell). `pad` evaluates on source.grid().padded(pad);
// the source is zero there, so the padded values are the same integral.

VectorField3 newtonian_gradient_convolve(const ScalarField& source, const Index3& pad = {});

/// curl N[F].
VectorField3 newtonian_curl_convolve(const VectorField3& source, const Index3& pad = {});

/// div N[F] on the source grid.
ScalarField newtonian_divergence_convolve(const VectorField3& source);

/// Newtonian potential of a sampled source at an arbitrary point.
double newtonian_potential_at(const ScalarField& source, const Vec3& point);

}  // namespace coulomb

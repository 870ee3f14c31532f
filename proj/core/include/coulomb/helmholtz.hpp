#pragma once

#include "coulomb/grid.hpp"

namespace coulomb {

/// Split of a localized vector field into curl-free and divergence-free parts.
struct Decomposition {
  VectorField3 longitudinal;
  VectorField3 transverse;
  /// Input support reaches the outer two cell layers; the infinite-domain
  /// formulas then pick up truncation error. Informational, not fatal.
  bool support_touches_boundary = false;
};

/// Relative size of the boundary band above which support is flagged.
inline constexpr double kBoundarySupportThreshold = 1e-2;

/// longitudinal = -grad N[div F],  transverse = curl N[curl F],
/// where N is the Newtonian convolution.
Decomposition decompose(const VectorField3& F);

/// Gauge function chi = N[div A] that moves A into the Coulomb gauge:
/// grad chi equals minus the longitudinal part of A, so A + grad chi is
/// divergence-free to truncation order. Not renormalized; only its gradient
/// is meaningful.
ScalarField coulomb_gauge_function(const VectorField3& A);

/// A + grad chi with chi from coulomb_gauge_function.
VectorField3 to_coulomb_gauge(const VectorField3& A);

}  // namespace coulomb

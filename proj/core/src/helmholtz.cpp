#include "coulomb/helmholtz.hpp"

#include "coulomb/convolution.hpp"
#include "coulomb/diffops.hpp"

namespace coulomb {

Decomposition decompose(const VectorField3& F) {
  const bool flagged = boundary_band_ratio(F) > kBoundarySupportThreshold;
  VectorField3 longitudinal = gradient(newtonian_convolve(divergence(F)));
  longitudinal *= -1.0;
  VectorField3 transverse = curl(newtonian_convolve(curl(F)));
  return {std::move(longitudinal), std::move(transverse), flagged};
}

ScalarField coulomb_gauge_function(const VectorField3& A) {
  return newtonian_convolve(divergence(A));
}

VectorField3 to_coulomb_gauge(const VectorField3& A) {
  return A + gradient(coulomb_gauge_function(A));
}

}  // namespace coulomb

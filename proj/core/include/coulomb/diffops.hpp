#pragma once

#include <cstddef>

#include "coulomb/grid.hpp"

namespace coulomb {

// Second-order finite differences on cell-centered grids: central in the
// interior, one-sided three-point at the two boundary layers. Every operator
// needs at least 3 cells per axis and throws DimensionError otherwise.

ScalarField partial(const ScalarField& f, std::size_t axis);
VectorField3 gradient(const ScalarField& f);
ScalarField divergence(const VectorField3& F);
VectorField3 curl(const VectorField3& F);

}  // namespace coulomb

#include "coulomb/diffops.hpp"

#include "coulomb/error.hpp"

namespace coulomb {
namespace {

void require_stencil(const Grid3& g) {
  for (std::size_t a = 0; a < 3; ++a) {
    if (g.dims()[a] < 3) throw DimensionError("finite differences need at least 3 cells per axis");
  }
}

// Differentiates the scalar sequence read by `get` along `axis` and hands
// each result to `put`.
template <class Get, class Put>
void differentiate(const Grid3& g, std::size_t axis, Get get, Put put) {
  const auto& n = g.dims();
  const double inv2h = 0.5 / g.spacing()[axis];
  const std::size_t len = n[axis];
  const std::size_t stride = axis == 0 ? 1 : (axis == 1 ? n[0] : n[0] * n[1]);

  for (std::size_t k = 0; k < n[2]; ++k)
    for (std::size_t j = 0; j < n[1]; ++j)
      for (std::size_t i = 0; i < n[0]; ++i) {
        const Index3 ijk{i, j, k};
        const std::size_t p = ijk[axis];
        const std::size_t idx = g.index(i, j, k);
        double d;
        if (p == 0) {
          d = (-3.0 * get(idx) + 4.0 * get(idx + stride) - get(idx + 2 * stride)) * inv2h;
        } else if (p + 1 == len) {
          d = (3.0 * get(idx) - 4.0 * get(idx - stride) + get(idx - 2 * stride)) * inv2h;
        } else {
          d = (get(idx + stride) - get(idx - stride)) * inv2h;
        }
        put(idx, d);
      }
}

}  // namespace

ScalarField partial(const ScalarField& f, std::size_t axis) {
  require_stencil(f.grid());
  ScalarField out(f.grid());
  differentiate(
      f.grid(), axis, [&](std::size_t i) { return f[i]; },
      [&](std::size_t i, double d) { out[i] = d; });
  return out;
}

VectorField3 gradient(const ScalarField& f) {
  require_stencil(f.grid());
  VectorField3 out(f.grid());
  for (std::size_t a = 0; a < 3; ++a) {
    differentiate(
        f.grid(), a, [&](std::size_t i) { return f[i]; },
        [&](std::size_t i, double d) { out[i][a] = d; });
  }
  return out;
}

ScalarField divergence(const VectorField3& F) {
  require_stencil(F.grid());
  ScalarField out(F.grid());
  for (std::size_t a = 0; a < 3; ++a) {
    differentiate(
        F.grid(), a, [&](std::size_t i) { return F[i][a]; },
        [&](std::size_t i, double d) { out[i] += d; });
  }
  return out;
}

VectorField3 curl(const VectorField3& F) {
  require_stencil(F.grid());
  VectorField3 out(F.grid());
  // (curl F)_c = d_a F_b - d_b F_a for cyclic (a, b, c).
  for (std::size_t c = 0; c < 3; ++c) {
    const std::size_t a = (c + 1) % 3;
    const std::size_t b = (c + 2) % 3;
    differentiate(
        F.grid(), a, [&](std::size_t i) { return F[i][b]; },
        [&](std::size_t i, double d) { out[i][c] += d; });
    differentiate(
        F.grid(), b, [&](std::size_t i) { return F[i][a]; },
        [&](std::size_t i, double d) { out[i][c] -= d; });
  }
  return out;
}

}  // namespace coulomb

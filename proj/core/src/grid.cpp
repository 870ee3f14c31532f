#include "coulomb/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "coulomb/error.hpp"

namespace coulomb {

Grid3::Grid3(const Vec3& origin, const Spacing3& spacing, const Index3& dims,
             std::size_t max_cells)
    : origin_(origin), spacing_(spacing), dims_(dims) {
  if (!is_finite(origin)) throw ParameterError("grid origin must be finite");
  for (std::size_t a = 0; a < 3; ++a) {
    if (!(spacing[a] > 0.0) || !std::isfinite(spacing[a])) {
      throw ParameterError("grid spacing must be positive and finite on every axis");
    }
    if (dims[a] < 2) throw DimensionError("grid needs at least 2 cells per axis");
  }
  // Overflow-safe product check against the cap.
  std::size_t cells = 1;
  for (std::size_t a = 0; a < 3; ++a) {
    if (dims[a] > max_cells / cells) {
      throw SizeError("grid exceeds the configured cell cap of " + std::to_string(max_cells));
    }
    cells *= dims[a];
  }
}

Grid3 Grid3::padded(const Index3& cells) const {
  Vec3 o = origin_;
  Index3 d = dims_;
  for (std::size_t a = 0; a < 3; ++a) {
    o[a] -= static_cast<double>(cells[a]) * spacing_[a];
    d[a] += 2 * cells[a];
  }
  return Grid3(o, spacing_, d);
}

Grid3 Grid3::cube(std::size_t n, double half_width) {
  if (!(half_width > 0.0)) throw ParameterError("cube half width must be positive");
  const double h = 2.0 * half_width / static_cast<double>(n == 0 ? 1 : n);
  return Grid3({-half_width, -half_width, -half_width}, {h, h, h}, {n, n, n});
}

Grid3 Grid3::centered(const Index3& dims, const Spacing3& spacing) {
  const Vec3 origin{-0.5 * static_cast<double>(dims[0]) * spacing[0],
                    -0.5 * static_cast<double>(dims[1]) * spacing[1],
                    -0.5 * static_cast<double>(dims[2]) * spacing[2]};
  return Grid3(origin, spacing, dims);
}

double Grid3::min_spacing() const {
  return std::min({spacing_[0], spacing_[1], spacing_[2]});
}

Index3 Grid3::unravel(std::size_t idx) const {
  const std::size_t i = idx % dims_[0];
  const std::size_t rest = idx / dims_[0];
  return {i, rest % dims_[1], rest / dims_[1]};
}

Vec3 Grid3::upper_corner() const {
  return {origin_.x + static_cast<double>(dims_[0]) * spacing_[0],
          origin_.y + static_cast<double>(dims_[1]) * spacing_[1],
          origin_.z + static_cast<double>(dims_[2]) * spacing_[2]};
}

bool Grid3::in_sample_hull(const Vec3& p) const {
  for (std::size_t a = 0; a < 3; ++a) {
    const double lo = origin_[a] + 0.5 * spacing_[a];
    const double hi = origin_[a] + (static_cast<double>(dims_[a]) - 0.5) * spacing_[a];
    // Small slack so points generated on the hull edge are accepted.
    const double slack = 1e-12 * spacing_[a];
    if (!(p[a] >= lo - slack && p[a] <= hi + slack)) return false;
  }
  return true;
}

bool Grid3::is_interior(std::size_t i, std::size_t j, std::size_t k, std::size_t margin) const {
  const Index3 ijk{i, j, k};
  for (std::size_t a = 0; a < 3; ++a) {
    if (ijk[a] < margin || ijk[a] + margin >= dims_[a]) return false;
  }
  return true;
}

void require_same_grid(const Grid3& a, const Grid3& b, const char* what) {
  if (!(a == b)) throw GridError(std::string("grid mismatch: ") + what);
}

// ---------------------------------------------------------------- ScalarField

ScalarField::ScalarField(const Grid3& grid) : grid_(grid), values_(grid.size(), 0.0) {}

ScalarField::ScalarField(const Grid3& grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw GridError("scalar field value count does not match grid cell count");
  }
  require_finite("scalar field");
}

ScalarField ScalarField::sample(const Grid3& grid, const std::function<double(const Vec3&)>& fn) {
  ScalarField out(grid);
  for (std::size_t idx = 0; idx < grid.size(); ++idx) out.values_[idx] = fn(grid.center(idx));
  out.require_finite("sampled scalar field");
  return out;
}

void ScalarField::require_finite(const char* what) const {
  for (double v : values_) {
    if (!std::isfinite(v)) throw EvaluationError(std::string(what) + " contains non-finite values");
  }
}

ScalarField& ScalarField::operator+=(const ScalarField& o) {
  require_same_grid(grid_, o.grid_, "scalar addition");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

ScalarField& ScalarField::operator-=(const ScalarField& o) {
  require_same_grid(grid_, o.grid_, "scalar subtraction");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
  return *this;
}

ScalarField& ScalarField::operator*=(double s) {
  for (double& v : values_) v *= s;
  return *this;
}

ScalarField operator+(ScalarField a, const ScalarField& b) { return a += b; }
ScalarField operator-(ScalarField a, const ScalarField& b) { return a -= b; }
ScalarField operator*(double s, ScalarField a) { return a *= s; }

// ---------------------------------------------------------------- VectorField3

VectorField3::VectorField3(const Grid3& grid) : grid_(grid), values_(grid.size()) {}

VectorField3::VectorField3(const Grid3& grid, std::vector<Vec3> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw GridError("vector field value count does not match grid cell count");
  }
  require_finite("vector field");
}

VectorField3::VectorField3(const ScalarField& x, const ScalarField& y, const ScalarField& z)
    : grid_(x.grid()), values_(x.size()) {
  require_same_grid(x.grid(), y.grid(), "vector components");
  require_same_grid(x.grid(), z.grid(), "vector components");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] = {x[i], y[i], z[i]};
}

VectorField3 VectorField3::sample(const Grid3& grid,
                                  const std::function<Vec3(const Vec3&)>& fn) {
  VectorField3 out(grid);
  for (std::size_t idx = 0; idx < grid.size(); ++idx) out.values_[idx] = fn(grid.center(idx));
  out.require_finite("sampled vector field");
  return out;
}

ScalarField VectorField3::component(std::size_t axis) const {
  ScalarField out(grid_);
  for (std::size_t i = 0; i < values_.size(); ++i) out[i] = values_[i][axis];
  return out;
}

void VectorField3::set_component(std::size_t axis, const ScalarField& f) {
  require_same_grid(grid_, f.grid(), "set_component");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i][axis] = f[i];
}

bool VectorField3::component_is_zero(std::size_t axis) const {
  return std::all_of(values_.begin(), values_.end(),
                     [axis](const Vec3& v) { return v[axis] == 0.0; });
}

void VectorField3::require_finite(const char* what) const {
  for (const auto& v : values_) {
    if (!is_finite(v)) throw EvaluationError(std::string(what) + " contains non-finite values");
  }
}

VectorField3& VectorField3::operator+=(const VectorField3& o) {
  require_same_grid(grid_, o.grid_, "vector addition");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

VectorField3& VectorField3::operator-=(const VectorField3& o) {
  require_same_grid(grid_, o.grid_, "vector subtraction");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
  return *this;
}

VectorField3& VectorField3::operator*=(double s) {
  for (auto& v : values_) v *= s;
  return *this;
}

VectorField3 operator+(VectorField3 a, const VectorField3& b) { return a += b; }
VectorField3 operator-(VectorField3 a, const VectorField3& b) { return a -= b; }
VectorField3 operator*(double s, VectorField3 a) { return a *= s; }

// ---------------------------------------------------------------- reductions

double max_abs(const ScalarField& f, std::size_t margin) {
  const auto& g = f.grid();
  const auto& n = g.dims();
  double m = 0.0;
  for (std::size_t k = 0; k < n[2]; ++k)
    for (std::size_t j = 0; j < n[1]; ++j)
      for (std::size_t i = 0; i < n[0]; ++i)
        if (g.is_interior(i, j, k, margin)) m = std::max(m, std::abs(f(i, j, k)));
  return m;
}

double max_norm(const VectorField3& f, std::size_t margin) {
  const auto& g = f.grid();
  const auto& n = g.dims();
  double m = 0.0;
  for (std::size_t k = 0; k < n[2]; ++k)
    for (std::size_t j = 0; j < n[1]; ++j)
      for (std::size_t i = 0; i < n[0]; ++i)
        if (g.is_interior(i, j, k, margin)) m = std::max(m, norm(f(i, j, k)));
  return m;
}

double volume_integral_squared(const VectorField3& f) {
  double s = 0.0;
  for (const auto& v : f.values()) s += dot(v, v);
  return s * f.grid().cell_volume();
}

double volume_integral(const ScalarField& f) {
  double s = 0.0;
  for (double v : f.values()) s += v;
  return s * f.grid().cell_volume();
}

double volume_inner(const VectorField3& f, const VectorField3& g) {
  require_same_grid(f.grid(), g.grid(), "volume_inner");
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) s += dot(f[i], g[i]);
  return s * f.grid().cell_volume();
}

double boundary_band_ratio(const VectorField3& f, std::size_t band) {
  const auto& g = f.grid();
  const auto& n = g.dims();
  double global = 0.0;
  double edge = 0.0;
  for (std::size_t k = 0; k < n[2]; ++k)
    for (std::size_t j = 0; j < n[1]; ++j)
      for (std::size_t i = 0; i < n[0]; ++i) {
        const double v = norm(f(i, j, k));
        global = std::max(global, v);
        if (!g.is_interior(i, j, k, band)) edge = std::max(edge, v);
      }
  return global > 0.0 ? edge / global : 0.0;
}

namespace {

struct Stencil {
  Index3 base;
  Spacing3 frac;
};

Stencil locate(const Grid3& g, const Vec3& p) {
  if (!g.in_sample_hull(p)) throw BoundsError("point lies outside the sampled grid region");
  Stencil s{};
  for (std::size_t a = 0; a < 3; ++a) {
    const double u = (p[a] - g.origin()[a]) / g.spacing()[a] - 0.5;
    const double maxbase = static_cast<double>(g.dims()[a] - 2);
    const double fl = std::clamp(std::floor(u), 0.0, maxbase);
    s.base[a] = static_cast<std::size_t>(fl);
    s.frac[a] = std::clamp(u - fl, 0.0, 1.0);
  }
  return s;
}

template <class Field, class T>
T trilinear(const Field& f, const Stencil& s, T zero) {
  T acc = zero;
  for (std::size_t c = 0; c < 8; ++c) {
    const std::size_t di = c & 1U, dj = (c >> 1) & 1U, dk = (c >> 2) & 1U;
    const double w = (di ? s.frac[0] : 1.0 - s.frac[0]) * (dj ? s.frac[1] : 1.0 - s.frac[1]) *
                     (dk ? s.frac[2] : 1.0 - s.frac[2]);
    if (w == 0.0) continue;
    acc += f(s.base[0] + di, s.base[1] + dj, s.base[2] + dk) * w;
  }
  return acc;
}

}  // namespace

Vec3 interpolate(const VectorField3& f, const Vec3& p) {
  return trilinear(f, locate(f.grid(), p), Vec3{});
}

double interpolate(const ScalarField& f, const Vec3& p) {
  return trilinear(f, locate(f.grid(), p), 0.0);
}

}  // namespace coulomb

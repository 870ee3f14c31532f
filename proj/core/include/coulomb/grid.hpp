#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

#include "coulomb/vec3.hpp"

namespace coulomb {

using Index3 = std::array<std::size_t, 3>;
using Spacing3 = std::array<double, 3>;

/// Uniform cell-centered Cartesian grid. Cell (i,j,k) has its center at
/// origin + (i + 1/2, j + 1/2, k + 1/2) * spacing; linear storage is
/// x-fastest.
class Grid3 {
 public:
  static constexpr std::size_t kDefaultMaxCells = std::size_t{1} << 24;

  Grid3(const Vec3& origin, const Spacing3& spacing, const Index3& dims,
        std::size_t max_cells = kDefaultMaxCells);

  /// n^3 cells covering [-half_width, half_width]^3.
  static Grid3 cube(std::size_t n, double half_width);

  /// Box centered on the origin with the given per-axis cell counts and spacing.
  static Grid3 centered(const Index3& dims, const Spacing3& spacing);

  /// Same lattice extended by `cells` on both sides of each axis.
  Grid3 padded(const Index3& cells) const;

  const Vec3& origin() const { return origin_; }
  const Spacing3& spacing() const { return spacing_; }
  const Index3& dims() const { return dims_; }
  std::size_t size() const { return dims_[0] * dims_[1] * dims_[2]; }
  double cell_volume() const { return spacing_[0] * spacing_[1] * spacing_[2]; }
  double min_spacing() const;

  std::size_t index(std::size_t i, std::size_t j, std::size_t k) const {
    return i + dims_[0] * (j + dims_[1] * k);
  }
  Index3 unravel(std::size_t idx) const;

  Vec3 center(std::size_t i, std::size_t j, std::size_t k) const {
    return {origin_.x + (static_cast<double>(i) + 0.5) * spacing_[0],
            origin_.y + (static_cast<double>(j) + 0.5) * spacing_[1],
            origin_.z + (static_cast<double>(k) + 0.5) * spacing_[2]};
  }
  Vec3 center(std::size_t idx) const {
    const auto ijk = unravel(idx);
    return center(ijk[0], ijk[1], ijk[2]);
  }

  /// Outer faces of the box spanned by the cells.
  Vec3 lower_corner() const { return origin_; }
  Vec3 upper_corner() const;

  /// Cell-center hull: the region where trilinear interpolation is defined.
  bool in_sample_hull(const Vec3& p) const;

  /// True when every index is at least `margin` cells away from each face.
  bool is_interior(std::size_t i, std::size_t j, std::size_t k, std::size_t margin) const;

  friend bool operator==(const Grid3& a, const Grid3& b) {
    return a.origin_ == b.origin_ && a.spacing_ == b.spacing_ && a.dims_ == b.dims_;
  }

 private:
  Vec3 origin_;
  Spacing3 spacing_;
  Index3 dims_;
};

/// Throws GridError unless both grids are identical.
void require_same_grid(const Grid3& a, const Grid3& b, const char* what);

class ScalarField {
 public:
  explicit ScalarField(const Grid3& grid);
  ScalarField(const Grid3& grid, std::vector<double> values);

  static ScalarField sample(const Grid3& grid, const std::function<double(const Vec3&)>& fn);

  const Grid3& grid() const { return grid_; }
  std::size_t size() const { return values_.size(); }

  double operator[](std::size_t idx) const { return values_[idx]; }
  double& operator[](std::size_t idx) { return values_[idx]; }
  double operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return values_[grid_.index(i, j, k)];
  }
  double& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return values_[grid_.index(i, j, k)];
  }

  const std::vector<double>& values() const { return values_; }
  std::vector<double>& values() { return values_; }

  /// Throws EvaluationError if any sample is NaN or infinite.
  void require_finite(const char* what) const;

  ScalarField& operator+=(const ScalarField& o);
  ScalarField& operator-=(const ScalarField& o);
  ScalarField& operator*=(double s);

 private:
  Grid3 grid_;
  std::vector<double> values_;
};

ScalarField operator+(ScalarField a, const ScalarField& b);
ScalarField operator-(ScalarField a, const ScalarField& b);
ScalarField operator*(double s, ScalarField a);

class VectorField3 {
 public:
  explicit VectorField3(const Grid3& grid);
  VectorField3(const Grid3& grid, std::vector<Vec3> values);
  VectorField3(const ScalarField& x, const ScalarField& y, const ScalarField& z);

  static VectorField3 sample(const Grid3& grid, const std::function<Vec3(const Vec3&)>& fn);

  const Grid3& grid() const { return grid_; }
  std::size_t size() const { return values_.size(); }

  const Vec3& operator[](std::size_t idx) const { return values_[idx]; }
  Vec3& operator[](std::size_t idx) { return values_[idx]; }
  const Vec3& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return values_[grid_.index(i, j, k)];
  }
  Vec3& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return values_[grid_.index(i, j, k)];
  }

  const std::vector<Vec3>& values() const { return values_; }
  std::vector<Vec3>& values() { return values_; }

  ScalarField component(std::size_t axis) const;
  void set_component(std::size_t axis, const ScalarField& f);
  /// True when the given component is exactly zero at every cell.
  bool component_is_zero(std::size_t axis) const;

  void require_finite(const char* what) const;

  VectorField3& operator+=(const VectorField3& o);
  VectorField3& operator-=(const VectorField3& o);
  VectorField3& operator*=(double s);

 private:
  Grid3 grid_;
  std::vector<Vec3> values_;
};

VectorField3 operator+(VectorField3 a, const VectorField3& b);
VectorField3 operator-(VectorField3 a, const VectorField3& b);
VectorField3 operator*(double s, VectorField3 a);

// Norms and sums. `margin` restricts to cells at least that many cells from
// every face; margin 0 is the full grid.
double max_abs(const ScalarField& f, std::size_t margin = 0);
double max_norm(const VectorField3& f, std::size_t margin = 0);
/// sum |F|^2 * cell volume over the whole grid.
double volume_integral_squared(const VectorField3& f);
/// sum f * cell volume.
double volume_integral(const ScalarField& f);
/// sum F.G * cell volume.
double volume_inner(const VectorField3& f, const VectorField3& g);

/// Largest value in the `band` outermost cell layers relative to the global
/// maximum; used to flag fields whose support reaches the boundary.
double boundary_band_ratio(const VectorField3& f, std::size_t band = 2);

/// Trilinear interpolation between cell centers. Throws BoundsError outside
/// the cell-center hull.
Vec3 interpolate(const VectorField3& f, const Vec3& p);
double interpolate(const ScalarField& f, const Vec3& p);

}  // namespace coulomb

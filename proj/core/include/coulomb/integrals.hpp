#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "coulomb/grid.hpp"
#include "coulomb/vec3.hpp"

namespace coulomb {

using VectorFunction = std::function<Vec3(const Vec3&)>;
using ScalarFunction = std::function<double(const Vec3&)>;

/// Ordered polyline. A closed path stores each vertex once; the closing
/// segment from the last point back to the first is implied.
class PathPolyline {
 public:
  PathPolyline(std::vector<Vec3> points, bool closed);

  static PathPolyline open(std::vector<Vec3> points) { return {std::move(points), false}; }
  static PathPolyline loop(std::vector<Vec3> points) { return {std::move(points), true}; }

  /// Regular polygon approximating a circle of `radius` about `center` in
  /// the plane z = center.z, traversed counterclockwise about +z.
  static PathPolyline circle(const Vec3& center, double radius, std::size_t segments);

  /// Arc of a circle about `center` (plane z = center.z) from angle `from`
  /// to angle `to`, both in radians.
  static PathPolyline arc(const Vec3& center, double radius, double from, double to,
                          std::size_t segments);

  const std::vector<Vec3>& points() const { return points_; }
  bool closed() const { return closed_; }
  std::size_t segment_count() const;
  /// Endpoints of segment s (the closing segment is the last one).
  std::pair<Vec3, Vec3> segment(std::size_t s) const;

  /// Concatenation: `next` must start where this path ends.
  PathPolyline then(const PathPolyline& next) const;

 private:
  std::vector<Vec3> points_;
  bool closed_;
};

struct LineQuadrature {
  std::size_t order = 8;         // Gauss-Legendre points per sub-segment, >= 4
  std::size_t subdivisions = 4;  // equal sub-segments per polyline segment, >= 1
};

/// Composite Gauss-Legendre line integral of an analytic field.
double line_integral(const VectorFunction& field, const PathPolyline& path,
                     const LineQuadrature& quad = {});

/// Line integral of a sampled field, trilinearly interpolated. Throws
/// BoundsError when the path leaves the cell-center hull.
double line_integral(const VectorField3& field, const PathPolyline& path,
                     const LineQuadrature& quad = {});

struct SphereQuadrature {
  std::size_t polar_order = 48;    // Gauss-Legendre order in cos(theta)
  std::size_t azimuth_count = 96;  // uniform points in phi
};

/// Flux integral over the sphere of `radius` about `center`:
/// sum over the surface of (F . n) * weight dS, n the outward normal.
double sphere_surface_integral(const VectorFunction& field, double radius,
                               const ScalarFunction& weight, const SphereQuadrature& quad = {},
                               const Vec3& center = {});

}  // namespace coulomb

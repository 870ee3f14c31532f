#include "coulomb/integrals.hpp"

#include <cmath>
#include <string>

#include "coulomb/constants.hpp"
#include "coulomb/error.hpp"
#include "coulomb/quadrature.hpp"

namespace coulomb {

PathPolyline::PathPolyline(std::vector<Vec3> points, bool closed)
    : points_(std::move(points)), closed_(closed) {
  if (points_.size() < 2) throw ParameterError("a path needs at least two points");
  for (const auto& p : points_) {
    if (!is_finite(p)) throw ParameterError("path points must be finite");
  }
  if (closed_ && points_.front() == points_.back()) {
    throw ParameterError("closed paths must not repeat the first point at the end");
  }
}

PathPolyline PathPolyline::circle(const Vec3& center, double radius, std::size_t segments) {
  if (segments < 3) throw ParameterError("a circle needs at least 3 segments");
  if (!(radius > 0.0)) throw ParameterError("circle radius must be positive");
  std::vector<Vec3> pts;
  pts.reserve(segments);
  for (std::size_t s = 0; s < segments; ++s) {
    const double t = 2.0 * kPi * static_cast<double>(s) / static_cast<double>(segments);
    pts.push_back({center.x + radius * std::cos(t), center.y + radius * std::sin(t), center.z});
  }
  return loop(std::move(pts));
}

PathPolyline PathPolyline::arc(const Vec3& center, double radius, double from, double to,
                               std::size_t segments) {
  if (segments < 1) throw ParameterError("an arc needs at least 1 segment");
  if (!(radius > 0.0)) throw ParameterError("arc radius must be positive");
  std::vector<Vec3> pts;
  pts.reserve(segments + 1);
  for (std::size_t s = 0; s <= segments; ++s) {
    const double t = from + (to - from) * static_cast<double>(s) / static_cast<double>(segments);
    pts.push_back({center.x + radius * std::cos(t), center.y + radius * std::sin(t), center.z});
  }
  return open(std::move(pts));
}

std::size_t PathPolyline::segment_count() const {
  return closed_ ? points_.size() : points_.size() - 1;
}

std::pair<Vec3, Vec3> PathPolyline::segment(std::size_t s) const {
  const Vec3& a = points_[s];
  const Vec3& b = (s + 1 == points_.size()) ? points_.front() : points_[s + 1];
  return {a, b};
}

PathPolyline PathPolyline::then(const PathPolyline& next) const {
  if (closed_ || next.closed_) throw ParameterError("only open paths can be concatenated");
  if (norm(points_.back() - next.points_.front()) > 1e-12 * (1.0 + norm(points_.back()))) {
    throw ParameterError("concatenated path must start where the first one ends");
  }
  std::vector<Vec3> pts = points_;
  pts.insert(pts.end(), next.points_.begin() + 1, next.points_.end());
  return open(std::move(pts));
}

namespace {

template <class Eval>
double integrate_path(const PathPolyline& path, const LineQuadrature& quad, Eval eval) {
  if (quad.order < 4) throw ParameterError("line quadrature order must be at least 4");
  if (quad.subdivisions < 1) throw ParameterError("segment subdivision count must be at least 1");
  const auto& rule = gauss_legendre(quad.order);
  const double nsub = static_cast<double>(quad.subdivisions);
  double total = 0.0;
  for (std::size_t s = 0; s < path.segment_count(); ++s) {
    const auto [a, b] = path.segment(s);
    const Vec3 d = b - a;
    if (d == Vec3{}) continue;  // zero-length segment contributes nothing
    double seg = 0.0;
    for (std::size_t p = 0; p < quad.subdivisions; ++p) {
      const double t0 = static_cast<double>(p) / nsub;
      double acc = 0.0;
      for (std::size_t i = 0; i < rule.order(); ++i) {
        const double t = t0 + (0.5 + 0.5 * rule.nodes[i]) / nsub;
        acc += rule.weights[i] * dot(eval(a + d * t), d);
      }
      seg += acc * 0.5 / nsub;
    }
    total += seg;
  }
  return total;
}

}  // namespace

double line_integral(const VectorFunction& field, const PathPolyline& path,
                     const LineQuadrature& quad) {
  return integrate_path(path, quad, [&](const Vec3& p) {
    const Vec3 v = field(p);
    if (!is_finite(v)) throw EvaluationError("field is not finite on the path");
    return v;
  });
}

double line_integral(const VectorField3& field, const PathPolyline& path,
                     const LineQuadrature& quad) {
  // Straight segments inside a convex box: checking vertices is sufficient.
  for (const auto& p : path.points()) {
    if (!field.grid().in_sample_hull(p)) throw BoundsError("path leaves the sampled grid region");
  }
  return integrate_path(path, quad, [&](const Vec3& p) { return interpolate(field, p); });
}

double sphere_surface_integral(const VectorFunction& field, double radius,
                               const ScalarFunction& weight, const SphereQuadrature& quad,
                               const Vec3& center) {
  if (!(radius > 0.0)) throw DomainError("sphere radius must be positive");
  if (quad.azimuth_count < 1) throw ParameterError("azimuth count must be at least 1");
  const auto& rule = gauss_legendre(quad.polar_order);
  const double dphi = 2.0 * kPi / static_cast<double>(quad.azimuth_count);
  const double r2 = radius * radius;
  double total = 0.0;
  for (std::size_t i = 0; i < rule.order(); ++i) {
    const double mu = rule.nodes[i];
    const double s = std::sqrt(std::max(0.0, 1.0 - mu * mu));
    double ring = 0.0;
    for (std::size_t m = 0; m < quad.azimuth_count; ++m) {
      const double phi = dphi * (static_cast<double>(m) + 0.5);
      const Vec3 n{s * std::cos(phi), s * std::sin(phi), mu};
      const Vec3 p = center + n * radius;
      const Vec3 f = field(p);
      const double w = weight(p);
      if (!is_finite(f) || !std::isfinite(w)) {
        throw EvaluationError("non-finite field value on the integration sphere");
      }
      ring += dot(f, n) * w;
    }
    total += rule.weights[i] * ring * dphi;
  }
  return total * r2;
}

}  // namespace coulomb

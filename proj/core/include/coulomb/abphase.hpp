#pragma once

#include <cstdint>
#include <vector>

#include "coulomb/integrals.hpp"

namespace coulomb {

/// Multivalued gauge function of an ideal flux line on the z axis,
/// g = flux (n + theta / 2 pi) with theta in [0, 2 pi) and n the winding number.
class PureGaugeField {
 public:
  explicit PureGaugeField(double flux) : flux_(flux) {}

  double flux() const { return flux_; }
  /// g for branch angle theta in [0, 2 pi) and winding number n.
  double value(double theta, long winding) const;
  /// Single-branch value (n = 0) at a point; discontinuous across theta = 0.
  double branch_value(const Vec3& p) const;
  /// grad g = flux / (2 pi rho) theta_hat, single-valued off the axis.
  Vec3 gradient(const Vec3& p) const;

 private:
  double flux_;
};

/// Total signed angle swept about the z axis along the path, accumulated
/// per segment (closing segment included for closed paths). Throws
/// SingularityError if the path touches the axis.
double winding_angle(const PathPolyline& path);

/// Phase (q / hbar) * delta g picked up along the path.
double path_phase(const PathPolyline& path, const PureGaugeField& gauge, double q, double hbar);

/// Unit half circles from A = (-1, 0, 0) to D = (1, 0, 0): through the top
/// (theta: pi -> 0) and through the bottom (theta: pi -> 2 pi).
PathPolyline upper_slit_path(std::size_t segments = 64);
PathPolyline lower_slit_path(std::size_t segments = 64);

/// Phase of the lower path minus the phase of the upper path; checked
/// against q flux / hbar and returned.
double two_slit_phase_difference(double flux, double q, double hbar);

struct GaugeLoopIntegral {
  double value = 0.0;
  /// Some segment's line integral disagrees with the change of chi across
  /// it: chi is not single-valued (or not smooth) along the path.
  bool multivalued = false;
};

/// Closed-path line integral of grad chi, with grad chi by sixth-order
/// central differences of the callable. Zero for smooth single-valued chi.
GaugeLoopIntegral gauge_addition_invariance(const PathPolyline& path, const ScalarFunction& chi,
                                            const LineQuadrature& quad = {16, 8});

/// Phase along a closed path in the potential grad g + grad chi.
double closed_loop_phase(const PathPolyline& path, const PureGaugeField& gauge,
                         const ScalarFunction& chi, double q, double hbar);

struct FringeGeometry {
  double slit_separation = 1.0;
  double wavelength = 1.0;
  double screen_distance = 1.0;

  /// Throws ParameterError unless all three are positive.
  void validate() const;
  /// Distance between neighboring maxima on the screen, lambda L / d.
  double fringe_spacing() const { return wavelength * screen_distance / slit_separation; }
};

/// Two equal slits in the Fraunhofer limit with the flux phase between them:
/// I(x) ~ cos^2(pi d x / (lambda L) + q flux / (2 hbar)), normalized to max 1.
std::vector<double> fringe_pattern(const FringeGeometry& geometry, const std::vector<double>& positions,
                                   double flux, double q, double hbar);

struct FringeScan {
  FringeGeometry geometry;
  std::vector<double> fluxes;
  std::vector<double> positions;
  std::vector<std::vector<double>> intensities;  // [flux][position], each row max 1
};

/// Rows of fringe_pattern over `fluxes`. With noise > 0, Gaussian noise of
/// that standard deviation (relative to the peak) is added from the given
/// seed, negative values clipped to zero, and rows renormalized.
FringeScan make_fringe_scan(const FringeGeometry& geometry, const std::vector<double>& fluxes,
                            const std::vector<double>& positions, double q, double hbar,
                            double noise = 0.0, std::uint64_t seed = 0);

/// Flux period of the fringe shift. Each row is fitted to
/// a + b cos(kx) + c sin(kx) to locate the fringe peak modulo the fringe
/// spacing; the unwrapped peak positions are then fitted linearly in flux.
/// Throws ResolutionError unless the scan covers >= 2 periods with >= 16
/// samples per period.
double flux_period(const FringeScan& scan);

}  // namespace coulomb

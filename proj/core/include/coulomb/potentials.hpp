#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coulomb/constants.hpp"
#include "coulomb/grid.hpp"

namespace coulomb {

struct PointCharge {
  Vec3 position;
  double charge = 0.0;
};

/// Warning flags attached to potentials computed from sampled fields.
struct PotentialDiagnostics {
  bool support_touches_boundary = false;
  bool non_solenoidal = false;
  bool singular_cell_skipped = false;
  /// max |div B| * h / max |B| over the interior, for B inputs.
  double divergence_ratio = 0.0;
  /// max |F| in the outer two layers / max |F|.
  double boundary_ratio = 0.0;

  bool any() const { return support_touches_boundary || non_solenoidal || singular_cell_skipped; }
  std::vector<std::string> messages() const;
};

template <class T>
struct Flagged {
  T value;
  PotentialDiagnostics diagnostics;
};

/// Solenoidality threshold on divergence_ratio above which B is flagged.
inline constexpr double kSolenoidalTolerance = 0.05;

/// How the field outside the grid is accounted for.
///
/// `none` evaluates the volume integral over the grid only, which assumes the
/// field vanishes outside. `boundary_flux` adds the surface term
/// sum_faces (E.n) dS / (4 pi |r - r_f|) that the truncated volume integral
/// drops, so fields with a net outward flux (isolated charges) reproduce the
/// potential of the charge inside the box.
enum class BoundaryClosure { none, boundary_flux };

/// phi = div N[E], with the divergence taken on the kernel.
Flagged<ScalarField> scalar_potential_from_E(const VectorField3& E,
                                             BoundaryClosure closure = BoundaryClosure::none);

/// phi = sum_i q_i / (4 pi eps0 |r - r_i|). A charge sitting exactly on a
/// cell center is skipped for that cell and flagged.
Flagged<ScalarField> scalar_potential_from_charges(std::span<const PointCharge> charges,
                                                   const Grid3& grid, const Constants& k = {});

/// A = curl N[B], with the curl taken on the kernel. Flags inputs whose
/// discrete divergence is not small.
Flagged<VectorField3> vector_potential_from_B(const VectorField3& B);

/// max |div B| * h_min / max |B| on cells at least one layer inside.
double divergence_ratio(const VectorField3& B);

/// The surface term used by BoundaryClosure::boundary_flux.
ScalarField boundary_flux_potential(const VectorField3& E);

/// Residuals of B = curl A and E = -grad phi - dA/dt for potentials built
/// from two field snapshots a time step apart.
struct DefiningRelationsReport {
  std::size_t margin = 0;
  double curl_residual_interior = 0.0;
  double curl_residual_full = 0.0;
  double time_residual_interior = 0.0;
  double time_residual_full = 0.0;
  double b_scale = 0.0;  // max |B| over both snapshots
  double e_scale = 0.0;  // max |E_mid|
  PotentialDiagnostics diagnostics;

  double curl_relative() const { return b_scale > 0.0 ? curl_residual_interior / b_scale : curl_residual_interior; }
  double time_relative() const { return e_scale > 0.0 ? time_residual_interior / e_scale : time_residual_interior; }
};

struct DefiningRelationsOptions {
  std::size_t margin = 2;
  BoundaryClosure closure = BoundaryClosure::none;
};

/// A at both times from B via the curl route, phi at the midpoint from
/// E_mid = (E_t + E_next) / 2, dA/dt by the two-point difference.
DefiningRelationsReport verify_defining_relations(const VectorField3& E_t, const VectorField3& B_t,
                                                  const VectorField3& E_next,
                                                  const VectorField3& B_next, double dt,
                                                  const DefiningRelationsOptions& options = {});

/// Terms of  int A^2 = int int B.B' / (4 pi |r - r'|) + int |grad chi|^2
/// for A = curl N[B] + grad chi, plus the cross integral that must vanish
/// for divergence-free B.
struct ASquaredReport {
  double lhs = 0.0;         // sum |A|^2 vol
  double rhs_bb = 0.0;      // double sum B.B' vol^2 / (4 pi |r - r'|)
  double gauge_term = 0.0;  // sum |grad chi|^2 vol
  double i2_cross = 0.0;    // -(1/4pi)^2 triple integral, regrouped
  Index3 dims{};
  Spacing3 spacing{};
  Index3 padding{};  // cells added per side for the A integrals
  PotentialDiagnostics diagnostics;

  double identity_residual() const { return lhs - rhs_bb - gauge_term; }
};

/// Double volume sums are O(N^2); larger grids are refused.
inline constexpr std::size_t kASquaredMaxCells = 32 * 32 * 32;

struct ASquaredOptions {
  /// A and the I2 integrand are evaluated on the source lattice extended by
  /// this fraction of the cell count on each side. B vanishes there, but A
  /// does not: a closed flux tube has a dipole-like A whose tail outside the
  /// box is a few percent of int A^2.
  double padding = 0.5;
};

/// Throws SizeError above kASquaredMaxCells.
ASquaredReport a_squared_identity(const VectorField3& B, const std::optional<ScalarField>& chi = {},
                                  const ASquaredOptions& options = {});

/// JSON document with keys lhs, rhs_bb, gauge_term, i2_cross, grid, tolerances.
struct ASquaredTolerances {
  double identity = 0.03;
  double i2 = 0.03;
};
std::string to_json(const ASquaredReport& report, const ASquaredTolerances& tol = {});

using Matrix4 = std::array<std::array<double, 4>, 4>;

/// Per-cell contravariant field tensor F^{mu nu} with F^{i0} = E^i / c and
/// F^{ki} = eps^{kji} B^j (indices 1..3 spatial).
class FieldTensor {
 public:
  FieldTensor(const Grid3& grid, double c, std::vector<Matrix4> cells);

  const Grid3& grid() const { return grid_; }
  double c() const { return c_; }
  const Matrix4& operator[](std::size_t idx) const { return cells_[idx]; }
  std::size_t size() const { return cells_.size(); }

  /// Field of entries F^{row col} across the grid.
  ScalarField entry(std::size_t row, std::size_t col) const;

  /// Throws InvariantError if any cell is not exactly antisymmetric.
  void require_antisymmetric() const;

 private:
  Grid3 grid_;
  double c_;
  std::vector<Matrix4> cells_;
};

FieldTensor field_tensor(const VectorField3& E, const VectorField3& B, const Constants& k = {});

/// A^0 = phi / c and the spatial A^i.
struct FourPotential {
  ScalarField a0;
  VectorField3 a;
};

/// A^mu = d_nu N[F^{nu mu}], evaluated index by index from the tensor.
/// The nu = 0 term is absent: an equal-time integral has no dependence on
/// the observer's time. `closure` applies to the A^0 row exactly as in
/// scalar_potential_from_E.
FourPotential four_potential_equal_time(const FieldTensor& F,
                                        BoundaryClosure closure = BoundaryClosure::none);

}  // namespace coulomb

#include "coulomb/potentials.hpp"

#include <cmath>
#include <json.hpp>

#include "coulomb/convolution.hpp"
#include "coulomb/diffops.hpp"
#include "coulomb/error.hpp"
#include "coulomb/field_io.hpp"
#include "coulomb/helmholtz.hpp"

namespace coulomb {

std::vector<std::string> PotentialDiagnostics::messages() const {
  std::vector<std::string> out;
  if (support_touches_boundary) out.emplace_back("field support reaches the grid boundary");
  if (non_solenoidal) out.emplace_back("input B is not divergence-free within tolerance");
  if (singular_cell_skipped) out.emplace_back("a point charge sits on a cell center; that cell was skipped");
  return out;
}

double divergence_ratio(const VectorField3& B) {
  const double bmax = max_norm(B);
  if (bmax == 0.0) return 0.0;
  return max_abs(divergence(B), 1) * B.grid().min_spacing() / bmax;
}

ScalarField boundary_flux_potential(const VectorField3& E) {
  const Grid3& g = E.grid();
  const auto& n = g.dims();
  const auto& h = g.spacing();

  struct FaceSample {
    Vec3 position;
    double weight;  // (E.n) dS / 4 pi
  };
  std::vector<FaceSample> faces;
  for (std::size_t axis = 0; axis < 3; ++axis) {
    const std::size_t u = (axis + 1) % 3;
    const std::size_t v = (axis + 2) % 3;
    const double area = h[u] * h[v];
    for (int side = 0; side < 2; ++side) {
      const double sign = side == 0 ? -1.0 : 1.0;
      for (std::size_t b = 0; b < n[v]; ++b)
        for (std::size_t a = 0; a < n[u]; ++a) {
          Index3 edge{}, inner{};
          edge[u] = inner[u] = a;
          edge[v] = inner[v] = b;
          edge[axis] = side == 0 ? 0 : n[axis] - 1;
          inner[axis] = side == 0 ? 1 : n[axis] - 2;
          const Vec3 e0 = E(edge[0], edge[1], edge[2]);
          const Vec3 e1 = E(inner[0], inner[1], inner[2]);
          // Linear extrapolation from the two outer cell centers to the face.
          const double en = sign * (1.5 * e0[axis] - 0.5 * e1[axis]);
          Vec3 pos = g.center(edge[0], edge[1], edge[2]);
          pos[axis] += sign * 0.5 * h[axis];
          faces.push_back({pos, en * area / kFourPi});
        }
    }
  }

  ScalarField out(g);
  const long total = static_cast<long>(g.size());
#pragma omp parallel for schedule(static)
  for (long idx = 0; idx < total; ++idx) {
    const Vec3 r = g.center(static_cast<std::size_t>(idx));
    double s = 0.0;
    for (const auto& f : faces) s += f.weight / norm(r - f.position);
    out[static_cast<std::size_t>(idx)] = s;
  }
  return out;
}

Flagged<ScalarField> scalar_potential_from_E(const VectorField3& E, BoundaryClosure closure) {
  PotentialDiagnostics diag;
  diag.boundary_ratio = boundary_band_ratio(E);
  diag.support_touches_boundary = diag.boundary_ratio > kBoundarySupportThreshold;
  ScalarField phi = newtonian_divergence_convolve(E);
  if (closure == BoundaryClosure::boundary_flux) phi += boundary_flux_potential(E);
  return {std::move(phi), diag};
}

Flagged<ScalarField> scalar_potential_from_charges(std::span<const PointCharge> charges,
                                                   const Grid3& grid, const Constants& k) {
  PotentialDiagnostics diag;
  ScalarField phi(grid);
  const double coincide = 1e-12 * grid.min_spacing();
  for (std::size_t idx = 0; idx < grid.size(); ++idx) {
    const Vec3 r = grid.center(idx);
    double s = 0.0;
    for (const auto& q : charges) {
      const double d = norm(r - q.position);
      if (d < coincide) {
        diag.singular_cell_skipped = true;
        continue;
      }
      s += q.charge / d;
    }
    phi[idx] = s / (kFourPi * k.eps0);
  }
  return {std::move(phi), diag};
}

Flagged<VectorField3> vector_potential_from_B(const VectorField3& B) {
  PotentialDiagnostics diag;
  diag.boundary_ratio = boundary_band_ratio(B);
  diag.support_touches_boundary = diag.boundary_ratio > kBoundarySupportThreshold;
  diag.divergence_ratio = divergence_ratio(B);
  diag.non_solenoidal = diag.divergence_ratio > kSolenoidalTolerance;
  return {newtonian_curl_convolve(B), diag};
}

DefiningRelationsReport verify_defining_relations(const VectorField3& E_t, const VectorField3& B_t,
                                                  const VectorField3& E_next,
                                                  const VectorField3& B_next, double dt,
                                                  const DefiningRelationsOptions& options) {
  require_same_grid(E_t.grid(), B_t.grid(), "E_t vs B_t");
  require_same_grid(E_t.grid(), E_next.grid(), "E_t vs E_next");
  require_same_grid(E_t.grid(), B_next.grid(), "E_t vs B_next");
  if (!(dt > 0.0)) throw ParameterError("time step must be positive");

  DefiningRelationsReport rep;
  rep.margin = options.margin;

  const auto a_t = vector_potential_from_B(B_t);
  const auto a_n = vector_potential_from_B(B_next);
  VectorField3 e_mid = 0.5 * (E_t + E_next);
  const auto phi = scalar_potential_from_E(e_mid, options.closure);

  rep.diagnostics = a_t.diagnostics;
  rep.diagnostics.non_solenoidal |= a_n.diagnostics.non_solenoidal;
  rep.diagnostics.support_touches_boundary |= a_n.diagnostics.support_touches_boundary;
  rep.diagnostics.divergence_ratio = std::max(a_t.diagnostics.divergence_ratio, a_n.diagnostics.divergence_ratio);
  rep.diagnostics.boundary_ratio = std::max(a_t.diagnostics.boundary_ratio, a_n.diagnostics.boundary_ratio);

  const VectorField3 r_t = curl(a_t.value) - B_t;
  const VectorField3 r_n = curl(a_n.value) - B_next;
  rep.curl_residual_interior = std::max(max_norm(r_t, options.margin), max_norm(r_n, options.margin));
  rep.curl_residual_full = std::max(max_norm(r_t), max_norm(r_n));

  VectorField3 dadt = a_n.value - a_t.value;
  dadt *= 1.0 / dt;
  VectorField3 res = gradient(phi.value);
  res *= -1.0;
  res -= dadt;
  res -= e_mid;
  rep.time_residual_interior = max_norm(res, options.margin);
  rep.time_residual_full = max_norm(res);

  rep.b_scale = std::max(max_norm(B_t), max_norm(B_next));
  rep.e_scale = max_norm(e_mid);
  return rep;
}

ASquaredReport a_squared_identity(const VectorField3& B, const std::optional<ScalarField>& chi,
                                  const ASquaredOptions& options) {
  const Grid3& g = B.grid();
  if (g.size() > kASquaredMaxCells) {
    throw SizeError("A^2 identity is limited to " + std::to_string(kASquaredMaxCells) + " cells");
  }
  if (!(options.padding >= 0.0 && options.padding <= 2.0)) {
    throw ParameterError("A^2 padding fraction must lie in [0, 2]");
  }
  if (chi) require_same_grid(g, chi->grid(), "chi vs B");

  ASquaredReport rep;
  rep.dims = g.dims();
  rep.spacing = g.spacing();
  for (std::size_t a = 0; a < 3; ++a) {
    rep.padding[a] = static_cast<std::size_t>(std::lround(options.padding * static_cast<double>(g.dims()[a])));
  }
  rep.diagnostics.boundary_ratio = boundary_band_ratio(B);
  rep.diagnostics.support_touches_boundary = rep.diagnostics.boundary_ratio > kBoundarySupportThreshold;
  rep.diagnostics.divergence_ratio = divergence_ratio(B);
  rep.diagnostics.non_solenoidal = rep.diagnostics.divergence_ratio > kSolenoidalTolerance;

  const Grid3 big = g.padded(rep.padding);
  const double vol = g.cell_volume();

  // M[i] = grad N[B_i] on the padded grid; A and the I2 integrand both come
  // from it.
  std::array<std::optional<VectorField3>, 3> m;
  for (std::size_t i = 0; i < 3; ++i) {
    if (!B.component_is_zero(i)) m[i] = newtonian_gradient_convolve(B.component(i), rep.padding);
  }
  auto dN = [&](std::size_t comp, std::size_t axis, std::size_t idx) {
    return m[comp] ? (*m[comp])[idx][axis] : 0.0;
  };

  double a2 = 0.0;
  double cross = 0.0;
  for (std::size_t idx = 0; idx < big.size(); ++idx) {
    Vec3 a;
    for (std::size_t c = 0; c < 3; ++c) {
      const std::size_t p = (c + 1) % 3;
      const std::size_t q = (c + 2) % 3;
      a[c] = dN(q, p, idx) - dN(p, q, idx);
    }
    a2 += dot(a, a);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) cross += dN(i, j, idx) * dN(j, i, idx);
  }
  rep.i2_cross = -cross * vol;
  rep.lhs = a2 * vol;

  if (chi) {
    // grad chi lives on the source grid and vanishes outside it.
    const VectorField3 grad_chi = gradient(*chi);
    rep.gauge_term = volume_integral_squared(grad_chi);
    const auto& n = g.dims();
    double mixed = 0.0;
    for (std::size_t k = 0; k < n[2]; ++k)
      for (std::size_t j = 0; j < n[1]; ++j)
        for (std::size_t i = 0; i < n[0]; ++i) {
          const std::size_t bi = big.index(i + rep.padding[0], j + rep.padding[1], k + rep.padding[2]);
          Vec3 a;
          for (std::size_t c = 0; c < 3; ++c) {
            const std::size_t p = (c + 1) % 3;
            const std::size_t q = (c + 2) % 3;
            a[c] = dN(q, p, bi) - dN(p, q, bi);
          }
          mixed += dot(a, grad_chi(i, j, k));
        }
    rep.lhs += 2.0 * mixed * vol + rep.gauge_term;
  }

  rep.rhs_bb = volume_inner(B, newtonian_convolve(B));
  return rep;
}

std::string to_json(const ASquaredReport& report, const ASquaredTolerances& tol) {
  nlohmann::ordered_json j;
  j["lhs"] = report.lhs;
  j["rhs_bb"] = report.rhs_bb;
  j["gauge_term"] = report.gauge_term;
  j["i2_cross"] = report.i2_cross;
  j["grid"] = {{"dims", report.dims}, {"spacing", report.spacing}, {"padding", report.padding}};
  j["tolerances"] = {{"identity", tol.identity}, {"i2", tol.i2}};
  j["warnings"] = report.diagnostics.messages();
  return canonical_json(j.dump());
}

// ---------------------------------------------------------------- tensor route

FieldTensor::FieldTensor(const Grid3& grid, double c, std::vector<Matrix4> cells)
    : grid_(grid), c_(c), cells_(std::move(cells)) {
  if (cells_.size() != grid_.size()) throw GridError("tensor cell count does not match grid");
  if (!(c_ > 0.0)) throw ParameterError("speed of light must be positive");
}

ScalarField FieldTensor::entry(std::size_t row, std::size_t col) const {
  ScalarField out(grid_);
  for (std::size_t i = 0; i < cells_.size(); ++i) out[i] = cells_[i][row][col];
  return out;
}

void FieldTensor::require_antisymmetric() const {
  for (const auto& m : cells_) {
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b)
        if (m[a][b] != -m[b][a]) throw InvariantError("field tensor is not antisymmetric");
  }
}

namespace {

// Levi-Civita symbol on spatial indices 1..3.
int levi_civita(std::size_t i, std::size_t j, std::size_t k) {
  if (i == j || j == k || i == k) return 0;
  const std::size_t a = i - 1, b = j - 1, c = k - 1;
  return ((b + 3 - a) % 3 == 1 && (c + 3 - b) % 3 == 1) ? 1 : -1;
}

}  // namespace

FieldTensor field_tensor(const VectorField3& E, const VectorField3& B, const Constants& k) {
  require_same_grid(E.grid(), B.grid(), "E vs B");
  std::vector<Matrix4> cells(E.size());
  for (std::size_t idx = 0; idx < E.size(); ++idx) {
    Matrix4 m{};
    for (std::size_t i = 1; i <= 3; ++i) {
      m[i][0] = E[idx][i - 1] / k.c;
      m[0][i] = -m[i][0];
    }
    for (std::size_t kk = 1; kk <= 3; ++kk)
      for (std::size_t i = 1; i <= 3; ++i) {
        double v = 0.0;
        for (std::size_t j = 1; j <= 3; ++j) v += levi_civita(kk, j, i) * B[idx][j - 1];
        m[kk][i] = v;
      }
    cells[idx] = m;
  }
  return FieldTensor(E.grid(), k.c, std::move(cells));
}

FourPotential four_potential_equal_time(const FieldTensor& F, BoundaryClosure closure) {
  F.require_antisymmetric();
  const Grid3& g = F.grid();

  // Column mu of the tensor, F^{nu mu} for spatial nu, as a 3-vector field;
  // A^mu = d_nu N[F^{nu mu}] is then its kernel divergence.
  auto column = [&](std::size_t mu) {
    return VectorField3(F.entry(1, mu), F.entry(2, mu), F.entry(3, mu));
  };

  const VectorField3 col0 = column(0);
  ScalarField a0 = newtonian_divergence_convolve(col0);
  if (closure == BoundaryClosure::boundary_flux) a0 += boundary_flux_potential(col0);

  VectorField3 a(g);
  for (std::size_t i = 1; i <= 3; ++i) a.set_component(i - 1, newtonian_divergence_convolve(column(i)));
  return {std::move(a0), std::move(a)};
}

}  // namespace coulomb

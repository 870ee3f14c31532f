#include "coulomb/convolution.hpp"

#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "coulomb/constants.hpp"
#include "coulomb/error.hpp"
#include "coulomb/quadrature.hpp"

namespace coulomb {

double self_cell_integral(const Spacing3& spacing) {
  static std::mutex mutex;
  static std::map<Spacing3, double> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(spacing); it != cache.end()) return it->second;
  }
  // Split the cell into six pyramids with apex at the center. The pyramid on
  // the face at distance d contributes  int_face d / (2 |p|) dA; the inner
  // face coordinate integrates in closed form to asinh, leaving a smooth 1D
  // integral per face pair.
  double total = 0.0;
  for (std::size_t a = 0; a < 3; ++a) {
    const double d = 0.5 * spacing[a];
    const double b = 0.5 * spacing[(a + 1) % 3];
    const double c = 0.5 * spacing[(a + 2) % 3];
    auto face = [&](double half_u, double half_v) {
      return integrate_adaptive(
                 [&](double u) { return std::asinh(half_v / std::sqrt(d * d + u * u)); }, 0.0,
                 half_u, 1e-13, 12)
          .value;
    };
    // Two opposite faces, each (d/2) * 4 * quarter-face integral.
    total += 4.0 * d * face(b, c);
  }
  std::lock_guard lock(mutex);
  cache.emplace(spacing, total);
  return total;
}

namespace {

// Kernel values indexed by the offset between a target cell and a source
// cell. Targets live on the source lattice extended by `pad` cells per side,
// so offsets along axis a run over [-(n_a - 1 + pad_a), n_a - 1 + pad_a].
struct KernelTable {
  Index3 extent{};
  std::vector<double> values;
};

template <class Fn>
KernelTable build_table(const Grid3& src, const Index3& pad, Fn fn, double self) {
  const auto& n = src.dims();
  const auto& h = src.spacing();
  KernelTable t;
  Index3 shift{};
  for (std::size_t a = 0; a < 3; ++a) {
    shift[a] = n[a] - 1 + pad[a];
    t.extent[a] = 2 * shift[a] + 1;
  }
  t.values.resize(t.extent[0] * t.extent[1] * t.extent[2]);
  for (std::size_t kk = 0; kk < t.extent[2]; ++kk)
    for (std::size_t jj = 0; jj < t.extent[1]; ++jj)
      for (std::size_t ii = 0; ii < t.extent[0]; ++ii) {
        const double dx = (static_cast<double>(ii) - static_cast<double>(shift[0])) * h[0];
        const double dy = (static_cast<double>(jj) - static_cast<double>(shift[1])) * h[1];
        const double dz = (static_cast<double>(kk) - static_cast<double>(shift[2])) * h[2];
        const bool origin = ii == shift[0] && jj == shift[1] && kk == shift[2];
        t.values[ii + t.extent[0] * (jj + t.extent[1] * kk)] = origin ? self : fn(dx, dy, dz);
      }
  return t;
}

KernelTable potential_table(const Grid3& g) {
  const double scale = g.cell_volume() / kFourPi;
  return build_table(
      g, Index3{}, [&](double dx, double dy, double dz) { return scale / std::sqrt(dx * dx + dy * dy + dz * dz); },
      self_cell_integral(g.spacing()) / kFourPi);
}

KernelTable gradient_table(const Grid3& g, const Index3& pad, std::size_t axis) {
  const double scale = -g.cell_volume() / kFourPi;
  return build_table(
      g, pad,
      [&](double dx, double dy, double dz) {
        const double r2 = dx * dx + dy * dy + dz * dz;
        const double d = axis == 0 ? dx : (axis == 1 ? dy : dz);
        return scale * d / (r2 * std::sqrt(r2));
      },
      0.0);
}

struct Job {
  const KernelTable* table;
  const double* src;
  double* out;
};

// out[t] = sum_s table(t - s) * src[s] for every job, over target cells t of
// `tgt` (the padded source lattice). Each output cell is summed in a fixed
// order, so results do not depend on the thread schedule.
void run_jobs(const Grid3& src, const Grid3& tgt, const std::vector<Job>& jobs) {
  if (jobs.empty()) return;
  const auto& n = src.dims();
  const long total = static_cast<long>(tgt.size());

#pragma omp parallel for schedule(dynamic, 16)
  for (long idx = 0; idx < total; ++idx) {
    const Index3 t = tgt.unravel(static_cast<std::size_t>(idx));
    for (const auto& job : jobs) {
      const auto& ex = job.table->extent;
      double acc = 0.0;
      for (std::size_t k = 0; k < n[2]; ++k) {
        const std::size_t kk = t[2] + n[2] - 1 - k;
        for (std::size_t j = 0; j < n[1]; ++j) {
          const std::size_t jj = t[1] + n[1] - 1 - j;
          // Kernel row for source i = 0..n0-1, walked backwards.
          const double* krow = job.table->values.data() + ex[0] * (jj + ex[1] * kk) + t[0] + n[0] - 1;
          const double* s = job.src + n[0] * (j + n[1] * k);
          double a = 0.0;
          for (std::size_t i = 0; i < n[0]; ++i) a += krow[-static_cast<long>(i)] * s[i];
          acc += a;
        }
      }
      job.out[idx] = acc;
    }
  }
}

// d_axis N[component] for every (component, axis) pair requested, on the
// padded grid. Identically zero components are skipped and yield zeros.
struct DerivativeSet {
  Grid3 target;
  std::array<std::array<std::optional<ScalarField>, 3>, 3> d;  // d[component][axis]
};

DerivativeSet kernel_derivatives(const VectorField3& source, const Index3& pad,
                                 const std::array<std::array<bool, 3>, 3>& wanted) {
  const Grid3& g = source.grid();
  DerivativeSet set{g.padded(pad), {}};
  std::array<std::optional<KernelTable>, 3> tables;
  std::array<ScalarField, 3> comps{source.component(0), source.component(1), source.component(2)};
  std::vector<Job> jobs;
  for (std::size_t c = 0; c < 3; ++c) {
    const bool zero = source.component_is_zero(c);
    for (std::size_t a = 0; a < 3; ++a) {
      if (!wanted[c][a]) continue;
      set.d[c][a].emplace(set.target);
      if (zero) continue;
      if (!tables[a]) tables[a] = gradient_table(g, pad, a);
      jobs.push_back({&*tables[a], comps[c].values().data(), set.d[c][a]->values().data()});
    }
  }
  run_jobs(g, set.target, jobs);
  return set;
}

}  // namespace

ScalarField newtonian_convolve(const ScalarField& source) {
  const Grid3& g = source.grid();
  const auto table = potential_table(g);
  ScalarField out(g);
  run_jobs(g, g, {{&table, source.values().data(), out.values().data()}});
  return out;
}

VectorField3 newtonian_convolve(const VectorField3& source) {
  const Grid3& g = source.grid();
  const auto table = potential_table(g);
  std::array<ScalarField, 3> comps{source.component(0), source.component(1), source.component(2)};
  std::array<ScalarField, 3> res{ScalarField(g), ScalarField(g), ScalarField(g)};
  std::vector<Job> jobs;
  for (std::size_t c = 0; c < 3; ++c) {
    if (source.component_is_zero(c)) continue;  // exact zero convolves to exact zero
    jobs.push_back({&table, comps[c].values().data(), res[c].values().data()});
  }
  run_jobs(g, g, jobs);
  return VectorField3(res[0], res[1], res[2]);
}

ScalarField newtonian_convolve(const ScalarField& source, const Grid3& target) {
  require_same_grid(source.grid(), target, "convolution target differs from source grid");
  return newtonian_convolve(source);
}

VectorField3 newtonian_convolve(const VectorField3& source, const Grid3& target) {
  require_same_grid(source.grid(), target, "convolution target differs from source grid");
  return newtonian_convolve(source);
}

VectorField3 newtonian_gradient_convolve(const ScalarField& source, const Index3& pad) {
  VectorField3 v(source.grid());
  v.set_component(0, source);
  const auto set = kernel_derivatives(v, pad, {{{true, true, true}, {}, {}}});
  return VectorField3(*set.d[0][0], *set.d[0][1], *set.d[0][2]);
}

VectorField3 newtonian_curl_convolve(const VectorField3& source, const Index3& pad) {
  std::array<std::array<bool, 3>, 3> wanted{};
  for (std::size_t c = 0; c < 3; ++c)
    for (std::size_t a = 0; a < 3; ++a) wanted[c][a] = a != c;
  const auto set = kernel_derivatives(source, pad, wanted);
  // (curl N)_c = d_a N_b - d_b N_a with (c, a, b) cyclic.
  std::array<ScalarField, 3> out{ScalarField(set.target), ScalarField(set.target), ScalarField(set.target)};
  for (std::size_t c = 0; c < 3; ++c) {
    const std::size_t a = (c + 1) % 3;
    const std::size_t b = (c + 2) % 3;
    out[c] = *set.d[b][a] - *set.d[a][b];
  }
  return VectorField3(out[0], out[1], out[2]);
}

ScalarField newtonian_divergence_convolve(const VectorField3& source) {
  const auto set = kernel_derivatives(source, {}, {{{true, false, false}, {false, true, false}, {false, false, true}}});
  ScalarField out(set.target);
  for (std::size_t a = 0; a < 3; ++a) out += *set.d[a][a];
  return out;
}

double newtonian_potential_at(const ScalarField& source, const Vec3& point) {
  const Grid3& g = source.grid();
  const double scale = g.cell_volume() / kFourPi;
  const double tiny = 1e-12 * g.min_spacing();
  double sum = 0.0;
  for (std::size_t idx = 0; idx < g.size(); ++idx) {
    const double d = norm(point - g.center(idx));
    sum += d < tiny ? source[idx] * self_cell_integral(g.spacing()) / kFourPi
                    : source[idx] * scale / d;
  }
  return sum;
}

}  // namespace coulomb

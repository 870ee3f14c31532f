#include "coulomb/presets.hpp"

#include <cmath>
#include <random>

namespace coulomb::presets {
namespace {

constexpr double kSqrtPi = 1.77245385090551602729;

}  // namespace

Vec3 FluxRing::B(const Vec3& p) const {
  const double b0 = 2.0 * flux / (width * width * width * kSqrtPi);
  const double g = std::exp(-dot(p, p) / (width * width));
  return {-b0 * p.y * g, b0 * p.x * g, 0.0};
}

Vec3 StraightFluxTube::B(const Vec3& p) const {
  const double rho2 = p.x * p.x + p.y * p.y;
  return {0.0, 0.0, flux / (kPi * width * width) * std::exp(-rho2 / (width * width))};
}

double StraightFluxTube::a_theta(double rho) const {
  return flux / (2.0 * kPi * rho) * (1.0 - std::exp(-rho * rho / (width * width)));
}

double GaussianBump::value(const Vec3& p) const {
  const Vec3 d = p - center;
  return amplitude * std::exp(-dot(d, d) / (width * width));
}

Vec3 GaussianBump::gradient(const Vec3& p) const {
  const Vec3 d = p - center;
  return d * (-2.0 * value(p) / (width * width));
}

Vec3 ChargeBall::E(const Vec3& p, const Constants& k) const {
  const Vec3 d = p - center;
  const double r = std::max(norm(d), core);
  return d * (charge / (kFourPi * k.eps0 * r * r * r));
}

double ChargeBall::phi(const Vec3& p, const Constants& k) const {
  const double r = norm(p - center);
  const double pre = charge / (kFourPi * k.eps0);
  if (r >= core) return pre / r;
  return pre * (3.0 * core * core - r * r) / (2.0 * core * core * core);
}

double GaussianCharge::density(const Vec3& p) const {
  return charge * std::exp(-dot(p, p) / (width * width)) / (kPi * kSqrtPi * width * width * width);
}

Vec3 GaussianCharge::E(const Vec3& p, const Constants& k) const {
  const double r = norm(p);
  if (r == 0.0) return {};
  const double s = r / width;
  const double enclosed = std::erf(s) - 2.0 / kSqrtPi * s * std::exp(-s * s);
  return p * (charge * enclosed / (kFourPi * k.eps0 * r * r * r));
}

double GaussianCharge::phi(const Vec3& p, const Constants& k) const {
  const double r = norm(p);
  const double pre = charge / (kFourPi * k.eps0);
  if (r == 0.0) return pre * 2.0 / (kSqrtPi * width);
  return pre * std::erf(r / width) / r;
}

namespace {

// Radial profile of the Hertz potential and the derivatives the fields need.
struct HertzProfile {
  double f1;    // df/dr
  double f2;    // d2f/dr2
  double f1t;   // d2f/(dr dt)
};

HertzProfile hertz_profile(const DipolePulse& d, double r, double t) {
  const double w2 = d.width * d.width;
  auto g = [&](double s) { return d.amplitude * std::exp(-s * s / w2); };
  auto g1 = [&](double s) { return -2.0 * s / w2 * g(s); };
  auto g2 = [&](double s) { return (4.0 * s * s / (w2 * w2) - 2.0 / w2) * g(s); };
  const double a = r - d.c * t;
  const double b = r + d.c * t;
  const double n0 = g(a) - g(b);
  const double n1 = g1(a) - g1(b);
  const double n2 = g2(a) - g2(b);
  const double n0t = -d.c * g1(a) - d.c * g1(b);
  const double n1t = -d.c * g2(a) - d.c * g2(b);
  HertzProfile h{};
  h.f1 = n1 / r - n0 / (r * r);
  h.f2 = n2 / r - 2.0 * n1 / (r * r) + 2.0 * n0 / (r * r * r);
  h.f1t = n1t / r - n0t / (r * r);
  return h;
}

// The closed forms divide by powers of r; evaluate just off the origin where
// the fields are regular (f is even in r, so the shift costs O(rmin^2)).
Vec3 regularize(const Vec3& p, double width) {
  const double rmin = 1e-3 * width;
  return norm(p) >= rmin ? p : Vec3{0.0, 0.0, rmin};
}

}  // namespace

Vec3 DipolePulse::E(const Vec3& p0, double t) const {
  const Vec3 p = regularize(p0, width);
  const double r = norm(p);
  const auto h = hertz_profile(*this, r, t);
  // curl curl (z f) = grad(d_z f) - z lap f
  const double du = h.f2 / r - h.f1 / (r * r);  // d/dr (f'/r)
  Vec3 e = p * (p.z * du / r);
  e.z -= h.f2 + h.f1 / r;
  return e;
}

Vec3 DipolePulse::B(const Vec3& p0, double t) const {
  const Vec3 p = regularize(p0, width);
  const double r = norm(p);
  const auto h = hertz_profile(*this, r, t);
  const double s = h.f1t / (r * c * c);
  return {s * p.y, -s * p.x, 0.0};
}

Vec3 RadialBlob::B(const Vec3& p) const {
  return p * (amplitude * std::exp(-dot(p, p) / (width * width)));
}

RandomBumpField RandomBumpField::make(std::uint64_t seed, std::size_t count, double spread,
                                      double width) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  RandomBumpField field;
  while (field.bumps.size() < count) {
    const Vec3 c{unit(rng), unit(rng), unit(rng)};
    if (dot(c, c) > 1.0) continue;
    field.bumps.push_back({c * spread, {unit(rng), unit(rng), unit(rng)}, width});
  }
  return field;
}

Vec3 RandomBumpField::value(const Vec3& p) const {
  Vec3 v;
  for (const auto& b : bumps) {
    const Vec3 d = p - b.center;
    v += b.amplitude * std::exp(-dot(d, d) / (b.width * b.width));
  }
  return v;
}

std::vector<GaussianBump> random_gauge_bumps(std::uint64_t seed, std::size_t count, double spread,
                                             double min_width, double max_width) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> wdist(min_width, max_width);
  std::vector<GaussianBump> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    GaussianBump b;
    b.amplitude = unit(rng);
    b.width = wdist(rng);
    b.center = {unit(rng) * spread, unit(rng) * spread, unit(rng) * spread};
    out.push_back(b);
  }
  return out;
}

}  // namespace coulomb::presets

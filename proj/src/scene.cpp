#include "sarkit/scene.hpp"

#include <cmath>
#include <string>

#include "sarkit/rng.hpp"

namespace sarkit::scene {

ComplexImage point_scatterers(const SceneSpec& scene, const std::vector<PointScatterer>& points) {
  validate(scene);
  ComplexImage img = ComplexImage::zeros(scene);
  const double h = scene.pixel_m();
  const int half = scene.n_pixels / 2;
  for (std::size_t p = 0; p < points.size(); ++p) {
    const auto& pt = points[p];
    if (!(std::abs(pt.x_m) < scene.radius_m) || !(std::abs(pt.y_m) < scene.radius_m))
      throw std::invalid_argument("point_scatterers: point " + std::to_string(p) + " at (" +
                                  std::to_string(pt.x_m) + ", " + std::to_string(pt.y_m) +
                                  ") lies outside the scene radius " +
                                  std::to_string(scene.radius_m));
    int j1 = static_cast<int>(std::lround(pt.x_m / h));
    int j2 = static_cast<int>(std::lround(pt.y_m / h));
    j1 = std::min(std::max(j1, -half), half - 1);
    j2 = std::min(std::max(j2, -half), half - 1);
    img.at(j1, j2) += pt.amplitude;
  }
  return img;
}

ComplexSignal step_signal(int n) {
  if (n < 2) throw std::invalid_argument("step_signal: n must be >= 2");
  ComplexSignal s;
  s.samples.resize(n);
  for (int j = 0; j < n; ++j) {
    const double x = -kPi + 2.0 * kPi * j / n;
    s.samples[j] = (x < 0.0) ? 0.0 : 1.0;
  }
  return s;
}

ComplexSignal ramp_signal(int n) {
  if (n < 2) throw std::invalid_argument("ramp_signal: n must be >= 2");
  ComplexSignal s;
  s.samples.resize(n);
  for (int j = 0; j < n; ++j) {
    const double x = -0.5 + static_cast<double>(j) / n;
    s.samples[j] = (x < 0.0) ? (2.0 * x + 2.0) : (2.0 * x);
  }
  return s;
}

namespace {
// Canonical Shepp-Logan head phantom (the usual ten-ellipse table with unit skull
// intensity): {value, a, b, x0, y0, angle_deg}, sum of values at a point in [0, 1].
struct Ellipse {
  double v, a, b, x0, y0, deg;
};
constexpr Ellipse kSheppLogan[10] = {
    {1.00, 0.6900, 0.9200, 0.00, 0.0000, 0.0},   {-0.98, 0.6624, 0.8740, 0.00, -0.0184, 0.0},
    {-0.02, 0.1100, 0.3100, 0.22, 0.0000, -18.0}, {-0.02, 0.1600, 0.4100, -0.22, 0.0000, 18.0},
    {0.01, 0.2100, 0.2500, 0.00, 0.3500, 0.0},   {0.01, 0.0460, 0.0460, 0.00, 0.1000, 0.0},
    {0.01, 0.0460, 0.0460, 0.00, -0.1000, 0.0},  {0.01, 0.0460, 0.0230, -0.08, -0.6050, 0.0},
    {0.01, 0.0230, 0.0230, 0.00, -0.6050, 0.0},  {0.01, 0.0230, 0.0460, 0.06, -0.6050, 0.0}};
}  // namespace

ComplexImage shepp_logan_magnitude(int n) {
  SceneSpec scene{1.0, n};
  validate(scene);
  ComplexImage img = ComplexImage::zeros(scene);
  const int half = n / 2;
  const double scale = 2.0 / n;  // grid index -> phantom coordinate in [-1, 1)
  for (int j1 = -half; j1 < half; ++j1) {
    for (int j2 = -half; j2 < half; ++j2) {
      const double x = j1 * scale, y = j2 * scale;
      double v = 0.0;
      for (const auto& e : kSheppLogan) {
        const double ang = e.deg * kPi / 180.0;
        const double c = std::cos(ang), s = std::sin(ang);
        const double dx = x - e.x0, dy = y - e.y0;
        const double u = (dx * c + dy * s) / e.a;
        const double w = (-dx * s + dy * c) / e.b;
        if (u * u + w * w <= 1.0) v += e.v;
      }
      img.at(j1, j2) = v;
    }
  }
  return img;
}

cvec apply_random_phases(const cvec& in, std::uint64_t seed) {
  cvec out(in.size());
  for (std::size_t j = 0; j < in.size(); ++j) {
    const double r = std::abs(in[j]);
    if (r == 0.0) {
      out[j] = 0.0;
      continue;
    }
    const double phi = rng::uniform_phase(seed, j);
    out[j] = cplx(r * std::cos(phi), r * std::sin(phi));
  }
  return out;
}

ComplexImage apply_random_phases(const ComplexImage& in, std::uint64_t seed) {
  ComplexImage out = in;
  out.samples = apply_random_phases(in.samples, seed);
  return out;
}

ComplexSignal apply_random_phases(const ComplexSignal& in, std::uint64_t seed) {
  return ComplexSignal{apply_random_phases(in.samples, seed)};
}

ComplexSignal apply_correlated_phases(const ComplexSignal& in, double delta, std::uint64_t seed) {
  if (!(delta > 0.0)) throw std::invalid_argument("apply_correlated_phases: delta must be positive");
  const std::size_t n = in.samples.size();
  if (n == 0) throw std::invalid_argument("apply_correlated_phases: empty signal");
  ComplexSignal out;
  out.samples.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double x = -kPi + 2.0 * kPi * static_cast<double>(j) / static_cast<double>(n);
    const auto block = static_cast<std::uint64_t>(std::floor((x + kPi) / delta));
    const double r = std::abs(in.samples[j]);
    if (r == 0.0) {
      out.samples[j] = 0.0;
      continue;
    }
    const double phi = rng::uniform_phase(seed, block);
    out.samples[j] = cplx(r * std::cos(phi), r * std::sin(phi));
  }
  return out;
}

}  // namespace sarkit::scene

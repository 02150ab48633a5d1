#include "sarkit/forward.hpp"

#include <cmath>

#include "sarkit/geometry.hpp"
#include "sarkit/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sarkit::forward {

namespace {

struct NonzeroPixel {
  int j1, j2;
  cplx value;
};

std::vector<NonzeroPixel> collect_nonzeros(const ComplexImage& image) {
  std::vector<NonzeroPixel> nz;
  const int half = image.n / 2;
  for (int j1 = -half; j1 < half; ++j1)
    for (int j2 = -half; j2 < half; ++j2) {
      const cplx v = image.at(j1, j2);
      if (v != cplx(0.0, 0.0)) nz.push_back({j1, j2, v});
    }
  return nz;
}

}  // namespace

PhaseHistory simulate_phase_history(const ComplexImage& image, const AcquisitionGeometry& geom) {
  validate(geom);
  const SceneSpec scene = image.scene();
  validate(scene);
  if (image.samples.size() != static_cast<std::size_t>(image.n) * image.n)
    throw std::invalid_argument("simulate_phase_history: image buffer size mismatch");

  PhaseHistory ph;
  ph.k_radpm = geometry::wavenumbers(geom);
  ph.azimuths_rad = geom.azimuths_rad;
  ph.scene_ref = scene;
  const std::size_t m = ph.k_radpm.size();
  const std::size_t p = ph.azimuths_rad.size();
  ph.samples.assign(m * p, cplx(0.0, 0.0));

  const double h = scene.pixel_m();
  // Sparse scenes (point targets) dominate usage; dense scenes fall back to a
  // per-sample row/column phasor recurrence that avoids trig in the inner loop.
  const auto nz = collect_nonzeros(image);
  const bool sparse = nz.size() * 4 < static_cast<std::size_t>(image.n) * image.n;
  const int half = image.n / 2;

  const auto total = static_cast<std::int64_t>(m * p);
#pragma omp parallel for schedule(static)
  for (std::int64_t s = 0; s < total; ++s) {
    const std::size_t i = static_cast<std::size_t>(s) / m;
    const std::size_t j = static_cast<std::size_t>(s) % m;
    const double k1 = ph.k_radpm[j] * h * std::cos(ph.azimuths_rad[i]);
    const double k2 = ph.k_radpm[j] * h * std::sin(ph.azimuths_rad[i]);
    cplx acc = 0.0;
    if (sparse) {
      for (const auto& q : nz) acc += q.value * std::polar(1.0, -(k1 * q.j1 + k2 * q.j2));
    } else {
      const cplx step1 = std::polar(1.0, -k1);
      const cplx step2 = std::polar(1.0, -k2);
      cplx ph1 = std::polar(1.0, -k1 * static_cast<double>(-half));
      for (int j1 = -half; j1 < half; ++j1, ph1 *= step1) {
        const cplx* row = &image.at(j1, -half);
        cplx ph2 = std::polar(1.0, -k2 * static_cast<double>(-half));
        cplx racc = 0.0;
        for (int j2 = 0; j2 < image.n; ++j2, ph2 *= step2) racc += row[j2] * ph2;
        acc += ph1 * racc;
      }
    }
    ph.samples[static_cast<std::size_t>(s)] = acc;
  }
  return ph;
}

PhaseHistory simulate_phase_history(const ComplexImage& image, const AcquisitionGeometry& geom,
                                    const SceneSpec& scene) {
  validate(scene);
  if (scene.n_pixels != image.n || std::abs(scene.pixel_m() - image.pixel_m) >
                                       1e-12 * std::max(1.0, std::abs(image.pixel_m)))
    throw std::invalid_argument(
        "simulate_phase_history: scene grid does not match the image grid");
  return simulate_phase_history(image, geom);
}

cvec project(const ComplexImage& image, double theta_rad) {
  const int n = image.n;
  if (n <= 0) throw std::invalid_argument("project: empty image");
  const int half = n / 2;
  const double h = image.pixel_m;
  const double c = std::cos(theta_rad), s = std::sin(theta_rad);

  cvec out(static_cast<std::size_t>(n), cplx(0.0, 0.0));
#pragma omp parallel for schedule(static)
  for (int a = -half; a < half; ++a) {
    const double w = a * h;
    cplx acc = 0.0;
    for (int b = -half; b < half; ++b) {
      const double z = b * h;
      // (w, z) rotated by Q_theta^T: position sampled bilinearly on the pixel grid.
      const double u = (w * c - z * s) / h;
      const double v = (w * s + z * c) / h;
      const int i0 = static_cast<int>(std::floor(u));
      const int j0 = static_cast<int>(std::floor(v));
      const double fu = u - i0, fv = v - j0;
      for (int di = 0; di <= 1; ++di)
        for (int dj = 0; dj <= 1; ++dj) {
          const int i = i0 + di, jj = j0 + dj;
          if (i < -half || i >= half || jj < -half || jj >= half) continue;
          const double wgt = (di ? fu : 1.0 - fu) * (dj ? fv : 1.0 - fv);
          acc += wgt * image.at(i, jj);
        }
    }
    out[static_cast<std::size_t>(a + half)] = acc * h;
  }
  return out;
}

ComplexImage backproject_adjoint(const cvec& profile, const SceneSpec& scene, double theta_rad) {
  validate(scene);
  const int n = scene.n_pixels;
  if (profile.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("backproject_adjoint: profile length must equal n_pixels");
  const int half = n / 2;
  const double h = scene.pixel_m();
  const double c = std::cos(theta_rad), s = std::sin(theta_rad);

  ComplexImage img = ComplexImage::zeros(scene);
#pragma omp parallel for schedule(static)
  for (int j1 = -half; j1 < half; ++j1)
    for (int j2 = -half; j2 < half; ++j2) {
      const double t = (j1 * h * c + j2 * h * s) / h;  // profile index coordinate
      double tc = t;
      if (tc <= -half) tc = -half;
      if (tc >= half - 1) tc = half - 1;
      const int a0 = std::min(static_cast<int>(std::floor(tc)), half - 2);
      const double fa = tc - a0;
      img.at(j1, j2) = (1.0 - fa) * profile[static_cast<std::size_t>(a0 + half)] +
                       fa * profile[static_cast<std::size_t>(a0 + half + 1)];
    }
  return img;
}

cvec aliased_coefficients(const std::map<long long, cplx>& coeffs, int n) {
  if (n < 1) throw std::invalid_argument("aliased_coefficients: n must be >= 1");
  cvec out(static_cast<std::size_t>(n), cplx(0.0, 0.0));
  for (const auto& [k, v] : coeffs) {
    long long r = k % n;
    if (r < 0) r += n;
    out[static_cast<std::size_t>(r)] += v;
  }
  return out;
}

PhaseHistory add_noise(const PhaseHistory& ph, double sigma, std::uint64_t seed) {
  if (!(sigma >= 0.0)) throw std::invalid_argument("add_noise: sigma must be >= 0");
  validate(ph);
  PhaseHistory out = ph;
  for (std::size_t s = 0; s < out.samples.size(); ++s) {
    const auto [x, y] = rng::gaussian_pair(seed, s);
    out.samples[s] += cplx(sigma * x, sigma * y);
  }
  return out;
}

cplx analytic_ramp_coefficient(long long k) {
  if (k == 0)
    throw std::invalid_argument("analytic_ramp_coefficient: k = 0 is the mean (kRampMean)");
  return cplx(0.0, 1.0 / (kPi * static_cast<double>(k)));
}

}  // namespace sarkit::forward

#include "sarkit/geometry.hpp"

#include <cmath>

namespace sarkit {

void validate(const SceneSpec& scene) {
  if (!(scene.radius_m > 0.0)) throw std::invalid_argument("scene: radius_m must be positive");
  if (scene.n_pixels < 2 || scene.n_pixels % 2 != 0)
    throw std::invalid_argument("scene: n_pixels must be a positive even count");
}

void validate(const AcquisitionGeometry& geom) {
  if (geom.freqs_hz.size() < 2) throw std::invalid_argument("geometry: need at least 2 frequencies");
  if (!(geom.freqs_hz.front() > 0.0)) throw std::invalid_argument("geometry: frequencies must be positive");
  const double step = geom.freqs_hz[1] - geom.freqs_hz[0];
  if (!(step > 0.0)) throw std::invalid_argument("geometry: frequencies must be strictly increasing");
  for (std::size_t j = 1; j < geom.freqs_hz.size(); ++j) {
    const double d = geom.freqs_hz[j] - geom.freqs_hz[j - 1];
    if (std::abs(d - step) > 1e-9 * step)
      throw std::invalid_argument("geometry: frequency ladder must be equispaced");
  }
  if (!(std::abs(geom.elevation_rad) < kPi / 2))
    throw std::domain_error("geometry: elevation must satisfy |phi| < pi/2");
  if (geom.azimuths_rad.empty()) throw std::invalid_argument("geometry: need at least 1 azimuth");
  for (std::size_t i = 1; i < geom.azimuths_rad.size(); ++i)
    if (!(geom.azimuths_rad[i] > geom.azimuths_rad[i - 1]))
      throw std::invalid_argument("geometry: azimuths must be strictly increasing");
  if (geom.azimuths_rad.back() - geom.azimuths_rad.front() >= 2.0 * kPi)
    throw std::invalid_argument("geometry: azimuth span must stay within one revolution");
  if (!(geom.c_mps > 0.0)) throw std::invalid_argument("geometry: c_mps must be positive");
}

void validate(const PhaseHistory& ph) {
  const std::size_t m = ph.k_radpm.size();
  const std::size_t p = ph.azimuths_rad.size();
  if (m == 0 || p == 0) throw std::invalid_argument("phase history: empty axes");
  for (std::size_t j = 1; j < m; ++j)
    if (!(ph.k_radpm[j] > ph.k_radpm[j - 1]))
      throw std::invalid_argument("phase history: k_radpm must be strictly increasing");
  for (std::size_t i = 1; i < p; ++i)
    if (!(ph.azimuths_rad[i] > ph.azimuths_rad[i - 1]))
      throw std::invalid_argument("phase history: azimuths must be strictly increasing");
  if (ph.samples.size() != m * p)
    throw std::invalid_argument("phase history: sample count does not match M*P");
  validate(ph.scene_ref);
}

namespace geometry {

double wavenumber(double alpha_hz, double phi_rad, double c_mps) {
  if (!(alpha_hz > 0.0)) throw std::invalid_argument("wavenumber: alpha_hz must be positive");
  if (!(c_mps > 0.0)) throw std::invalid_argument("wavenumber: c_mps must be positive");
  if (!(std::abs(phi_rad) < kPi / 2)) throw std::domain_error("wavenumber: |phi| must be < pi/2");
  return 2.0 * kPi * std::cos(phi_rad) * (2.0 * alpha_hz / c_mps);
}

std::vector<double> wavenumbers(const AcquisitionGeometry& geom) {
  validate(geom);
  std::vector<double> out(geom.freqs_hz.size());
  for (std::size_t j = 0; j < out.size(); ++j)
    out[j] = wavenumber(geom.freqs_hz[j], geom.elevation_rad, geom.c_mps);
  return out;
}

std::vector<std::array<double, 2>> digital_frequencies(const AcquisitionGeometry& geom,
                                                       const SceneSpec& scene) {
  validate(scene);
  const std::vector<double> ks = wavenumbers(geom);  // validates geom
  const double h = scene.pixel_m();
  std::vector<std::array<double, 2>> out;
  out.reserve(ks.size() * geom.azimuths_rad.size());
  for (double theta : geom.azimuths_rad) {
    const double ct = std::cos(theta), st = std::sin(theta);
    for (double k : ks) out.push_back({k * h * ct, k * h * st});
  }
  return out;
}

double max_scene_radius(double delta_alpha_hz, double phi_rad, double c_mps) {
  if (!(delta_alpha_hz > 0.0))
    throw std::domain_error("max_scene_radius: delta_alpha_hz must be positive");
  if (!(c_mps > 0.0)) throw std::domain_error("max_scene_radius: c_mps must be positive");
  if (!(std::abs(phi_rad) < kPi / 2))
    throw std::domain_error("max_scene_radius: |phi| must be < pi/2");
  return c_mps / (4.0 * delta_alpha_hz * std::cos(phi_rad));
}

double max_crossrange_radius(double alpha_max_hz, double phi_rad, double delta_theta_rad,
                             double c_mps) {
  if (!(alpha_max_hz > 0.0))
    throw std::domain_error("max_crossrange_radius: alpha_max_hz must be positive");
  if (!(delta_theta_rad > 0.0))
    throw std::domain_error("max_crossrange_radius: delta_theta_rad must be positive");
  if (!(c_mps > 0.0)) throw std::domain_error("max_crossrange_radius: c_mps must be positive");
  if (!(std::abs(phi_rad) < kPi / 2))
    throw std::domain_error("max_crossrange_radius: |phi| must be < pi/2");
  return c_mps / (4.0 * alpha_max_hz * std::cos(phi_rad) * delta_theta_rad);
}

}  // namespace geometry
}  // namespace sarkit

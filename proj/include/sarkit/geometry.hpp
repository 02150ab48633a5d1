#pragma once

#include <array>
#include <vector>

#include "sarkit/types.hpp"

// Conversions between radar quantities (temporal frequency, elevation, azimuth)
// and the image-domain wavenumbers the rest of the toolkit works in.
namespace sarkit::geometry {

// Ground-plane wavenumber k = 2*pi*cos(phi) * (2*alpha/c)  [rad/m].
// alpha_hz > 0; throws std::domain_error when |phi| >= pi/2.
double wavenumber(double alpha_hz, double phi_rad, double c_mps = kSpeedOfLight);

// Physical wavenumber ladder for every frequency in the geometry.
std::vector<double> wavenumbers(const AcquisitionGeometry& geom);

// Dimensionless per-pixel frequencies (k1, k2) = k * h * (cos theta, sin theta) for
// every (azimuth, frequency) pair, frequency-major within each azimuth
// (index s = i_az * M + j_freq). h is the scene pixel spacing.
std::vector<std::array<double, 2>> digital_frequencies(const AcquisitionGeometry& geom,
                                                       const SceneSpec& scene);

// Alias-free scene radius c / (4 * delta_alpha * cos(phi)) set by the frequency step.
double max_scene_radius(double delta_alpha_hz, double phi_rad, double c_mps = kSpeedOfLight);

// Alias-free cross-range radius c / (4 * alpha_max * cos(phi) * delta_theta) set by the
// azimuth step. Small-angle regime: treat results with delta_theta above ~0.1 rad as
// indicative only.
double max_crossrange_radius(double alpha_max_hz, double phi_rad, double delta_theta_rad,
                             double c_mps = kSpeedOfLight);

}  // namespace sarkit::geometry

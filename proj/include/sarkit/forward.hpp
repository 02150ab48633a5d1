#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "sarkit/types.hpp"

// Forward data model: from complex scenes to phase-history samples, plus the
// tomographic projection pair and small analytic helpers.
namespace sarkit::forward {

// Phase-history sample for every (azimuth, frequency) pair:
//   d(k, theta) = sum_{j1, j2} f(j1, j2) * exp(-i * k * h * (j1*cos(theta) + j2*sin(theta))),
// i.e. the scene's Fourier data at the digital frequencies of the geometry.
// The image defines the scene grid (its pixel spacing supplies h).
PhaseHistory simulate_phase_history(const ComplexImage& image, const AcquisitionGeometry& geom);

// Same, with an explicit scene that must match the image (throws on mismatch).
PhaseHistory simulate_phase_history(const ComplexImage& image, const AcquisitionGeometry& geom,
                                    const SceneSpec& scene);

// Projection p_theta f(w) = integral of f along the rotated line through w:
// samples at w_a = a*h, a in [-N/2, N/2-1], via bilinear reads of the image at
// (w*cos - z*sin, w*sin + z*cos) summed over the z-grid and scaled by h.
cvec project(const ComplexImage& image, double theta_rad);

// Adjoint p_theta^*: image pixel (x, y) takes the profile value at w = x*cos + y*sin
// by linear interpolation (clamped to the profile's end values beyond its support).
ComplexImage backproject_adjoint(const cvec& profile, const SceneSpec& scene, double theta_rad);

// Fold Fourier coefficients onto an n-point grid: output bin r accumulates every
// coefficient with k = r (mod n). Bins are indexed by the residues 0..n-1.
cvec aliased_coefficients(const std::map<long long, cplx>& coeffs, int n);

// Add i.i.d. complex Gaussian noise (sigma per real component), keyed by
// (seed, sample index).
PhaseHistory add_noise(const PhaseHistory& ph, double sigma, std::uint64_t seed);

// Fourier coefficient of the unit-period sawtooth ramp: i / (pi * k) for k != 0
// (throws std::invalid_argument at k = 0; the mean is kRampMean).
cplx analytic_ramp_coefficient(long long k);
inline constexpr double kRampMean = 1.0;

}  // namespace sarkit::forward

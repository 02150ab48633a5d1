#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace sarkit {

using cplx = std::complex<double>;
using cvec = std::vector<cplx>;

// Working value for the propagation speed [m/s]; overridable wherever it enters.
inline constexpr double kSpeedOfLight = 2.998e8;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Square scene of physical half-width radius_m, discretized on an n_pixels x n_pixels
// grid with the symmetric index convention j in [-n/2, n/2-1], position x = j * pixel.
struct SceneSpec {
  double radius_m{1.0};
  int n_pixels{0};

  double pixel_m() const { return 2.0 * radius_m / static_cast<double>(n_pixels); }
};

void validate(const SceneSpec& scene);  // throws std::invalid_argument

// Complex-valued image on the scene grid.
// Storage is row-major: row r = j1 + n/2, col c = j2 + n/2, and the physical position
// of index (j1, j2) is (x, y) = (j1 * pixel_m, j2 * pixel_m).
struct ComplexImage {
  int n{0};
  double pixel_m{0.0};
  cvec samples;

  ComplexImage() = default;
  ComplexImage(int n_, double pixel_m_)
      : n(n_), pixel_m(pixel_m_), samples(static_cast<std::size_t>(n_) * n_) {}

  static ComplexImage zeros(const SceneSpec& scene) {
    return ComplexImage(scene.n_pixels, scene.pixel_m());
  }

  SceneSpec scene() const { return SceneSpec{0.5 * n * pixel_m, n}; }

  cplx& at(int j1, int j2) {
    return samples[static_cast<std::size_t>(j1 + n / 2) * n + (j2 + n / 2)];
  }
  const cplx& at(int j1, int j2) const {
    return samples[static_cast<std::size_t>(j1 + n / 2) * n + (j2 + n / 2)];
  }
};

// 1D complex signal on a uniform mesh; the domain convention ([-pi, pi), [-1/2, 1/2), ...)
// is stated by each producing function.
struct ComplexSignal {
  cvec samples;
};

// Radar acquisition: a frequency ladder, one elevation, and a set of azimuth angles.
struct AcquisitionGeometry {
  std::vector<double> freqs_hz;       // strictly increasing, equispaced, >= 2 entries
  double elevation_rad{0.0};          // strictly below pi/2
  std::vector<double> azimuths_rad;   // strictly increasing, span < 2*pi
  double c_mps{kSpeedOfLight};

  std::size_t n_freqs() const { return freqs_hz.size(); }
  std::size_t n_azimuths() const { return azimuths_rad.size(); }
  double delta_alpha_hz() const { return freqs_hz.size() > 1 ? freqs_hz[1] - freqs_hz[0] : 0.0; }
  double center_freq_hz() const { return 0.5 * (freqs_hz.front() + freqs_hz.back()); }
};

void validate(const AcquisitionGeometry& geom);  // throws std::invalid_argument / domain_error

// Phase-history samples: M frequencies x P azimuths, frequency-major within each
// azimuth (sample index s = i_az * M + j_freq).
struct PhaseHistory {
  std::vector<double> k_radpm;        // M physical wavenumbers, strictly increasing
  std::vector<double> azimuths_rad;   // P azimuth angles
  SceneSpec scene_ref;                // scene used at simulation time
  cvec samples;

  std::size_t n_freqs() const { return k_radpm.size(); }
  std::size_t n_azimuths() const { return azimuths_rad.size(); }

  cplx& at(std::size_t j_freq, std::size_t i_az) {
    return samples[i_az * k_radpm.size() + j_freq];
  }
  const cplx& at(std::size_t j_freq, std::size_t i_az) const {
    return samples[i_az * k_radpm.size() + j_freq];
  }

  double k_center() const { return 0.5 * (k_radpm.front() + k_radpm.back()); }
  double delta_k() const { return k_radpm.size() > 1 ? k_radpm[1] - k_radpm[0] : 0.0; }
};

void validate(const PhaseHistory& ph);  // throws std::invalid_argument

}  // namespace sarkit

#pragma once

#include <array>
#include <map>
#include <vector>

#include "sarkit/kernels.hpp"
#include "sarkit/types.hpp"

// Image formation from phase-history data: exact matched filter, filtered
// backprojection, and gridding + FFT, plus 1D partial sums and kernel convolution.
namespace sarkit::imaging {

enum class SumConvention {
  continuous,  // S(x_m) = sum_k c_k exp(i*k*x_m) on x_m = -pi + 2*pi*m/n
  discrete     // S_m = (1/n) * sum_k c_k exp(i*2*pi*m*k/n), m = 0..n-1
};

// Band-limited partial sum of Fourier coefficients over k in [k1, k2].
// Throws std::invalid_argument naming the first missing coefficient.
ComplexSignal partial_sum_1d(const std::map<long long, cplx>& coeffs, long long k1, long long k2,
                             int n, SumConvention convention = SumConvention::continuous);

// Matched-filter image: f(x) = sum_theta sum_j d(k_j, theta) * exp(i*k_j*<xi_theta, x>)
// on the scene grid. Exact (direct summation), the reference for the fast paths.
ComplexImage matched_filter(const PhaseHistory& ph, const SceneSpec& scene);

// Filtered-backprojection approximation: per azimuth, the M samples are expanded to an
// upsample*M-point range profile by zero-padded inverse DFT of the band (band-center
// demodulated), then accumulated through the projection adjoint with linear
// interpolation of the envelope and exact carrier phase per pixel.
ComplexImage backprojection(const PhaseHistory& ph, const SceneSpec& scene, int upsample = 8);

struct GridConfig {
  int oversampling = 2;  // Cartesian k-grid densification factor (>= 1)
  int half_width = 3;    // spreading-kernel half-width in oversampled cells
};

// Polar-to-Cartesian gridding with a truncated Gaussian kernel, inverse 2D FFT,
// deapodization, and central crop. Approximates matched_filter; the per-pixel digital
// frequencies are wrapped into [-pi, pi) per axis, which is exact on the integer pixel
// grid and keeps the band-pass data aligned with the matched filter's carrier.
ComplexImage grid_and_fft(const PhaseHistory& ph, const SceneSpec& scene,
                          const GridConfig& config = {});

// Reusable gridding pipeline exposing the exact adjoint pair:
//   adjoint(samples) -> image  (spread, inverse FFT, deapodize, crop; grid_and_fft's core)
//   forward(image)   -> samples (deapodize, zero-pad, forward FFT, gather)
class GriddingOperator {
 public:
  GriddingOperator(const std::vector<double>& k_radpm, const std::vector<double>& azimuths_rad,
                   const SceneSpec& scene, const GridConfig& config = {});

  cvec forward(const cvec& image_samples) const;  // N*N -> M*P
  cvec adjoint(const cvec& samples) const;        // M*P -> N*N

  std::size_t n_samples() const { return kappa_.size(); }
  std::size_t n_pixels() const { return static_cast<std::size_t>(n_) * n_; }

 private:
  int n_;            // image grid size
  int grid_;         // oversampled k-grid size G = oversampling * n
  int half_width_;
  double tau_;       // Gaussian spreading parameter (see implementation)
  std::vector<std::array<double, 2>> kappa_;  // wrapped digital frequencies per sample
  std::vector<double> deapod_;                // 1D deapodization table, index j + n/2
};

// Separable taper over the data: sample (j_freq, i_az) scaled by w_m(j) * w_p(i).
PhaseHistory apply_window(const PhaseHistory& ph, kernels::Window kind);

// Linear convolution of a scene with a kernel field sampled on the same grid
// (zero-padded to 2N x 2N spectrally, then cropped back). The kernel's origin is its
// center pixel.
ComplexImage convolve_with_kernel(const ComplexImage& image, const kernels::KernelField& kernel);

}  // namespace sarkit::imaging

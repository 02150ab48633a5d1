#pragma once

#include <string>
#include <vector>

#include "sarkit/types.hpp"

// Closed-form convolution kernels of the band-limited imaging operators, plus the
// spectral window weight families used to taper them.
namespace sarkit::kernels {

// Dirichlet kernel D_n(x) = sin((n + 1/2) x) / sin(x / 2) for real order n >= 0.
// At the removable singularities x in 2*pi*Z (detected as |sin(x/2)| < 1e-12) the
// integer-order limit 2n + 1 is returned.
double dirichlet(double order, double x);

// Modulated Dirichlet kernel of a centered band: G(x) = exp(i*K_c*x) * D_{B/2}(x).
// bandwidth >= 0; odd bandwidths give half-integer Dirichlet order (K_c is then
// half-integer for integer bands, which the real-valued k_center accommodates).
cplx offset_kernel(double k_center, int bandwidth, double x);

// Point response of one azimuth: H(x) = exp(i*K_c*x) * D_{(M-1)/2}(delta_k * x),
// identical to the sum of M unit phasors exp(i*k_j*x) on the ladder
// k_j = k_1 + (j-1)*delta_k with K_c = (k_1 + k_M)/2.
cplx h_kernel(double k_center, int n_freqs, double delta_k, double x);

struct KernelParams {
  double k_center{0.0};          // band-center wavenumber [rad/m]
  int n_freqs{0};                // M
  double delta_k{0.0};           // wavenumber step [rad/m]
  std::vector<double> thetas_rad;  // azimuth set
};

// Full point-spread field K(x, y) = sum_theta H(<xi_theta, (x, y)>) on the scene grid.
struct KernelField {
  ComplexImage field;
  KernelParams params;
};

KernelField kernel2d(const KernelParams& params, const SceneSpec& scene);

enum class Window { rectangular, fejer, hann, hamming, gaussian };

Window window_from_string(const std::string& name);  // throws on unknown name
std::string to_string(Window w);

// m symmetric taper weights in [0, 1]. fejer: 1 - |j - (m-1)/2| / ((m-1)/2);
// hann: 0.5*(1 - cos(2*pi*j/(m-1))); hamming: 0.54 - 0.46*cos(2*pi*j/(m-1));
// gaussian: exp(-0.5*(alpha*(j-(m-1)/2)/((m-1)/2))^2) with alpha = 2.5.
std::vector<double> window_weights(Window kind, int m);

}  // namespace sarkit::kernels

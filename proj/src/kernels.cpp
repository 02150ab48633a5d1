#include "sarkit/kernels.hpp"

#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sarkit::kernels {

double dirichlet(double order, double x) {
  if (!(order >= 0.0)) throw std::invalid_argument("dirichlet: order must be >= 0");
  const double s = std::sin(0.5 * x);
  if (std::abs(s) < 1e-12) return 2.0 * order + 1.0;
  return std::sin((order + 0.5) * x) / s;
}

cplx offset_kernel(double k_center, int bandwidth, double x) {
  if (bandwidth < 0) throw std::invalid_argument("offset_kernel: bandwidth must be >= 0");
  return std::polar(1.0, k_center * x) * dirichlet(0.5 * bandwidth, x);
}

cplx h_kernel(double k_center, int n_freqs, double delta_k, double x) {
  if (n_freqs < 1) throw std::invalid_argument("h_kernel: n_freqs must be >= 1");
  if (n_freqs > 1 && !(delta_k > 0.0))
    throw std::invalid_argument("h_kernel: delta_k must be positive");
  return std::polar(1.0, k_center * x) * dirichlet(0.5 * (n_freqs - 1), delta_k * x);
}

KernelField kernel2d(const KernelParams& params, const SceneSpec& scene) {
  validate(scene);
  if (params.n_freqs < 1) throw std::invalid_argument("kernel2d: n_freqs must be >= 1");
  if (params.thetas_rad.empty()) throw std::invalid_argument("kernel2d: empty azimuth set");

  KernelField out{ComplexImage::zeros(scene), params};
  const int n = scene.n_pixels;
  const int half = n / 2;
  const double h = scene.pixel_m();
  const std::size_t p = params.thetas_rad.size();

  std::vector<double> ct(p), st(p);
  for (std::size_t i = 0; i < p; ++i) {
    ct[i] = std::cos(params.thetas_rad[i]);
    st[i] = std::sin(params.thetas_rad[i]);
  }

#pragma omp parallel for schedule(static)
  for (int j1 = -half; j1 < half; ++j1) {
    for (int j2 = -half; j2 < half; ++j2) {
      const double x = j1 * h, y = j2 * h;
      cplx acc = 0.0;
      for (std::size_t i = 0; i < p; ++i)
        acc += h_kernel(params.k_center, params.n_freqs, params.delta_k, ct[i] * x + st[i] * y);
      out.field.at(j1, j2) = acc;
    }
  }
  return out;
}

Window window_from_string(const std::string& name) {
  if (name == "rectangular") return Window::rectangular;
  if (name == "fejer") return Window::fejer;
  if (name == "hann") return Window::hann;
  if (name == "hamming") return Window::hamming;
  if (name == "gaussian") return Window::gaussian;
  throw std::invalid_argument("unknown window kind: " + name);
}

std::string to_string(Window w) {
  switch (w) {
    case Window::rectangular: return "rectangular";
    case Window::fejer: return "fejer";
    case Window::hann: return "hann";
    case Window::hamming: return "hamming";
    case Window::gaussian: return "gaussian";
  }
  return "?";
}

std::vector<double> window_weights(Window kind, int m) {
  if (m < 1) throw std::invalid_argument("window_weights: m must be >= 1");
  std::vector<double> w(m, 1.0);
  if (m == 1) return w;  // every family degenerates to a single unit weight
  const double mid = 0.5 * (m - 1);
  for (int j = 0; j < m; ++j) {
    switch (kind) {
      case Window::rectangular:
        w[j] = 1.0;
        break;
      case Window::fejer:
        w[j] = 1.0 - std::abs(j - mid) / mid;
        break;
      case Window::hann:
        w[j] = 0.5 * (1.0 - std::cos(2.0 * kPi * j / (m - 1)));
        break;
      case Window::hamming:
        w[j] = 0.54 - 0.46 * std::cos(2.0 * kPi * j / (m - 1));
        break;
      case Window::gaussian: {
        const double alpha = 2.5;
        const double t = alpha * (j - mid) / mid;
        w[j] = std::exp(-0.5 * t * t);
        break;
      }
    }
  }
  return w;
}

}  // namespace sarkit::kernels

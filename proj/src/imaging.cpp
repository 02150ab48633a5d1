#include "sarkit/imaging.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "sarkit/fft.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sarkit::imaging {

namespace {

bool equispaced(const std::vector<double>& k) {
  if (k.size() < 2) return true;
  const double step = k[1] - k[0];
  for (std::size_t j = 1; j < k.size(); ++j)
    if (std::abs(k[j] - k[j - 1] - step) > 1e-9 * std::abs(step)) return false;
  return true;
}

double wrap_pm_pi(double x) { return x - 2.0 * kPi * std::floor((x + kPi) / (2.0 * kPi)); }

}  // namespace

ComplexSignal partial_sum_1d(const std::map<long long, cplx>& coeffs, long long k1, long long k2,
                             int n, SumConvention convention) {
  if (k2 < k1) throw std::invalid_argument("partial_sum_1d: k2 must be >= k1");
  if (n < 1) throw std::invalid_argument("partial_sum_1d: n must be >= 1");
  std::vector<cplx> band;
  band.reserve(static_cast<std::size_t>(k2 - k1 + 1));
  for (long long k = k1; k <= k2; ++k) {
    auto it = coeffs.find(k);
    if (it == coeffs.end())
      throw std::invalid_argument("partial_sum_1d: missing coefficient k = " + std::to_string(k));
    band.push_back(it->second);
  }
  ComplexSignal out;
  out.samples.assign(static_cast<std::size_t>(n), cplx(0.0, 0.0));
  for (int m = 0; m < n; ++m) {
    const double x = (convention == SumConvention::continuous)
                         ? -kPi + 2.0 * kPi * m / n
                         : 2.0 * kPi * m / n;
    cplx acc = 0.0;
    for (long long k = k1; k <= k2; ++k)
      acc += band[static_cast<std::size_t>(k - k1)] * std::polar(1.0, static_cast<double>(k) * x);
    out.samples[static_cast<std::size_t>(m)] =
        (convention == SumConvention::discrete) ? acc / static_cast<double>(n) : acc;
  }
  return out;
}

ComplexImage matched_filter(const PhaseHistory& ph, const SceneSpec& scene) {
  validate(ph);
  validate(scene);
  const int n = scene.n_pixels;
  const int half = n / 2;
  const double h = scene.pixel_m();
  const std::size_t m = ph.n_freqs();
  const std::size_t p = ph.n_azimuths();
  const bool ladder = equispaced(ph.k_radpm);
  const double dk = m > 1 ? ph.k_radpm[1] - ph.k_radpm[0] : 0.0;

  std::vector<double> ct(p), st(p);
  for (std::size_t i = 0; i < p; ++i) {
    ct[i] = std::cos(ph.azimuths_rad[i]);
    st[i] = std::sin(ph.azimuths_rad[i]);
  }

  ComplexImage img = ComplexImage::zeros(scene);
#pragma omp parallel for schedule(static)
  for (int j1 = -half; j1 < half; ++j1) {
    for (int j2 = -half; j2 < half; ++j2) {
      const double x = j1 * h, y = j2 * h;
      cplx acc = 0.0;
      for (std::size_t i = 0; i < p; ++i) {
        const double w = ct[i] * x + st[i] * y;
        const cplx* d = &ph.samples[i * m];
        if (ladder) {
          const cplx step = std::polar(1.0, dk * w);
          cplx rot = std::polar(1.0, ph.k_radpm[0] * w);
          cplx s = 0.0;
          for (std::size_t j = 0; j < m; ++j, rot *= step) s += d[j] * rot;
          acc += s;
        } else {
          for (std::size_t j = 0; j < m; ++j) acc += d[j] * std::polar(1.0, ph.k_radpm[j] * w);
        }
      }
      img.at(j1, j2) = acc;
    }
  }
  return img;
}

ComplexImage backprojection(const PhaseHistory& ph, const SceneSpec& scene, int upsample) {
  validate(ph);
  validate(scene);
  if (upsample < 1) throw std::invalid_argument("backprojection: upsample must be >= 1");
  if (!equispaced(ph.k_radpm))
    throw std::invalid_argument("backprojection: wavenumber ladder must be equispaced");

  const int n = scene.n_pixels;
  const int half = n / 2;
  const double h = scene.pixel_m();
  const auto m = static_cast<int>(ph.n_freqs());
  const std::size_t p = ph.n_azimuths();

  ComplexImage img = ComplexImage::zeros(scene);

  if (m == 1) {
    // Single-frequency band: the range profile is a pure carrier.
    const double k1 = ph.k_radpm[0];
    for (std::size_t i = 0; i < p; ++i) {
      const double c = std::cos(ph.azimuths_rad[i]), s = std::sin(ph.azimuths_rad[i]);
      const cplx d = ph.samples[i];
#pragma omp parallel for schedule(static)
      for (int j1 = -half; j1 < half; ++j1)
        for (int j2 = -half; j2 < half; ++j2)
          img.at(j1, j2) += d * std::polar(1.0, k1 * (j1 * h * c + j2 * h * s));
    }
    return img;
  }

  const double dk = ph.k_radpm[1] - ph.k_radpm[0];
  const int L = upsample * m;             // fine profile length (one alias period)
  const double dw = 2.0 * kPi / (L * dk); // fine profile spacing [m]
  const int m0 = (m - 1) / 2;             // integer shift that near-centers the band
  const double k_carrier = ph.k_radpm[0] + m0 * dk;

  cvec env(static_cast<std::size_t>(L));
  for (std::size_t i = 0; i < p; ++i) {
    // Demodulated envelope on the fine grid: env(w_l) = sum_j d_j exp(i*(j-m0)*dk*w_l),
    // computed as a zero-padded unnormalized inverse DFT with wrapped bin placement.
    std::fill(env.begin(), env.end(), cplx(0.0, 0.0));
    for (int j = 0; j < m; ++j) env[static_cast<std::size_t>(((j - m0) % L + L) % L)] = ph.samples[i * m + j];
    fft::transform_1d(env, +1);

    const double c = std::cos(ph.azimuths_rad[i]), s = std::sin(ph.azimuths_rad[i]);
#pragma omp parallel for schedule(static)
    for (int j1 = -half; j1 < half; ++j1) {
      for (int j2 = -half; j2 < half; ++j2) {
        const double w = j1 * h * c + j2 * h * s;
        double t = w / dw;
        t -= L * std::floor(t / L);  // envelope is periodic over the alias window
        const int l0 = static_cast<int>(t) % L;
        const double fl = t - std::floor(t);
        const cplx e = (1.0 - fl) * env[static_cast<std::size_t>(l0)] +
                       fl * env[static_cast<std::size_t>((l0 + 1) % L)];
        img.at(j1, j2) += e * std::polar(1.0, k_carrier * w);
      }
    }
  }
  return img;
}

GriddingOperator::GriddingOperator(const std::vector<double>& k_radpm,
                                   const std::vector<double>& azimuths_rad,
                                   const SceneSpec& scene, const GridConfig& config) {
  validate(scene);
  if (k_radpm.empty() || azimuths_rad.empty())
    throw std::invalid_argument("gridding: empty wavenumber or azimuth axis");
  if (config.oversampling < 1) throw std::invalid_argument("gridding: oversampling must be >= 1");
  if (config.half_width < 1) throw std::invalid_argument("gridding: half_width must be >= 1");

  n_ = scene.n_pixels;
  grid_ = config.oversampling * n_;
  half_width_ = config.half_width;
  if (grid_ <= n_)
    throw std::invalid_argument("gridding: oversampling must enlarge the grid (>= 2 for use)");

  // Gaussian parameter balancing kernel-truncation error against image-domain
  // aliasing at the crop edge: tau = pi*W / (G * sqrt(G*(G-N))).
  tau_ = kPi * half_width_ / (grid_ * std::sqrt(static_cast<double>(grid_) * (grid_ - n_)));

  const double hpix = scene.pixel_m();
  kappa_.reserve(k_radpm.size() * azimuths_rad.size());
  for (double theta : azimuths_rad) {
    const double c = std::cos(theta), s = std::sin(theta);
    for (double k : k_radpm)
      kappa_.push_back({wrap_pm_pi(k * hpix * c), wrap_pm_pi(k * hpix * s)});
  }

  // 1/w_hat per axis at image index j: w_hat(j) = G * sqrt(tau/pi) * exp(-tau*j^2).
  deapod_.resize(static_cast<std::size_t>(n_));
  const double front = grid_ * std::sqrt(tau_ / kPi);
  for (int j = -n_ / 2; j < n_ / 2; ++j)
    deapod_[static_cast<std::size_t>(j + n_ / 2)] =
        1.0 / (front * std::exp(-tau_ * static_cast<double>(j) * j));
}

cvec GriddingOperator::adjoint(const cvec& samples) const {
  if (samples.size() != kappa_.size())
    throw std::invalid_argument("gridding adjoint: sample count mismatch");
  const int G = grid_;
  const double dkap = 2.0 * kPi / G;
  cvec grid(static_cast<std::size_t>(G) * G, cplx(0.0, 0.0));

  const int W = half_width_;
  std::vector<double> wr(2 * W + 1), wc(2 * W + 1);
  for (std::size_t s = 0; s < samples.size(); ++s) {
    const double g1 = kappa_[s][0] / dkap, g2 = kappa_[s][1] / dkap;
    const int c1 = static_cast<int>(std::lround(g1)), c2 = static_cast<int>(std::lround(g2));
    for (int d = -W; d <= W; ++d) {
      const double r1 = (c1 + d) * dkap - kappa_[s][0];
      const double r2 = (c2 + d) * dkap - kappa_[s][1];
      wr[static_cast<std::size_t>(d + W)] = std::exp(-r1 * r1 / (4.0 * tau_));
      wc[static_cast<std::size_t>(d + W)] = std::exp(-r2 * r2 / (4.0 * tau_));
    }
    for (int d1 = -W; d1 <= W; ++d1) {
      const int r = ((c1 + d1) % G + G) % G;
      const double w1 = wr[static_cast<std::size_t>(d1 + W)] ;
      cplx* row = &grid[static_cast<std::size_t>(r) * G];
      for (int d2 = -W; d2 <= W; ++d2) {
        const int c = ((c2 + d2) % G + G) % G;
        row[c] += samples[s] * (w1 * wc[static_cast<std::size_t>(d2 + W)]);
      }
    }
  }

  fft::transform_2d(grid, G, G, +1);

  cvec img(static_cast<std::size_t>(n_) * n_);
  const int half = n_ / 2;
#pragma omp parallel for schedule(static)
  for (int j1 = -half; j1 < half; ++j1) {
    const int r = (j1 + G) % G;
    for (int j2 = -half; j2 < half; ++j2) {
      const int c = (j2 + G) % G;
      img[static_cast<std::size_t>(j1 + half) * n_ + (j2 + half)] =
          grid[static_cast<std::size_t>(r) * G + c] * deapod_[static_cast<std::size_t>(j1 + half)] *
          deapod_[static_cast<std::size_t>(j2 + half)];
    }
  }
  return img;
}

cvec GriddingOperator::forward(const cvec& image_samples) const {
  if (image_samples.size() != n_pixels())
    throw std::invalid_argument("gridding forward: image size mismatch");
  const int G = grid_;
  const double dkap = 2.0 * kPi / G;
  cvec grid(static_cast<std::size_t>(G) * G, cplx(0.0, 0.0));
  const int half = n_ / 2;
  for (int j1 = -half; j1 < half; ++j1) {
    const int r = (j1 + G) % G;
    for (int j2 = -half; j2 < half; ++j2) {
      const int c = (j2 + G) % G;
      grid[static_cast<std::size_t>(r) * G + c] =
          image_samples[static_cast<std::size_t>(j1 + half) * n_ + (j2 + half)] *
          deapod_[static_cast<std::size_t>(j1 + half)] * deapod_[static_cast<std::size_t>(j2 + half)];
    }
  }

  fft::transform_2d(grid, G, G, -1);

  cvec out(kappa_.size(), cplx(0.0, 0.0));
  const int W = half_width_;
#pragma omp parallel for schedule(static)
  for (std::int64_t si = 0; si < static_cast<std::int64_t>(kappa_.size()); ++si) {
    const auto s = static_cast<std::size_t>(si);
    const double g1 = kappa_[s][0] / dkap, g2 = kappa_[s][1] / dkap;
    const int c1 = static_cast<int>(std::lround(g1)), c2 = static_cast<int>(std::lround(g2));
    cplx acc = 0.0;
    for (int d1 = -W; d1 <= W; ++d1) {
      const double r1 = (c1 + d1) * dkap - kappa_[s][0];
      const double w1 = std::exp(-r1 * r1 / (4.0 * tau_));
      const int r = ((c1 + d1) % G + G) % G;
      const cplx* row = &grid[static_cast<std::size_t>(r) * G];
      for (int d2 = -W; d2 <= W; ++d2) {
        const double r2 = (c2 + d2) * dkap - kappa_[s][1];
        acc += row[((c2 + d2) % G + G) % G] * (w1 * std::exp(-r2 * r2 / (4.0 * tau_)));
      }
    }
    out[s] = acc;
  }
  return out;
}

ComplexImage grid_and_fft(const PhaseHistory& ph, const SceneSpec& scene,
                          const GridConfig& config) {
  validate(ph);
  GriddingOperator op(ph.k_radpm, ph.azimuths_rad, scene, config);
  ComplexImage img = ComplexImage::zeros(scene);
  img.samples = op.adjoint(ph.samples);
  return img;
}

PhaseHistory apply_window(const PhaseHistory& ph, kernels::Window kind) {
  validate(ph);
  const auto m = static_cast<int>(ph.n_freqs());
  const auto p = static_cast<int>(ph.n_azimuths());
  const std::vector<double> wm = kernels::window_weights(kind, m);
  const std::vector<double> wp = kernels::window_weights(kind, p);
  PhaseHistory out = ph;
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < m; ++j)
      out.samples[static_cast<std::size_t>(i) * m + j] *= wm[static_cast<std::size_t>(j)] *
                                                          wp[static_cast<std::size_t>(i)];
  return out;
}

ComplexImage convolve_with_kernel(const ComplexImage& image, const kernels::KernelField& kernel) {
  const int n = image.n;
  if (n <= 0) throw std::invalid_argument("convolve_with_kernel: empty image");
  if (kernel.field.n != n)
    throw std::invalid_argument("convolve_with_kernel: kernel grid does not match image grid");
  const int L = 2 * n;
  const int half = n / 2;

  cvec a(static_cast<std::size_t>(L) * L, cplx(0.0, 0.0));
  cvec b(static_cast<std::size_t>(L) * L, cplx(0.0, 0.0));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      a[static_cast<std::size_t>(r) * L + c] = image.samples[static_cast<std::size_t>(r) * n + c];
  // Kernel origin (its center pixel) goes to storage (0, 0); offsets wrap mod 2N.
  for (int o1 = -half; o1 < half; ++o1)
    for (int o2 = -half; o2 < half; ++o2)
      b[static_cast<std::size_t>((o1 + L) % L) * L + ((o2 + L) % L)] = kernel.field.at(o1, o2);

  fft::transform_2d(a, L, L, -1);
  fft::transform_2d(b, L, L, -1);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] *= b[i];
  fft::transform_2d(a, L, L, +1);
  const double scale = 1.0 / (static_cast<double>(L) * L);

  ComplexImage out(n, image.pixel_m);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      out.samples[static_cast<std::size_t>(r) * n + c] =
          a[static_cast<std::size_t>(r) * L + c] * scale;
  return out;
}

}  // namespace sarkit::imaging

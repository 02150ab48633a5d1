#include "sarkit/phasestats.hpp"

#include <cmath>
#include <cstdint>

#include "sarkit/kernels.hpp"
#include "sarkit/rng.hpp"
#include "sarkit/scene.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sarkit::phasestats {

double expected_coefficient_power(const std::vector<double>& magnitudes) {
  double acc = 0.0;
  for (double m : magnitudes) acc += m * m;
  return acc;
}

std::vector<double> expected_partial_sum_power(const std::vector<double>& magnitudes,
                                               int bandwidth) {
  const auto n = static_cast<int>(magnitudes.size());
  if (n < 1) throw std::invalid_argument("expected_partial_sum_power: empty magnitudes");
  if (bandwidth < 0 || bandwidth > n - 1)
    throw std::invalid_argument("expected_partial_sum_power: bandwidth must be in [0, N-1]");
  // |D_{B/2}(2*pi*d/N)|^2 table over circular lags d.
  std::vector<double> d2(static_cast<std::size_t>(n));
  for (int d = 0; d < n; ++d) {
    const double v = kernels::dirichlet(0.5 * bandwidth, 2.0 * kPi * d / n);
    d2[static_cast<std::size_t>(d)] = v * v;
  }
  std::vector<double> out(static_cast<std::size_t>(n), 0.0);
  const double scale = 1.0 / (static_cast<double>(n) * n);
  for (int m = 0; m < n; ++m) {
    double acc = 0.0;
    for (int j = 0; j < n; ++j) {
      const int d = ((m - j) % n + n) % n;
      acc += magnitudes[static_cast<std::size_t>(j)] * magnitudes[static_cast<std::size_t>(j)] *
             d2[static_cast<std::size_t>(d)];
    }
    out[static_cast<std::size_t>(m)] = scale * acc;
  }
  return out;
}

namespace {

// Band coefficients f_hat_k, k = k1..k2, of one random-phase draw of |f|.
cvec band_coefficients(const cvec& f, long long k1, long long k2) {
  const auto n = static_cast<long long>(f.size());
  cvec coeffs(static_cast<std::size_t>(k2 - k1 + 1), cplx(0.0, 0.0));
  for (long long k = k1; k <= k2; ++k) {
    cplx acc = 0.0;
    const double ang = -2.0 * kPi * static_cast<double>(k) / static_cast<double>(n);
    const cplx step = std::polar(1.0, ang);
    cplx rot = 1.0;
    for (long long j = 0; j < n; ++j, rot *= step) acc += f[static_cast<std::size_t>(j)] * rot;
    coeffs[static_cast<std::size_t>(k - k1)] = acc;
  }
  return coeffs;
}

}  // namespace

std::vector<double> monte_carlo_partial_sum_power(const std::vector<double>& magnitudes,
                                                  long long k1, long long k2, int trials,
                                                  std::uint64_t seed) {
  const auto n = static_cast<int>(magnitudes.size());
  if (n < 1) throw std::invalid_argument("monte_carlo_partial_sum_power: empty magnitudes");
  if (k2 < k1) throw std::invalid_argument("monte_carlo_partial_sum_power: k2 must be >= k1");
  if (trials < 1) throw std::invalid_argument("monte_carlo_partial_sum_power: trials must be >= 1");

  // Pass 1: per-trial band coefficients (independent, order-free).
  const auto bw = static_cast<std::size_t>(k2 - k1 + 1);
  cvec all(static_cast<std::size_t>(trials) * bw);
#pragma omp parallel for schedule(static)
  for (int t = 0; t < trials; ++t) {
    cvec f(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      const double phi = rng::uniform_phase(seed, static_cast<std::uint64_t>(t),
                                            static_cast<std::uint64_t>(j));
      f[static_cast<std::size_t>(j)] =
          magnitudes[static_cast<std::size_t>(j)] * cplx(std::cos(phi), std::sin(phi));
    }
    const cvec c = band_coefficients(f, k1, k2);
    std::copy(c.begin(), c.end(), all.begin() + static_cast<std::ptrdiff_t>(t * bw));
  }

  // Pass 2: accumulate per output index over trials in a fixed order, so the result
  // is identical for any thread count.
  std::vector<double> acc(static_cast<std::size_t>(n), 0.0);
#pragma omp parallel for schedule(static)
  for (int m = 0; m < n; ++m) {
    const double base = 2.0 * kPi * static_cast<double>(m) / n;
    cvec rot(bw);
    for (std::size_t q = 0; q < bw; ++q)
      rot[q] = std::polar(1.0, base * static_cast<double>(k1 + static_cast<long long>(q)));
    double a = 0.0;
    for (int t = 0; t < trials; ++t) {
      const cplx* c = &all[static_cast<std::size_t>(t) * bw];
      cplx s = 0.0;
      for (std::size_t q = 0; q < bw; ++q) s += c[q] * rot[q];
      a += std::norm(s / static_cast<double>(n));
    }
    acc[static_cast<std::size_t>(m)] = a / trials;
  }
  return acc;
}

CorrelatedPhasePower correlated_phase_power(const std::vector<double>& magnitudes, double delta,
                                            long long k_center, int bandwidth, int trials,
                                            std::uint64_t seed) {
  const auto n = static_cast<int>(magnitudes.size());
  if (n < 1) throw std::invalid_argument("correlated_phase_power: empty magnitudes");
  if (!(delta > 0.0)) throw std::invalid_argument("correlated_phase_power: delta must be positive");
  if (bandwidth < 0) throw std::invalid_argument("correlated_phase_power: bandwidth must be >= 0");
  if (trials < 1) throw std::invalid_argument("correlated_phase_power: trials must be >= 1");

  const long long k1 = k_center - bandwidth / 2;
  const long long k2 = k_center + (bandwidth + 1) / 2;
  const auto bw = static_cast<std::size_t>(k2 - k1 + 1);

  ComplexSignal base;
  base.samples.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) base.samples[static_cast<std::size_t>(j)] = magnitudes[static_cast<std::size_t>(j)];

  cvec all(static_cast<std::size_t>(trials) * bw);
#pragma omp parallel for schedule(static)
  for (int t = 0; t < trials; ++t) {
    const ComplexSignal draw =
        scene::apply_correlated_phases(base, delta, rng::key(seed, static_cast<std::uint64_t>(t)));
    const cvec c = band_coefficients(draw.samples, k1, k2);
    std::copy(c.begin(), c.end(), all.begin() + static_cast<std::ptrdiff_t>(t * bw));
  }

  std::vector<double> emp(static_cast<std::size_t>(n), 0.0);
#pragma omp parallel for schedule(static)
  for (int m = 0; m < n; ++m) {
    const double basang = 2.0 * kPi * static_cast<double>(m) / n;
    cvec rot(bw);
    for (std::size_t q = 0; q < bw; ++q)
      rot[q] = std::polar(1.0, basang * static_cast<double>(k1 + static_cast<long long>(q)));
    double a = 0.0;
    for (int t = 0; t < trials; ++t) {
      const cplx* c = &all[static_cast<std::size_t>(t) * bw];
      cplx s = 0.0;
      for (std::size_t q = 0; q < bw; ++q) s += c[q] * rot[q];
      a += std::norm(s / static_cast<double>(n));
    }
    emp[static_cast<std::size_t>(m)] = a / trials;
  }

  // Hard-cutoff prediction (2*delta / (2*pi)^2) * Int |f(y)|^2 |D_{B/2}(x-y)|^2 dy with
  // the integral discretized by the grid's Riemann sum (2*pi/N per sample):
  // analytic(m) = (delta / (pi*N)) * sum_j |f_j|^2 * |D_{B/2}(2*pi*(m-j)/N)|^2.
  std::vector<double> ana(static_cast<std::size_t>(n), 0.0);
  std::vector<double> d2(static_cast<std::size_t>(n));
  for (int d = 0; d < n; ++d) {
    const double v = kernels::dirichlet(0.5 * bandwidth, 2.0 * kPi * d / n);
    d2[static_cast<std::size_t>(d)] = v * v;
  }
  const double scale = delta / (kPi * n);
  for (int m = 0; m < n; ++m) {
    double acc = 0.0;
    for (int j = 0; j < n; ++j) {
      const int d = ((m - j) % n + n) % n;
      acc += magnitudes[static_cast<std::size_t>(j)] * magnitudes[static_cast<std::size_t>(j)] *
             d2[static_cast<std::size_t>(d)];
    }
    ana[static_cast<std::size_t>(m)] = scale * acc;
  }
  return {std::move(emp), std::move(ana)};
}

}  // namespace sarkit::phasestats

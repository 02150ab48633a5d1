#pragma once

#include <cstdint>
#include <vector>

#include "sarkit/types.hpp"

// Expected magnitudes of Fourier data and band-limited partial sums under random
// phase assignment, with Monte Carlo estimators for cross-checking.
namespace sarkit::phasestats {

// E |f_hat_k|^2 = sum_j |f_j|^2 for every k, when each sample's phase is i.i.d.
// uniform (the unnormalized DFT convention f_hat_k = sum_j f_j exp(-2*pi*i*k*j/N)).
double expected_coefficient_power(const std::vector<double>& magnitudes);

// E |S_m|^2 for the discrete partial sum S_m = (1/N) sum_{k=K1..K2} f_hat_k e^{2*pi*i*m*k/N}
// under i.i.d. uniform phases: the circular convolution
//   N^{-2} * (|f|^2 (*) |D_{B/2}(2*pi*(.)/N)|^2)_m,   B = K2 - K1.
// Depends on the band only through its width B, not its center.
std::vector<double> expected_partial_sum_power(const std::vector<double>& magnitudes,
                                               int bandwidth);

// Monte Carlo estimate of E |S_m|^2 over `trials` random-phase draws (trial t keys its
// phases by (seed, t, j)). Deterministic for fixed inputs regardless of threading.
std::vector<double> monte_carlo_partial_sum_power(const std::vector<double>& magnitudes,
                                                  long long k1, long long k2, int trials,
                                                  std::uint64_t seed);

struct CorrelatedPhasePower {
  std::vector<double> empirical;  // Monte Carlo mean of |S(x_m)|^2 under block phases
  std::vector<double> analytic;   // hard-cutoff prediction 2*delta-scaled (see below)
};

// Partial sum power when phases are piecewise-constant on blocks of width delta
// (apply_correlated_phases) over [-pi, pi), band k in [K_c - B/2, K_c + B/2].
// The analytic vector is the short-correlation prediction
//   (2*delta / (2*pi)^2) * Integral |f(y)|^2 |D_{B/2}(x - y)|^2 dy
// derived from a hard cutoff E[e^{i(phi(x)-phi(y))}] = 1_{|x-y| < delta}. Fixed-width
// blocks realize only half that correlation area (the within-block probability decays
// linearly from 1 to 0 across |x-y| in [0, delta]), so block-model Monte Carlo means
// track analytic/2 at heuristic accuracy; callers compare accordingly.
// Valid when K_c is not large relative to 1/delta.
CorrelatedPhasePower correlated_phase_power(const std::vector<double>& magnitudes, double delta,
                                            long long k_center, int bandwidth, int trials,
                                            std::uint64_t seed);

}  // namespace sarkit::phasestats

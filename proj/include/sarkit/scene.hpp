#pragma once

#include <cstdint>
#include <vector>

#include "sarkit/types.hpp"

// Synthetic scene and signal generators used as simulation inputs and test subjects.
namespace sarkit::scene {

struct PointScatterer {
  double x_m{0.0};
  double y_m{0.0};
  cplx amplitude{1.0, 0.0};
};

// Sparse scene: each point snaps to the nearest pixel (amplitudes at the same pixel
// accumulate). Throws std::invalid_argument naming the first point outside the scene.
ComplexImage point_scatterers(const SceneSpec& scene, const std::vector<PointScatterer>& points);

// Unit step on [-pi, pi): 0 on [-pi, 0), 1 on [0, pi), sampled at x_j = -pi + 2*pi*j/n.
ComplexSignal step_signal(int n);

// Periodic sawtooth on [-1/2, 1/2): 2x+2 on [-1/2, 0), 2x on [0, 1/2), sampled at
// x_j = -1/2 + j/n. Its mean is 1.
ComplexSignal ramp_signal(int n);

// Canonical 10-ellipse Shepp-Logan head phantom magnitude on the scene grid mapped to
// [-1, 1)^2; values lie in [0, 1]. (Ellipse table documented in the implementation.)
ComplexImage shepp_logan_magnitude(int n);

// Replace each element's phase with an i.i.d. uniform draw on [-pi, pi) keyed by
// (seed, element index); magnitudes are preserved to within 1 ulp (exactly for zeros).
cvec apply_random_phases(const cvec& in, std::uint64_t seed);
ComplexImage apply_random_phases(const ComplexImage& in, std::uint64_t seed);
ComplexSignal apply_random_phases(const ComplexSignal& in, std::uint64_t seed);

// Piecewise-constant random phases on blocks of physical width delta over [-pi, pi)
// (the signal's domain); block phases are i.i.d. uniform keyed by (seed, block index).
// delta >= 2*pi yields a single global phase; delta of one pixel matches
// apply_random_phases distributionally.
ComplexSignal apply_correlated_phases(const ComplexSignal& in, double delta, std::uint64_t seed);

}  // namespace sarkit::scene

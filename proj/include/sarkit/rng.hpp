#pragma once

#include <cmath>
#include <cstdint>
#include <utility>

#include "sarkit/types.hpp"

// Counter-based random numbers: every draw is a pure function of (seed, indices),
// so parallel fills are order-independent and reruns are byte-identical.
// The generator is the splitmix64 finalizer applied to a mixed key; its statistical
// quality is ample for Monte Carlo work at the trial counts used here.
namespace sarkit::rng {

inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t key(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                         std::uint64_t c = 0) {
  std::uint64_t h = mix64(seed);
  h = mix64(h ^ a);
  h = mix64(h ^ b);
  h = mix64(h ^ c);
  return h;
}

// Uniform in [0, 1): 53 mantissa bits of the hashed key.
inline double uniform01(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                        std::uint64_t c = 0) {
  return static_cast<double>(key(seed, a, b, c) >> 11) * 0x1.0p-53;
}

// Uniform phase in [-pi, pi).
inline double uniform_phase(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                            std::uint64_t c = 0) {
  return -kPi + 2.0 * kPi * uniform01(seed, a, b, c);
}

// Pair of independent standard normals (Box-Muller); consumes sub-keys (.., 0) and (.., 1).
inline std::pair<double, double> gaussian_pair(std::uint64_t seed, std::uint64_t a,
                                               std::uint64_t b = 0) {
  const double u1 = uniform01(seed, a, b, 0);
  const double u2 = uniform01(seed, a, b, 1);
  const double r = std::sqrt(-2.0 * std::log(1.0 - u1));  // 1-u1 in (0,1] keeps log finite
  return {r * std::cos(2.0 * kPi * u2), r * std::sin(2.0 * kPi * u2)};
}

}  // namespace sarkit::rng

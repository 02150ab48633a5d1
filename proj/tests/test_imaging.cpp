#include <doctest.h>

#include <cmath>
#include <map>
#include <stdexcept>

#include "sarkit/forward.hpp"
#include "sarkit/geometry.hpp"
#include "sarkit/imaging.hpp"
#include "sarkit/scene.hpp"
#include "test_helpers.hpp"

using namespace sarkit;
using test_helpers::rel_l2;

namespace {

// Alias-free X-band acquisition scaled down for tests: 500 MHz over M rungs,
// 30 deg elevation, a 1 deg arc of P looks around 50 deg azimuth.
AcquisitionGeometry bench_geometry(int m, int p) {
  AcquisitionGeometry geom;
  geom.freqs_hz.resize(m);
  for (int j = 0; j < m; ++j)
    geom.freqs_hz[j] = 9.75e9 + 500e6 * static_cast<double>(j) / (m - 1);
  geom.elevation_rad = 30.0 * kPi / 180.0;
  geom.azimuths_rad.resize(p);
  const double center = 50.0 * kPi / 180.0, span = 1.0 * kPi / 180.0;
  for (int i = 0; i < p; ++i)
    geom.azimuths_rad[i] = center + span * (static_cast<double>(i) / (p - 1) - 0.5);
  return geom;
}

PhaseHistory bench_data(const SceneSpec& scene, int m, int p) {
  const ComplexImage img = scene::point_scatterers(
      scene, {{0.0, 0.0, 1.0}, {2.0, -1.5, cplx(0.0, 0.8)}, {-2.5, 1.0, 0.6}});
  return forward::simulate_phase_history(img, bench_geometry(m, p));
}

}  // namespace

TEST_CASE("1D partial sums match direct evaluation in both conventions") {
  std::map<long long, cplx> coeffs;
  coeffs[-2] = cplx(0.5, -1.0);
  coeffs[-1] = cplx(0.0, 2.0);
  coeffs[0] = cplx(1.0, 0.0);
  coeffs[1] = cplx(0.0, -1.0);
  coeffs[2] = cplx(-0.25, 0.0);
  const int n = 8;

  SUBCASE("continuous convention samples x in [-pi, pi)") {
    const auto s = imaging::partial_sum_1d(coeffs, -2, 2, n, imaging::SumConvention::continuous);
    REQUIRE(s.samples.size() == static_cast<std::size_t>(n));
    for (int m = 0; m < n; ++m) {
      const double x = -kPi + 2.0 * kPi * m / n;
      cplx want = 0.0;
      for (long long k = -2; k <= 2; ++k)
        want += coeffs[k] * std::polar(1.0, static_cast<double>(k) * x);
      CHECK(std::abs(s.samples[static_cast<std::size_t>(m)] - want) < 1e-12);
    }
  }
  SUBCASE("discrete convention is the normalized inverse DFT restriction") {
    const auto s = imaging::partial_sum_1d(coeffs, -2, 2, n, imaging::SumConvention::discrete);
    for (int m = 0; m < n; ++m) {
      cplx want = 0.0;
      for (long long k = -2; k <= 2; ++k)
        want += coeffs[k] * std::polar(1.0, 2.0 * kPi * static_cast<double>(m * k) / n);
      want /= static_cast<double>(n);
      CHECK(std::abs(s.samples[static_cast<std::size_t>(m)] - want) < 1e-12);
    }
  }
  SUBCASE("a sub-band uses only the requested coefficients") {
    const auto s = imaging::partial_sum_1d(coeffs, 0, 1, n);
    for (int m = 0; m < n; ++m) {
      const double x = -kPi + 2.0 * kPi * m / n;
      const cplx want = coeffs[0] + coeffs[1] * std::polar(1.0, x);
      CHECK(std::abs(s.samples[static_cast<std::size_t>(m)] - want) < 1e-12);
    }
  }
  SUBCASE("missing coefficients are reported by index") {
    CHECK_THROWS_WITH_AS(imaging::partial_sum_1d(coeffs, -2, 3, n),
                         doctest::Contains("k = 3"), std::invalid_argument);
    CHECK_THROWS_AS(imaging::partial_sum_1d(coeffs, 2, 1, n), std::invalid_argument);
    CHECK_THROWS_AS(imaging::partial_sum_1d(coeffs, 0, 1, 0), std::invalid_argument);
  }
}

TEST_CASE("matched filter equals the direct adjoint sum") {
  const SceneSpec scene{4.0, 16};
  PhaseHistory ph;
  ph.k_radpm = {200.0, 201.5, 203.0, 204.5};
  ph.azimuths_rad = {0.7, 0.8, 0.9};
  ph.scene_ref = scene;
  ph.samples = test_helpers::random_cvec(12, 3);

  const ComplexImage img = imaging::matched_filter(ph, scene);
  const int half = scene.n_pixels / 2;
  const double h = scene.pixel_m();
  for (int j1 = -half; j1 < half; ++j1)
    for (int j2 = -half; j2 < half; ++j2) {
      cplx want = 0.0;
      for (std::size_t i = 0; i < ph.n_azimuths(); ++i)
        for (std::size_t j = 0; j < ph.n_freqs(); ++j) {
          const double w =
              j1 * h * std::cos(ph.azimuths_rad[i]) + j2 * h * std::sin(ph.azimuths_rad[i]);
          want += ph.at(j, i) * std::polar(1.0, ph.k_radpm[j] * w);
        }
      CHECK(std::abs(img.at(j1, j2) - want) < 1e-9 * std::max(1.0, std::abs(want)));
    }
}

TEST_CASE("matched filter accepts non-equispaced wavenumber ladders") {
  const SceneSpec scene{2.0, 8};
  PhaseHistory ph;
  ph.k_radpm = {100.0, 101.0, 103.0};  // unequal steps take the generic path
  ph.azimuths_rad = {0.5};
  ph.scene_ref = scene;
  ph.samples = test_helpers::random_cvec(3, 8);
  const ComplexImage img = imaging::matched_filter(ph, scene);
  const double h = scene.pixel_m();
  cplx want = 0.0;
  for (std::size_t j = 0; j < 3; ++j)
    want += ph.at(j, 0) *
            std::polar(1.0, ph.k_radpm[j] * (3 * h * std::cos(0.5) - 2 * h * std::sin(0.5)));
  CHECK(std::abs(img.at(3, -2) - want) < 1e-10);
}

TEST_CASE("backprojection approaches the matched filter as upsampling grows") {
  const SceneSpec scene{5.0, 32};
  const PhaseHistory ph = bench_data(scene, 32, 16);
  const ComplexImage mf = imaging::matched_filter(ph, scene);
  const double e2 = rel_l2(imaging::backprojection(ph, scene, 2).samples, mf.samples);
  const double e8 = rel_l2(imaging::backprojection(ph, scene, 8).samples, mf.samples);
  CHECK(e8 < 5e-2);
  CHECK(e8 < e2);
  CHECK_THROWS_AS(imaging::backprojection(ph, scene, 0), std::invalid_argument);
}

TEST_CASE("gridding operator forward/adjoint form an exact inner-product pair") {
  const SceneSpec scene{5.0, 16};
  const AcquisitionGeometry geom = bench_geometry(12, 5);
  const auto ks = geometry::wavenumbers(geom);
  const imaging::GriddingOperator op(ks, geom.azimuths_rad, scene, {});
  REQUIRE(op.n_samples() == 60);
  REQUIRE(op.n_pixels() == 256);

  for (int rep = 0; rep < 3; ++rep) {
    const cvec x = test_helpers::random_cvec(op.n_pixels(), 40 + rep);
    const cvec y = test_helpers::random_cvec(op.n_samples(), 50 + rep);
    const cplx lhs = test_helpers::inner(op.forward(x), y);
    const cplx rhs = test_helpers::inner(x, op.adjoint(y));
    CHECK(std::abs(lhs - rhs) < 1e-12 * std::abs(lhs));
  }
}

TEST_CASE("gridded reconstruction tracks the matched filter") {
  const SceneSpec scene{5.0, 32};
  const PhaseHistory ph = bench_data(scene, 32, 16);
  const ComplexImage mf = imaging::matched_filter(ph, scene);
  const ComplexImage fast = imaging::grid_and_fft(ph, scene);
  CHECK(rel_l2(fast.samples, mf.samples) < 5e-2);

  SUBCASE("a denser spreading kernel tightens the match") {
    const ComplexImage finer = imaging::grid_and_fft(ph, scene, {2, 6});
    CHECK(rel_l2(finer.samples, mf.samples) < rel_l2(fast.samples, mf.samples));
  }
}

TEST_CASE("windowing scales each sample by the separable taper") {
  const SceneSpec scene{5.0, 16};
  const PhaseHistory ph = bench_data(scene, 8, 5);
  const PhaseHistory tapered = imaging::apply_window(ph, kernels::Window::hann);
  const auto wm = kernels::window_weights(kernels::Window::hann, 8);
  const auto wp = kernels::window_weights(kernels::Window::hann, 5);
  for (std::size_t i = 0; i < ph.n_azimuths(); ++i)
    for (std::size_t j = 0; j < ph.n_freqs(); ++j)
      CHECK(std::abs(tapered.at(j, i) - ph.at(j, i) * wm[j] * wp[i]) < 1e-15);
  // Rectangular windowing is the identity.
  const PhaseHistory rect = imaging::apply_window(ph, kernels::Window::rectangular);
  CHECK(rect.samples == ph.samples);
}

TEST_CASE("kernel convolution matches the direct spatial sum") {
  const SceneSpec scene{2.0, 8};
  ComplexImage img = ComplexImage::zeros(scene);
  img.samples = test_helpers::random_cvec(img.samples.size(), 61);

  kernels::KernelParams params;
  params.k_center = 40.0;
  params.n_freqs = 6;
  params.delta_k = 1.3;
  params.thetas_rad = {0.75, 0.85, 0.95};
  const auto field = kernels::kernel2d(params, scene);

  const ComplexImage out = imaging::convolve_with_kernel(img, field);
  const int half = scene.n_pixels / 2;
  for (int j1 = -half; j1 < half; ++j1)
    for (int j2 = -half; j2 < half; ++j2) {
      cplx want = 0.0;
      for (int a = -half; a < half; ++a)
        for (int b = -half; b < half; ++b) {
          const int d1 = j1 - a, d2 = j2 - b;
          if (d1 < -half || d1 >= half || d2 < -half || d2 >= half) continue;
          want += img.at(a, b) * field.field.at(d1, d2);
        }
      CHECK(std::abs(out.at(j1, j2) - want) < 1e-9 * std::max(1.0, std::abs(want)));
    }
}

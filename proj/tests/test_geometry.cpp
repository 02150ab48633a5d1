#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "sarkit/geometry.hpp"
#include "test_helpers.hpp"

using namespace sarkit;

namespace {

AcquisitionGeometry small_geometry() {
  AcquisitionGeometry geom;
  geom.freqs_hz = {9.7e9, 9.8e9, 9.9e9, 10.0e9, 10.1e9};
  geom.elevation_rad = 30.0 * kPi / 180.0;
  geom.azimuths_rad = {0.80, 0.85, 0.90};
  return geom;
}

}  // namespace

TEST_CASE("wavenumber matches 4*pi*alpha*cos(phi)/c") {
  const double alpha = 10.0e9;
  const double phi = 30.0 * kPi / 180.0;
  const double c = 2.998e8;
  const double expected = 4.0 * kPi * alpha * std::cos(phi) / c;
  CHECK(geometry::wavenumber(alpha, phi, c) == doctest::Approx(expected).epsilon(1e-15));

  // Default propagation speed is the library constant.
  CHECK(geometry::wavenumber(alpha, phi) ==
        doctest::Approx(4.0 * kPi * alpha * std::cos(phi) / kSpeedOfLight).epsilon(1e-15));

  // A vertical look (phi = 0) maximizes k; grazing shrinks it by cos(phi).
  CHECK(geometry::wavenumber(alpha, 0.0, c) > geometry::wavenumber(alpha, 1.2, c));
}

TEST_CASE("wavenumber rejects nonphysical inputs") {
  CHECK_THROWS_AS(geometry::wavenumber(0.0, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(geometry::wavenumber(-1.0, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(geometry::wavenumber(1e9, kPi / 2), std::domain_error);
  CHECK_THROWS_AS(geometry::wavenumber(1e9, -kPi / 2), std::domain_error);
  CHECK_THROWS_AS(geometry::wavenumber(1e9, 0.1, 0.0), std::invalid_argument);
}

TEST_CASE("wavenumbers maps the whole ladder and stays increasing") {
  const AcquisitionGeometry geom = small_geometry();
  const auto ks = geometry::wavenumbers(geom);
  REQUIRE(ks.size() == geom.freqs_hz.size());
  for (std::size_t j = 0; j < ks.size(); ++j) {
    const double expected =
        4.0 * kPi * geom.freqs_hz[j] * std::cos(geom.elevation_rad) / geom.c_mps;
    CHECK(ks[j] == doctest::Approx(expected).epsilon(1e-15));
  }
  for (std::size_t j = 1; j < ks.size(); ++j) CHECK(ks[j] > ks[j - 1]);
}

TEST_CASE("digital frequencies are frequency-major and equal k*h*(cos, sin)") {
  const AcquisitionGeometry geom = small_geometry();
  const SceneSpec scene{5.0, 8};
  const auto dig = geometry::digital_frequencies(geom, scene);
  const auto ks = geometry::wavenumbers(geom);
  const double h = scene.pixel_m();
  REQUIRE(dig.size() == ks.size() * geom.azimuths_rad.size());
  for (std::size_t i = 0; i < geom.azimuths_rad.size(); ++i) {
    const double theta = geom.azimuths_rad[i];
    for (std::size_t j = 0; j < ks.size(); ++j) {
      const auto& kk = dig[i * ks.size() + j];  // azimuth-major blocks of M freqs
      CHECK(kk[0] == doctest::Approx(ks[j] * h * std::cos(theta)).epsilon(1e-14));
      CHECK(kk[1] == doctest::Approx(ks[j] * h * std::sin(theta)).epsilon(1e-14));
    }
  }
}

TEST_CASE("alias-free radii match their closed forms") {
  const double c = 2.998e8;
  const double phi = 30.0 * kPi / 180.0;
  SUBCASE("scene radius from the frequency step") {
    const double da = 600e6 / 511.0;  // 600 MHz band over 512 rungs
    const double expected = c / (4.0 * da * std::cos(phi));
    CHECK(geometry::max_scene_radius(da, phi, c) == doctest::Approx(expected).epsilon(1e-15));
    // Numerically ~73.7 m for this ladder: a 100 m scene would alias.
    CHECK(geometry::max_scene_radius(da, phi, c) == doctest::Approx(73.7).epsilon(1e-2));
  }
  SUBCASE("cross-range radius from the azimuth step") {
    const double amax = 10.3e9;
    const double dth = 3.0 * kPi / 180.0 / 127.0;
    const double expected = c / (4.0 * amax * std::cos(phi) * dth);
    CHECK(geometry::max_crossrange_radius(amax, phi, dth, c) ==
          doctest::Approx(expected).epsilon(1e-15));
  }
  SUBCASE("guards") {
    CHECK_THROWS_AS(geometry::max_scene_radius(0.0, phi, c), std::domain_error);
    CHECK_THROWS_AS(geometry::max_crossrange_radius(1e9, phi, 0.0, c), std::domain_error);
    CHECK_THROWS_AS(geometry::max_crossrange_radius(0.0, phi, 0.01, c), std::domain_error);
  }
}

TEST_CASE("geometry validation flags malformed inputs") {
  AcquisitionGeometry geom = small_geometry();
  CHECK_NOTHROW(validate(geom));

  SUBCASE("too few frequencies") {
    geom.freqs_hz = {10e9};
    CHECK_THROWS_AS(validate(geom), std::invalid_argument);
  }
  SUBCASE("non-increasing frequencies") {
    geom.freqs_hz = {10e9, 10e9, 10.2e9};
    CHECK_THROWS_AS(validate(geom), std::invalid_argument);
  }
  SUBCASE("unequal frequency spacing") {
    geom.freqs_hz = {10.0e9, 10.1e9, 10.3e9};
    CHECK_THROWS_AS(validate(geom), std::invalid_argument);
  }
  SUBCASE("nonpositive frequencies") {
    geom.freqs_hz = {-1e9, 1e9, 3e9};
    CHECK_THROWS_AS(validate(geom), std::invalid_argument);
  }
  SUBCASE("grazing elevation") {
    geom.elevation_rad = kPi / 2;
    CHECK_THROWS_AS(validate(geom), std::domain_error);
  }
  SUBCASE("no azimuths") {
    geom.azimuths_rad.clear();
    CHECK_THROWS_AS(validate(geom), std::invalid_argument);
  }
  SUBCASE("non-increasing azimuths") {
    geom.azimuths_rad = {0.9, 0.8};
    CHECK_THROWS_AS(validate(geom), std::invalid_argument);
  }
  SUBCASE("azimuth span of a full turn") {
    geom.azimuths_rad = {0.0, 2.0 * kPi};
    CHECK_THROWS_AS(validate(geom), std::invalid_argument);
  }
}

TEST_CASE("scene validation enforces even positive grids") {
  CHECK_NOTHROW(validate(SceneSpec{1.0, 4}));
  CHECK_THROWS_AS(validate(SceneSpec{0.0, 4}), std::invalid_argument);
  CHECK_THROWS_AS(validate(SceneSpec{1.0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(validate(SceneSpec{1.0, 5}), std::invalid_argument);
  CHECK(SceneSpec{5.0, 10}.pixel_m() == doctest::Approx(1.0));
}

TEST_CASE("acquisition helpers report ladder step and center") {
  const AcquisitionGeometry geom = small_geometry();
  CHECK(geom.delta_alpha_hz() == doctest::Approx(1e8));
  CHECK(geom.center_freq_hz() == doctest::Approx(9.9e9));
}

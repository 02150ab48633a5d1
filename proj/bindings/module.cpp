// Python bindings for the main sarkit operations.
//
// Complex images cross the boundary as 2D numpy arrays (complex128, row-major,
// row index j1 + n/2) paired with the scene half-width; phase histories keep
// their axis vectors alongside a flat frequency-major sample array.

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sarkit/forward.hpp"
#include "sarkit/geometry.hpp"
#include "sarkit/imaging.hpp"
#include "sarkit/io.hpp"
#include "sarkit/kernels.hpp"
#include "sarkit/phasestats.hpp"
#include "sarkit/scene.hpp"
#include "sarkit/solver.hpp"

namespace py = pybind11;
using namespace sarkit;

namespace {

py::array_t<cplx> image_to_array(const ComplexImage& img) {
  py::array_t<cplx> out({img.n, img.n});
  std::copy(img.samples.begin(), img.samples.end(), out.mutable_data());
  return out;
}

ComplexImage image_from_array(const py::array_t<cplx, py::array::c_style | py::array::forcecast>& arr,
                              double radius_m) {
  if (arr.ndim() != 2 || arr.shape(0) != arr.shape(1))
    throw std::invalid_argument("image array must be square (n x n)");
  const int n = static_cast<int>(arr.shape(0));
  ComplexImage img = ComplexImage::zeros(SceneSpec{radius_m, n});
  std::copy(arr.data(), arr.data() + img.samples.size(), img.samples.begin());
  return img;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "spotlight-SAR toolkit: simulation, image formation, kernels, reconstruction";

  m.attr("SPEED_OF_LIGHT_MPS") = kSpeedOfLight;

  py::class_<SceneSpec>(m, "SceneSpec")
      .def(py::init<double, int>(), py::arg("radius_m"), py::arg("n_pixels"))
      .def_readwrite("radius_m", &SceneSpec::radius_m)
      .def_readwrite("n_pixels", &SceneSpec::n_pixels)
      .def("pixel_m", &SceneSpec::pixel_m);

  py::class_<AcquisitionGeometry>(m, "AcquisitionGeometry")
      .def(py::init<>())
      .def_readwrite("freqs_hz", &AcquisitionGeometry::freqs_hz)
      .def_readwrite("elevation_rad", &AcquisitionGeometry::elevation_rad)
      .def_readwrite("azimuths_rad", &AcquisitionGeometry::azimuths_rad)
      .def_readwrite("c_mps", &AcquisitionGeometry::c_mps)
      .def("center_freq_hz", &AcquisitionGeometry::center_freq_hz)
      .def("delta_alpha_hz", &AcquisitionGeometry::delta_alpha_hz);

  py::class_<ComplexImage>(m, "ComplexImage")
      .def_readonly("n", &ComplexImage::n)
      .def_readonly("pixel_m", &ComplexImage::pixel_m)
      .def("to_array", &image_to_array)
      .def_static("from_array", &image_from_array, py::arg("array"), py::arg("radius_m"));

  py::class_<PhaseHistory>(m, "PhaseHistory")
      .def_readonly("k_radpm", &PhaseHistory::k_radpm)
      .def_readonly("azimuths_rad", &PhaseHistory::azimuths_rad)
      .def_property_readonly("scene",
                             [](const PhaseHistory& ph) { return ph.scene_ref; })
      .def_property_readonly("samples",
                             [](const PhaseHistory& ph) {
                               py::array_t<cplx> out({static_cast<py::ssize_t>(ph.n_azimuths()),
                                                      static_cast<py::ssize_t>(ph.n_freqs())});
                               std::copy(ph.samples.begin(), ph.samples.end(),
                                         out.mutable_data());
                               return out;
                             })
      .def("set_samples",
           [](PhaseHistory& ph,
              const py::array_t<cplx, py::array::c_style | py::array::forcecast>& arr) {
             if (static_cast<std::size_t>(arr.size()) != ph.samples.size())
               throw std::invalid_argument("sample count mismatch");
             std::copy(arr.data(), arr.data() + arr.size(), ph.samples.begin());
           });

  // Geometry.
  m.def("wavenumber", &geometry::wavenumber, py::arg("alpha_hz"), py::arg("phi_rad"),
        py::arg("c_mps") = kSpeedOfLight);
  m.def("wavenumbers", &geometry::wavenumbers);
  m.def("max_scene_radius", &geometry::max_scene_radius, py::arg("delta_alpha_hz"),
        py::arg("phi_rad"), py::arg("c_mps") = kSpeedOfLight);
  m.def("max_crossrange_radius", &geometry::max_crossrange_radius, py::arg("alpha_max_hz"),
        py::arg("phi_rad"), py::arg("delta_theta_rad"), py::arg("c_mps") = kSpeedOfLight);

  // Scenes.
  m.def(
      "point_scatterers",
      [](const SceneSpec& scene, const std::vector<std::tuple<double, double, cplx>>& pts) {
        std::vector<scene::PointScatterer> v;
        for (const auto& [x, y, a] : pts) v.push_back({x, y, a});
        return scene::point_scatterers(scene, v);
      },
      py::arg("scene"), py::arg("points"));
  m.def("shepp_logan_magnitude", &scene::shepp_logan_magnitude, py::arg("n"));
  m.def(
      "apply_random_phases",
      [](const ComplexImage& img, std::uint64_t seed) {
        return scene::apply_random_phases(img, seed);
      },
      py::arg("image"), py::arg("seed"));

  // Forward model.
  m.def("simulate_phase_history",
        py::overload_cast<const ComplexImage&, const AcquisitionGeometry&>(
            &forward::simulate_phase_history),
        py::arg("image"), py::arg("geometry"));
  m.def("add_noise", &forward::add_noise, py::arg("phase_history"), py::arg("sigma"),
        py::arg("seed"));

  // Image formation.
  m.def("matched_filter", &imaging::matched_filter, py::arg("phase_history"), py::arg("scene"));
  m.def("backprojection", &imaging::backprojection, py::arg("phase_history"), py::arg("scene"),
        py::arg("upsample") = 8);
  m.def(
      "grid_and_fft",
      [](const PhaseHistory& ph, const SceneSpec& scene, int oversampling, int half_width) {
        return imaging::grid_and_fft(ph, scene, imaging::GridConfig{oversampling, half_width});
      },
      py::arg("phase_history"), py::arg("scene"), py::arg("oversampling") = 2,
      py::arg("half_width") = 3);
  m.def(
      "apply_window",
      [](const PhaseHistory& ph, const std::string& kind) {
        return imaging::apply_window(ph, kernels::window_from_string(kind));
      },
      py::arg("phase_history"), py::arg("window"));

  // Kernels.
  m.def("dirichlet", &kernels::dirichlet, py::arg("order"), py::arg("x"));
  m.def("offset_kernel", &kernels::offset_kernel, py::arg("k_center"), py::arg("bandwidth"),
        py::arg("x"));
  m.def("h_kernel", &kernels::h_kernel, py::arg("k_center"), py::arg("n_freqs"),
        py::arg("delta_k"), py::arg("x"));
  m.def(
      "kernel2d",
      [](double k_center, int n_freqs, double delta_k, const std::vector<double>& thetas,
         const SceneSpec& scene) {
        kernels::KernelParams p;
        p.k_center = k_center;
        p.n_freqs = n_freqs;
        p.delta_k = delta_k;
        p.thetas_rad = thetas;
        return kernels::kernel2d(p, scene).field;
      },
      py::arg("k_center"), py::arg("n_freqs"), py::arg("delta_k"), py::arg("thetas_rad"),
      py::arg("scene"));

  // Random-phase expectations.
  m.def("expected_coefficient_power", &phasestats::expected_coefficient_power,
        py::arg("magnitudes"));
  m.def("expected_partial_sum_power", &phasestats::expected_partial_sum_power,
        py::arg("magnitudes"), py::arg("bandwidth"));
  m.def("monte_carlo_partial_sum_power", &phasestats::monte_carlo_partial_sum_power,
        py::arg("magnitudes"), py::arg("k1"), py::arg("k2"), py::arg("trials"), py::arg("seed"));

  // Regularized reconstruction straight from phase-history data.
  m.def(
      "reconstruct",
      [](const PhaseHistory& ph, const std::string& reg, double lambda, double beta, int iters,
         double tol) {
        const SceneSpec scene = ph.scene_ref;
        auto op = std::make_shared<imaging::GriddingOperator>(ph.k_radpm, ph.azimuths_rad, scene);
        solver::LinearOperator A;
        A.rows = op->n_samples();
        A.cols = op->n_pixels();
        A.apply = [op](const cvec& x) { return op->forward(x); };
        A.apply_h = [op](const cvec& y) { return op->adjoint(y); };

        solver::LinearOperator T;
        if (reg == "l1")
          T = solver::identity_operator(A.cols);
        else if (reg == "tv")
          T = solver::difference_operator_2d(scene.n_pixels);
        else
          throw std::invalid_argument("unknown reg (expected l1 or tv): " + reg);

        solver::SolverConfig cfg;
        cfg.lambda = lambda;
        cfg.beta = beta;
        cfg.max_iters = iters;
        cfg.tol = tol;
        const solver::SolverState st = solver::admm_l1(A, T, ph.samples, cfg);

        ComplexImage img = ComplexImage::zeros(scene);
        img.samples = st.f;
        return py::make_tuple(img, st.objective_history, st.stop_reason);
      },
      py::arg("phase_history"), py::arg("reg"), py::arg("lambda"), py::arg("beta") = 32.0,
      py::arg("iters") = 200, py::arg("tol") = 0.0);

  // File round-trips (same formats as the CLI).
  m.def("write_image", &io::write_image, py::arg("path"), py::arg("image"),
        py::arg("role") = "image");
  m.def("read_image", &io::read_image, py::arg("path"));
  m.def("write_phase_history", &io::write_phase_history, py::arg("path"),
        py::arg("phase_history"));
  m.def("read_phase_history", &io::read_phase_history, py::arg("path"));
}

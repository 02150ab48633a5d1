// sarkit command-line front end.
//
// Subcommands: simulate, form, solve, kernel, stats, diagnose.
// Exit codes: 0 success, 1 validation/usage error, 2 numerical failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>

#include "sarkit/fft.hpp"
#include "sarkit/forward.hpp"
#include "sarkit/geometry.hpp"
#include "sarkit/imaging.hpp"
#include "sarkit/io.hpp"
#include "sarkit/kernels.hpp"
#include "sarkit/phasestats.hpp"
#include "sarkit/rng.hpp"
#include "sarkit/scene.hpp"
#include "sarkit/solver.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace sarkit;
using json = nlohmann::json;

// Input problems are configuration errors (exit 1), not numerical failures.
std::string require_file(const std::string& path) {
  std::ifstream probe(path);
  if (!probe) throw std::invalid_argument("cannot open input file: " + path);
  return path;
}

struct GeometryArgs {
  std::string file;  // JSON document; overrides the generator flags below
  double fc_ghz = 10.0;
  double bandwidth_mhz = 600.0;
  int num_freqs = 128;
  double phi_deg = 30.0;
  double theta_center_deg = 50.0;
  double theta_span_deg = 3.0;
  int num_az = 32;
  double c_mps = kSpeedOfLight;
};

void add_geometry_flags(CLI::App* cmd, GeometryArgs& g) {
  cmd->add_option("--geometry", g.file, "geometry JSON file (freqs_hz, elevation_deg, azimuths_deg, c_mps)");
  cmd->add_option("--fc-ghz", g.fc_ghz, "band-center frequency [GHz]");
  cmd->add_option("--bandwidth-mhz", g.bandwidth_mhz, "total bandwidth [MHz]");
  cmd->add_option("--num-freqs", g.num_freqs, "number of frequency steps");
  cmd->add_option("--phi-deg", g.phi_deg, "elevation angle [deg]");
  cmd->add_option("--theta-center-deg", g.theta_center_deg, "central azimuth [deg]");
  cmd->add_option("--theta-span-deg", g.theta_span_deg, "total azimuth span [deg]");
  cmd->add_option("--num-az", g.num_az, "number of azimuth angles");
}

AcquisitionGeometry make_geometry(const GeometryArgs& g) {
  AcquisitionGeometry geom;
  if (!g.file.empty()) {
    std::ifstream f(g.file);
    if (!f) throw std::invalid_argument("cannot open geometry file: " + g.file);
    json doc;
    f >> doc;
    geom.freqs_hz = doc.at("freqs_hz").get<std::vector<double>>();
    geom.elevation_rad = doc.at("elevation_deg").get<double>() * kPi / 180.0;
    for (double a : doc.at("azimuths_deg").get<std::vector<double>>())
      geom.azimuths_rad.push_back(a * kPi / 180.0);
    geom.c_mps = doc.value("c_mps", kSpeedOfLight);
  } else {
    if (g.num_freqs < 2) throw std::invalid_argument("--num-freqs must be >= 2");
    if (g.num_az < 1) throw std::invalid_argument("--num-az must be >= 1");
    const double f0 = g.fc_ghz * 1e9 - 0.5 * g.bandwidth_mhz * 1e6;
    const double df = g.bandwidth_mhz * 1e6 / (g.num_freqs - 1);
    for (int j = 0; j < g.num_freqs; ++j) geom.freqs_hz.push_back(f0 + j * df);
    geom.elevation_rad = g.phi_deg * kPi / 180.0;
    const double t0 = (g.theta_center_deg - 0.5 * g.theta_span_deg) * kPi / 180.0;
    const double dt = g.num_az > 1 ? g.theta_span_deg * kPi / 180.0 / (g.num_az - 1) : 0.0;
    for (int i = 0; i < g.num_az; ++i) geom.azimuths_rad.push_back(t0 + i * dt);
    geom.c_mps = g.c_mps;
  }
  validate(geom);
  return geom;
}

void report_alias_limits(const AcquisitionGeometry& geom, const SceneSpec& scene) {
  const double r_range =
      geometry::max_scene_radius(geom.delta_alpha_hz(), geom.elevation_rad, geom.c_mps);
  std::printf("alias-free scene radius (range): %.3f m\n", r_range);
  if (geom.azimuths_rad.size() > 1) {
    const double dtheta = geom.azimuths_rad[1] - geom.azimuths_rad[0];
    const double r_cross = geometry::max_crossrange_radius(geom.freqs_hz.back(),
                                                           geom.elevation_rad, dtheta, geom.c_mps);
    std::printf("alias-free scene radius (cross-range): %.3f m\n", r_cross);
    if (scene.radius_m > std::min(r_range, r_cross))
      std::fprintf(stderr, "warning: scene radius %.3f m exceeds the alias-free limit %.3f m\n",
                   scene.radius_m, std::min(r_range, r_cross));
  } else if (scene.radius_m > r_range) {
    std::fprintf(stderr, "warning: scene radius %.3f m exceeds the alias-free limit %.3f m\n",
                 scene.radius_m, r_range);
  }
}

// Matrix-free SAR forward/adjoint pair around the gridding pipeline (fast) or the
// direct sums (exact, slow; utility scale only).
solver::LinearOperator sar_operator(const PhaseHistory& ph, const SceneSpec& scene,
                                    bool use_gridding) {
  solver::LinearOperator A;
  const auto np = static_cast<std::size_t>(scene.n_pixels) * scene.n_pixels;
  A.cols = np;
  A.rows = ph.samples.size();
  if (use_gridding) {
    auto op = std::make_shared<imaging::GriddingOperator>(ph.k_radpm, ph.azimuths_rad, scene);
    A.apply = [op](const cvec& x) { return op->forward(x); };
    A.apply_h = [op](const cvec& y) { return op->adjoint(y); };
    return A;
  }
  auto axes = std::make_shared<PhaseHistory>(ph);  // sample axes; data ignored
  A.apply = [axes, scene](const cvec& x) {
    ComplexImage img = ComplexImage::zeros(scene);
    img.samples = x;
    PhaseHistory sim = *axes;
    // Direct forward: reuse the simulator on the image's grid.
    AcquisitionGeometry geom;  // wavenumbers are already physical; synthesize freqs
    // k = 2*pi*cos(phi)*(2*alpha/c) with phi = 0, c = default: alpha = k*c/(4*pi).
    for (double k : axes->k_radpm) geom.freqs_hz.push_back(k * kSpeedOfLight / (4.0 * kPi));
    geom.elevation_rad = 0.0;
    geom.azimuths_rad = axes->azimuths_rad;
    return forward::simulate_phase_history(img, geom).samples;
  };
  A.apply_h = [axes, scene](const cvec& y) {
    PhaseHistory d = *axes;
    d.samples = y;
    return imaging::matched_filter(d, scene).samples;
  };
  return A;
}

int cmd_simulate(const GeometryArgs& gargs, double radius, int n, const std::string& scene_kind,
                 const std::vector<std::string>& point_specs, const std::string& scene_file,
                 bool random_phases, double noise_sigma, std::optional<std::uint64_t> seed,
                 const std::string& out) {
  const AcquisitionGeometry geom = make_geometry(gargs);

  ComplexImage img;
  if (scene_kind == "file") {
    if (scene_file.empty()) throw std::invalid_argument("--scene file requires --scene-file");
    img = io::read_image(require_file(scene_file));
  } else if (scene_kind == "shepp-logan") {
    img = scene::shepp_logan_magnitude(n);
    img.pixel_m = 2.0 * radius / n;  // phantom spans the scene square
  } else if (scene_kind == "delta") {
    img = scene::point_scatterers(SceneSpec{radius, n}, {{0.0, 0.0, cplx(1.0, 0.0)}});
  } else if (scene_kind == "points") {
    std::vector<scene::PointScatterer> pts;
    for (const auto& spec : point_specs) {
      std::istringstream ss(spec);
      std::vector<double> v;
      std::string tok;
      while (std::getline(ss, tok, ',')) v.push_back(std::stod(tok));
      if (v.size() != 3 && v.size() != 4)
        throw std::invalid_argument("--point expects x,y,re[,im]: " + spec);
      pts.push_back({v[0], v[1], cplx(v[2], v.size() == 4 ? v[3] : 0.0)});
    }
    if (pts.empty()) throw std::invalid_argument("--scene points requires at least one --point");
    img = scene::point_scatterers(SceneSpec{radius, n}, pts);
  } else {
    throw std::invalid_argument("unknown --scene kind: " + scene_kind);
  }

  if (random_phases) {
    if (!seed) throw std::invalid_argument("--random-phases requires --seed");
    img = scene::apply_random_phases(img, *seed);
  }

  const SceneSpec sspec = img.scene();
  report_alias_limits(geom, sspec);

  PhaseHistory ph = forward::simulate_phase_history(img, geom);
  if (noise_sigma > 0.0) {
    if (!seed) throw std::invalid_argument("--noise-sigma requires --seed");
    ph = forward::add_noise(ph, noise_sigma, rng::key(*seed, 0x6e6f6973u));
  }
  io::write_phase_history(out, ph);
  std::printf("wrote %s (%zu x %zu samples)\n", out.c_str(), ph.n_freqs(), ph.n_azimuths());
  return 0;
}

int cmd_form(const std::string& in, const std::string& method, const std::string& window,
             int upsample, int oversampling, int half_width, double radius, int n,
             bool compare_mf, const std::string& out, const std::string& pgm, double db_floor,
             bool linear_scale) {
  PhaseHistory ph = io::read_phase_history(require_file(in));
  SceneSpec scene = ph.scene_ref;
  if (n > 0) scene.n_pixels = n;
  if (radius > 0.0) scene.radius_m = radius;

  if (!window.empty() && window != "rectangular")
    ph = imaging::apply_window(ph, kernels::window_from_string(window));

  ComplexImage img;
  if (method == "mf") {
    img = imaging::matched_filter(ph, scene);
  } else if (method == "bp") {
    img = imaging::backprojection(ph, scene, upsample);
  } else if (method == "grid") {
    img = imaging::grid_and_fft(ph, scene, imaging::GridConfig{oversampling, half_width});
  } else {
    throw std::invalid_argument("unknown --method: " + method);
  }

  if (compare_mf && method != "mf") {
    const ComplexImage ref = imaging::matched_filter(ph, scene);
    double num = 0.0, den = 0.0;
    for (std::size_t j = 0; j < ref.samples.size(); ++j) {
      num += std::norm(img.samples[j] - ref.samples[j]);
      den += std::norm(ref.samples[j]);
    }
    std::printf("relative error vs matched filter: %.6e\n",
                den > 0.0 ? std::sqrt(num / den) : 0.0);
  }

  io::write_image(out, img, "image");
  std::printf("wrote %s (%d x %d)\n", out.c_str(), img.n, img.n);
  if (!pgm.empty()) {
    if (linear_scale)
      io::write_pgm_linear(pgm, img);
    else
      io::write_pgm_db(pgm, img, db_floor);
    std::printf("wrote %s\n", pgm.c_str());
  }
  return 0;
}

int cmd_solve(const std::string& in, const std::string& reg, double lambda, double beta,
              int iters, double tol, double fixed_tau, bool no_spectral, bool direct_forward,
              const std::string& out, const std::string& history_csv) {
  const PhaseHistory ph = io::read_phase_history(require_file(in));
  const SceneSpec scene = ph.scene_ref;
  const int n = scene.n_pixels;
  const auto A = sar_operator(ph, scene, !direct_forward);

  ComplexImage img = ComplexImage::zeros(scene);
  if (reg == "tikhonov") {
    const auto D = solver::difference_operator_2d(n);
    img.samples = solver::tikhonov_solve(A, ph.samples, lambda, D, 1e-8, 4000);
    io::write_image(out, img, "solution");
    std::printf("wrote %s\n", out.c_str());
    return 0;
  }

  solver::LinearOperator T;
  if (reg == "l1") {
    T = solver::identity_operator(A.cols);
  } else if (reg == "tv") {
    T = solver::difference_operator_2d(n);
  } else if (reg == "ptv") {
    // Phase-corrected TV: differences act on Theta*f with Theta built from a
    // preliminary gridded image, so smooth carrier phase is not penalized.
    const ComplexImage f0 = imaging::grid_and_fft(ph, scene);
    T = solver::compose(solver::difference_operator_2d(n), solver::phase_diag(f0.samples));
  } else {
    throw std::invalid_argument("unknown --reg: " + reg);
  }

  solver::SolverConfig cfg;
  cfg.lambda = lambda;
  cfg.beta = beta;
  cfg.max_iters = iters;
  cfg.tol = tol;
  cfg.step.spectral = !no_spectral;
  cfg.step.fixed_tau = fixed_tau;

  const solver::SolverState st = solver::admm_l1(A, T, ph.samples, cfg);
  img.samples = st.f;
  io::write_image(out, img, "solution");
  std::printf("wrote %s after %d iterations (%s)\n", out.c_str(), st.iterations,
              st.stop_reason.c_str());

  const auto res = solver::optimality_residuals(A, T, ph.samples, st, lambda, beta);
  std::printf("optimality residuals: grad %.6e subgrad %.6e constraint %.6e\n", res.r_grad,
              res.r_subgrad, res.r_constraint);

  if (!history_csv.empty()) {
    std::vector<std::vector<double>> rows;
    for (std::size_t k = 0; k < st.objective_history.size(); ++k)
      rows.push_back({static_cast<double>(k), st.objective_history[k],
                      k == 0 ? 0.0 : st.residual_history[k - 1]});
    io::write_csv(history_csv, {"iteration", "objective", "constraint_residual"}, rows);
    std::printf("wrote %s\n", history_csv.c_str());
  }
  return 0;
}

int cmd_kernel(const GeometryArgs& gargs, double radius, int n, const std::string& out,
               const std::string& pgm, double db_floor) {
  const AcquisitionGeometry geom = make_geometry(gargs);
  const std::vector<double> ks = geometry::wavenumbers(geom);
  kernels::KernelParams params;
  params.k_center = 0.5 * (ks.front() + ks.back());
  params.n_freqs = static_cast<int>(ks.size());
  params.delta_k = ks.size() > 1 ? ks[1] - ks[0] : 0.0;
  params.thetas_rad = geom.azimuths_rad;

  const kernels::KernelField field = kernels::kernel2d(params, SceneSpec{radius, n});
  io::write_image(out, field.field, "kernel");
  std::printf("wrote %s (peak |K| = %.1f at the origin)\n", out.c_str(),
              std::abs(field.field.at(0, 0)));
  if (!pgm.empty()) {
    io::write_pgm_db(pgm, field.field, db_floor);
    std::printf("wrote %s\n", pgm.c_str());
  }
  return 0;
}

int cmd_stats(int n, long long k1, long long k2, int trials, std::uint64_t seed,
              const std::string& signal_kind, const std::string& out) {
  std::vector<double> mags;
  if (signal_kind == "step") {
    for (const auto& z : scene::step_signal(n).samples) mags.push_back(std::abs(z));
  } else if (signal_kind == "ramp") {
    for (const auto& z : scene::ramp_signal(n).samples) mags.push_back(std::abs(z));
  } else if (signal_kind == "const") {
    mags.assign(static_cast<std::size_t>(n), 1.0);
  } else {
    throw std::invalid_argument("unknown --signal kind: " + signal_kind);
  }

  const auto bandwidth = static_cast<int>(k2 - k1);
  const auto analytic = phasestats::expected_partial_sum_power(mags, bandwidth);
  const auto empirical = phasestats::monte_carlo_partial_sum_power(mags, k1, k2, trials, seed);

  std::vector<std::vector<double>> rows;
  for (int m = 0; m < n; ++m)
    rows.push_back({static_cast<double>(m), empirical[static_cast<std::size_t>(m)],
                    analytic[static_cast<std::size_t>(m)]});
  io::write_csv(out, {"index", "empirical", "analytic"}, rows);
  std::printf("wrote %s (%d indices, %d trials)\n", out.c_str(), n, trials);
  return 0;
}

// Canonical 1D partial-Fourier demo: A keeps half the rows of the unitary DFT,
// T is a difference operator, the truth is a sine, and the data carry Gaussian noise.
int cmd_diagnose(int n, int order, double lambda, double beta, int iters, double snr,
                 std::uint64_t seed, bool spectral, const std::string& out) {
  if (n < 16) throw std::invalid_argument("--n too small");
  const std::size_t rows = static_cast<std::size_t>(n) / 2;

  // Seeded half-row selection (Fisher-Yates over row indices). The truth's two
  // spectral lines (4 cycles) are always retained: without them the sampled data
  // carry no signal and the demo is vacuous.
  std::vector<std::size_t> perm(static_cast<std::size_t>(n));
  for (std::size_t j = 0; j < perm.size(); ++j) perm[j] = j;
  for (std::size_t j = perm.size() - 1; j > 0; --j)
    std::swap(perm[j], perm[static_cast<std::size_t>(rng::uniform01(seed, j) * (j + 1))]);
  std::vector<std::size_t> keep(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(rows));
  for (std::size_t required : {std::size_t{4}, static_cast<std::size_t>(n - 4)}) {
    if (std::find(keep.begin(), keep.end(), required) != keep.end()) continue;
    for (auto& slot : keep) {
      if (slot != 4 && slot != static_cast<std::size_t>(n - 4)) {
        slot = required;
        break;
      }
    }
  }
  std::sort(keep.begin(), keep.end());

  solver::LinearOperator A;
  A.cols = static_cast<std::size_t>(n);
  A.rows = rows;
  const double unit = 1.0 / std::sqrt(static_cast<double>(n));
  auto keep_p = std::make_shared<std::vector<std::size_t>>(keep);
  A.apply = [n, unit, keep_p](const cvec& x) {
    cvec full = x;
    fft::transform_1d(full, -1);
    cvec y(keep_p->size());
    for (std::size_t j = 0; j < keep_p->size(); ++j) y[j] = unit * full[(*keep_p)[j]];
    return y;
  };
  A.apply_h = [n, unit, keep_p](const cvec& y) {
    cvec full(static_cast<std::size_t>(n), cplx(0.0, 0.0));
    for (std::size_t j = 0; j < keep_p->size(); ++j) full[(*keep_p)[j]] = unit * y[j];
    fft::transform_1d(full, +1);
    return full;
  };

  cvec truth(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    truth[static_cast<std::size_t>(j)] = std::sin(2.0 * kPi * 4.0 * j / n);
  cvec b = A.apply(truth);
  double bnorm = 0.0;
  for (const auto& z : b) bnorm += std::norm(z);
  const double sigma = std::sqrt(bnorm) / (snr * std::sqrt(2.0 * static_cast<double>(rows)));
  for (std::size_t j = 0; j < b.size(); ++j) {
    const auto [x, y] = rng::gaussian_pair(seed, j, 0x6e6fu);
    b[j] += cplx(sigma * x, sigma * y);
  }

  const auto T = solver::difference_operator(n, order, solver::Boundary::truncated);
  solver::SolverConfig cfg;
  cfg.lambda = lambda;
  cfg.beta = beta;
  cfg.max_iters = iters;
  cfg.step.spectral = spectral;
  const solver::SolverState st = solver::admm_l1(A, T, b, cfg);

  const auto res = solver::optimality_residuals(A, T, b, st, lambda, beta);
  const double cert = solver::subgradient_certificate(A, T, b, st.f, lambda);
  std::printf("final objective %.6e\n", st.objective_history.back());
  std::printf("optimality residuals: grad %.6e subgrad %.6e constraint %.6e\n", res.r_grad,
              res.r_subgrad, res.r_constraint);
  std::printf("subgradient certificate (<= 1 at a minimizer): %.4f\n", cert);

  if (!out.empty()) {
    std::vector<std::vector<double>> csv_rows;
    for (std::size_t k = 0; k < st.objective_history.size(); ++k)
      csv_rows.push_back({static_cast<double>(k), st.objective_history[k],
                          k == 0 ? 0.0 : st.residual_history[k - 1]});
    io::write_csv(out, {"iteration", "objective", "constraint_residual"}, csv_rows);
    std::printf("wrote %s\n", out.c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spotlight-SAR toolkit: simulation, image formation, regularized reconstruction"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "worker thread count (0 = library default)");

  // simulate
  auto* sim = app.add_subcommand("simulate", "simulate phase-history data from a synthetic scene");
  GeometryArgs sim_geom;
  add_geometry_flags(sim, sim_geom);
  double sim_radius = 5.0;
  int sim_n = 128;
  std::string sim_scene = "delta", sim_scene_file, sim_out;
  std::vector<std::string> sim_points;
  bool sim_random_phases = false;
  double sim_noise = 0.0;
  std::optional<std::uint64_t> sim_seed;
  sim->add_option("--radius", sim_radius, "scene half-width [m]");
  sim->add_option("--n", sim_n, "scene grid size (even)");
  sim->add_option("--scene", sim_scene, "delta | points | shepp-logan | file");
  sim->add_option("--point", sim_points, "scatterer x,y,re[,im] (repeatable)");
  sim->add_option("--scene-file", sim_scene_file, "complex image file for --scene file");
  sim->add_flag("--random-phases", sim_random_phases, "randomize scene phases (needs --seed)");
  sim->add_option("--noise-sigma", sim_noise, "complex noise sigma per component (needs --seed)");
  sim->add_option("--seed", sim_seed, "RNG seed");
  sim->add_option("--out", sim_out, "output phase-history path")->required();

  // form
  auto* form = app.add_subcommand("form", "form an image from phase-history data");
  std::string form_in, form_method = "mf", form_window = "rectangular", form_out, form_pgm;
  int form_upsample = 8, form_oversampling = 2, form_half_width = 3, form_n = 0;
  double form_radius = 0.0, form_db_floor = -60.0;
  bool form_linear = false;
  form->add_option("--in", form_in, "phase-history file")->required();
  form->add_option("--method", form_method, "mf | bp | grid");
  form->add_option("--window", form_window, "rectangular | fejer | hann | hamming | gaussian");
  form->add_option("--upsample", form_upsample, "bp profile upsampling factor");
  form->add_option("--oversampling", form_oversampling, "grid oversampling factor");
  form->add_option("--half-width", form_half_width, "grid kernel half-width [cells]");
  form->add_option("--radius", form_radius, "override scene half-width [m]");
  form->add_option("--n", form_n, "override image grid size");
  bool form_compare = false;
  form->add_flag("--compare-mf", form_compare, "also report relative error vs the matched filter");
  form->add_option("--out", form_out, "output image path")->required();
  form->add_option("--pgm", form_pgm, "also render magnitude PGM here");
  form->add_option("--db-floor", form_db_floor, "dB floor for the PGM rendering");
  form->add_flag("--linear", form_linear, "linear-scale PGM instead of dB");

  // solve
  auto* solve = app.add_subcommand("solve", "regularized reconstruction from phase-history data");
  std::string solve_in, solve_reg = "tv", solve_out, solve_history;
  double solve_lambda = 0.0, solve_beta = 32.0, solve_tol = 0.0, solve_fixed_tau = 0.0;
  int solve_iters = 500;
  bool solve_no_spectral = false, solve_direct = false;
  solve->add_option("--in", solve_in, "phase-history file")->required();
  solve->add_option("--reg", solve_reg, "tikhonov | l1 | tv | ptv");
  solve->add_option("--lambda", solve_lambda, "regularization weight")->required();
  solve->add_option("--beta", solve_beta, "ADMM penalty");
  solve->add_option("--iters", solve_iters, "iteration budget");
  solve->add_option("--tol", solve_tol, "relative f-change stop (0 = run the budget)");
  solve->add_option("--fixed-step", solve_fixed_tau, "fixed gradient step (0 = auto)");
  solve->add_flag("--no-spectral", solve_no_spectral, "disable spectral step selection");
  solve->add_flag("--direct-forward", solve_direct, "exact direct-sum forward operator (slow)");
  solve->add_option("--out", solve_out, "output solution image path")->required();
  solve->add_option("--history", solve_history, "objective/residual history CSV path");

  // kernel
  auto* kern = app.add_subcommand("kernel", "emit the analytic point-spread field");
  GeometryArgs kern_geom;
  add_geometry_flags(kern, kern_geom);
  double kern_radius = 5.0, kern_db_floor = -60.0;
  int kern_n = 128;
  std::string kern_out, kern_pgm;
  kern->add_option("--radius", kern_radius, "field half-width [m]");
  kern->add_option("--n", kern_n, "field grid size (even)");
  kern->add_option("--out", kern_out, "output field path")->required();
  kern->add_option("--pgm", kern_pgm, "also render magnitude PGM here");
  kern->add_option("--db-floor", kern_db_floor, "dB floor for the PGM rendering");

  // stats
  auto* stats = app.add_subcommand("stats", "random-phase partial-sum power: empirical vs analytic");
  int stats_n = 256, stats_trials = 10000;
  long long stats_k1 = -25, stats_k2 = 25;
  std::uint64_t stats_seed = 1;
  std::string stats_signal = "step", stats_out;
  stats->add_option("--n", stats_n, "signal length");
  stats->add_option("--k1", stats_k1, "band start");
  stats->add_option("--k2", stats_k2, "band end");
  stats->add_option("--trials", stats_trials, "Monte Carlo trials");
  stats->add_option("--seed", stats_seed, "RNG seed");
  stats->add_option("--signal", stats_signal, "step | ramp | const");
  stats->add_option("--out", stats_out, "output CSV path")->required();

  // diagnose
  auto* diag = app.add_subcommand("diagnose", "run the 1D partial-Fourier demo and report optimality");
  int diag_n = 500, diag_order = 2, diag_iters = 2000;
  double diag_lambda = 0.05, diag_beta = 32.0, diag_snr = 5.0;
  std::uint64_t diag_seed = 7;
  bool diag_spectral = false;
  std::string diag_out;
  diag->add_option("--n", diag_n, "signal length");
  diag->add_option("--order", diag_order, "difference order of T (1 or 2)");
  diag->add_option("--lambda", diag_lambda, "regularization weight");
  diag->add_option("--beta", diag_beta, "ADMM penalty");
  diag->add_option("--iters", diag_iters, "iteration budget");
  diag->add_option("--snr", diag_snr, "amplitude signal-to-noise ratio of the data");
  diag->add_option("--seed", diag_seed, "RNG seed");
  diag->add_flag("--spectral", diag_spectral,
                 "spectral (Barzilai-Borwein) steps instead of the fixed Lipschitz step");
  diag->add_option("--out", diag_out, "objective/residual history CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);  // prints the message / help text
    return rc == 0 ? 0 : 1;
  }

#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#endif

  try {
    if (*sim)
      return cmd_simulate(sim_geom, sim_radius, sim_n, sim_scene, sim_points, sim_scene_file,
                          sim_random_phases, sim_noise, sim_seed, sim_out);
    if (*form)
      return cmd_form(form_in, form_method, form_window, form_upsample, form_oversampling,
                      form_half_width, form_radius, form_n, form_compare, form_out, form_pgm,
                      form_db_floor, form_linear);
    if (*solve)
      return cmd_solve(solve_in, solve_reg, solve_lambda, solve_beta, solve_iters, solve_tol,
                       solve_fixed_tau, solve_no_spectral, solve_direct, solve_out, solve_history);
    if (*kern) return cmd_kernel(kern_geom, kern_radius, kern_n, kern_out, kern_pgm, kern_db_floor);
    if (*stats)
      return cmd_stats(stats_n, stats_k1, stats_k2, stats_trials, stats_seed, stats_signal,
                       stats_out);
    if (*diag)
      return cmd_diagnose(diag_n, diag_order, diag_lambda, diag_beta, diag_iters, diag_snr,
                          diag_seed, diag_spectral, diag_out);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return 2;
  }
  return 0;
}

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sarkit/types.hpp"

// Regularized reconstruction: complex-valued ADMM for
//   min_f ||A f - b||_2^2 + lambda * ||T f||_1
// with a Tikhonov (l2) companion solver and optimality diagnostics.
namespace sarkit::solver {

// Matrix-free linear operator with its adjoint. rows/cols are output/input lengths.
struct LinearOperator {
  std::size_t rows{0}, cols{0};
  std::function<cvec(const cvec&)> apply;    // y = A x,   length rows
  std::function<cvec(const cvec&)> apply_h;  // x = A^H y, length cols
};

enum class Boundary { circulant, truncated };

// First differences (out_j = f_{j+1} - f_j); order 2 composes them. Truncated drops
// boundary rows ((n-order) x n), circulant wraps (n x n).
LinearOperator difference_operator(int n, int order, Boundary boundary);

LinearOperator identity_operator(std::size_t n);

// Circulant first differences of an n x n image along both axes, stacked row-diff
// block then col-diff block (2*n^2 x n^2). Input/output are row-major buffers.
LinearOperator difference_operator_2d(int n);

// Diagonal unitary Theta = diag{exp(-i*arg(f0_j))}; zero entries get multiplier 1.
LinearOperator phase_diag(const cvec& f0);

// a after b (x -> a(b(x))).
LinearOperator compose(const LinearOperator& a, const LinearOperator& b);

// Conjugate-gradient solve of the regularized normal equations
//   (A^H A + lambda * D^H D) f = A^H b,
// stopping when the residual drops below cg_tol relative to ||A^H b||.
// Throws std::runtime_error if cg_maxit iterations do not reach cg_tol.
cvec tikhonov_solve(const LinearOperator& A, const cvec& b, double lambda,
                    const LinearOperator& D, double cg_tol = 1e-10, int cg_maxit = 2000);

// Complex soft threshold: shrink(z, tau) = max(|z| - tau, 0) * z / |z| (0 at z = 0).
cplx shrink(cplx z, double tau);
cvec shrink(const cvec& z, double tau);

struct StepRule {
  bool spectral = true;    // Barzilai-Borwein step from successive (f, grad) pairs
  double fixed_tau = 0.0;  // fallback / fixed step; 0 = auto from operator norms
};

struct SolverConfig {
  double lambda = 1.0;   // l1 weight
  double beta = 32.0;    // augmented-Lagrangian penalty
  int max_iters = 1000;
  double tol = 0.0;      // stop when relative f-change falls below tol (0 = run out)
  StepRule step{};
};

struct SolverState {
  cvec f, g, sigma;
  std::vector<double> objective_history;  // ||Af-b||^2 + lambda*||Tf||_1, entry per iterate
  std::vector<double> residual_history;   // ||Tf - g||_2 per iteration
  int iterations = 0;
  std::string stop_reason;
};

// Data-fit + l1 objective at f.
double objective(const LinearOperator& A, const LinearOperator& T, const cvec& b, const cvec& f,
                 double lambda);

// Gradient of the augmented Lagrangian in f:
//   2 A^H (A f - b) + beta * T^H (T f - g) - T^H sigma.
cvec gradient_f(const LinearOperator& A, const LinearOperator& T, const cvec& b, const cvec& f,
                const cvec& g, const cvec& sigma, double beta);

// Barzilai-Borwein step <df, df> / Re<df, dgrad>, clamped to [1e-12, 1e6]; returns
// `fallback` when the curvature estimate is nonpositive (or df vanishes).
double spectral_step(const cvec& f_prev, const cvec& f_cur, const cvec& grad_prev,
                     const cvec& grad_cur, double fallback);

// ADMM with a single gradient f-step, exact shrinkage g-step, and dual update
// sigma <- sigma - beta*(Tf - g). Starts from f = f_init (A^H b when absent), g = 0,
// sigma = 0. Throws std::runtime_error naming the iteration if NaN/Inf appears.
SolverState admm_l1(const LinearOperator& A, const LinearOperator& T, const cvec& b,
                    const SolverConfig& config, const cvec* f_init = nullptr);

struct OptimalityResiduals {
  double r_grad;        // || grad_f L ||_inf
  double r_subgrad;     // max_j distance of -(beta*(g-Tf)_j + sigma_j) from lambda*d|g_j|
  double r_constraint;  // || Tf - g ||_inf
};

OptimalityResiduals optimality_residuals(const LinearOperator& A, const LinearOperator& T,
                                         const cvec& b, const SolverState& state, double lambda,
                                         double beta);

// Stationarity certificate at f: with S = {j : |(Tf)_j| > support_tol} and R = S^c,
// the least-squares solution u of  T_R^H u = -( (2/lambda) A^H (A f - b) + T_S^H sign(T_S f) )
// must satisfy ||u||_inf <= 1 at a minimizer. Returns ||u||_inf. Dense solve; intended
// for diagnostic scale (cols <= 2048). Throws std::invalid_argument if R is empty.
double subgradient_certificate(const LinearOperator& A, const LinearOperator& T, const cvec& b,
                               const cvec& f, double lambda, double support_tol = 1e-3);

}  // namespace sarkit::solver

#include "sarkit/solver.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <memory>

#include "sarkit/rng.hpp"

namespace sarkit::solver {

namespace {

double dot_re(const cvec& a, const cvec& b) {
  double acc = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j)
    acc += a[j].real() * b[j].real() + a[j].imag() * b[j].imag();
  return acc;  // Re <a, b>
}

double norm2sq(const cvec& a) {
  double acc = 0.0;
  for (const auto& z : a) acc += std::norm(z);
  return acc;
}

double norm2(const cvec& a) { return std::sqrt(norm2sq(a)); }

double norm_inf(const cvec& a) {
  double acc = 0.0;
  for (const auto& z : a) acc = std::max(acc, std::abs(z));
  return acc;
}

bool all_finite(const cvec& a) {
  for (const auto& z : a)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

void check_operator(const LinearOperator& op, const char* name) {
  if (op.rows == 0 || op.cols == 0 || !op.apply || !op.apply_h)
    throw std::invalid_argument(std::string(name) + ": operator is incomplete");
}

// Largest eigenvalue of Op^H Op by deterministic power iteration (||Op||^2 estimate).
double norm_sq_estimate(const LinearOperator& op) {
  cvec x(op.cols);
  for (std::size_t j = 0; j < x.size(); ++j)
    x[j] = cplx(rng::uniform01(0xb0b5eed5u, j) - 0.5, rng::uniform01(0xb0b5eed5u, j, 1) - 0.5);
  double lam = 1.0;
  for (int it = 0; it < 25; ++it) {
    cvec y = op.apply_h(op.apply(x));
    lam = norm2(y);
    if (!(lam > 0.0)) return 1.0;
    for (std::size_t j = 0; j < x.size(); ++j) x[j] = y[j] / lam;
  }
  return lam;
}

}  // namespace

LinearOperator difference_operator(int n, int order, Boundary boundary) {
  if (n < 2) throw std::invalid_argument("difference_operator: n must be >= 2");
  if (order != 1 && order != 2)
    throw std::invalid_argument("difference_operator: order must be 1 or 2");

  auto first = [](int len, Boundary bc) {
    LinearOperator d;
    const bool circ = bc == Boundary::circulant;
    d.cols = static_cast<std::size_t>(len);
    d.rows = static_cast<std::size_t>(circ ? len : len - 1);
    d.apply = [len, circ](const cvec& x) {
      const auto rows = static_cast<std::size_t>(circ ? len : len - 1);
      cvec y(rows);
      for (std::size_t j = 0; j < rows; ++j)
        y[j] = x[(j + 1) % static_cast<std::size_t>(len)] - x[j];
      return y;
    };
    d.apply_h = [len, circ](const cvec& y) {
      cvec x(static_cast<std::size_t>(len), cplx(0.0, 0.0));
      const auto rows = static_cast<std::size_t>(circ ? len : len - 1);
      for (std::size_t j = 0; j < rows; ++j) {
        x[(j + 1) % static_cast<std::size_t>(len)] += y[j];
        x[j] -= y[j];
      }
      return x;
    };
    return d;
  };

  if (order == 1) return first(n, boundary);
  if (boundary == Boundary::circulant) return compose(first(n, boundary), first(n, boundary));
  return compose(first(n - 1, boundary), first(n, boundary));
}

LinearOperator identity_operator(std::size_t n) {
  LinearOperator d;
  d.rows = d.cols = n;
  d.apply = [](const cvec& x) { return x; };
  d.apply_h = [](const cvec& y) { return y; };
  return d;
}

LinearOperator difference_operator_2d(int n) {
  if (n < 2) throw std::invalid_argument("difference_operator_2d: n must be >= 2");
  const auto nn = static_cast<std::size_t>(n) * n;
  LinearOperator d;
  d.cols = nn;
  d.rows = 2 * nn;
  d.apply = [n, nn](const cvec& x) {
    cvec y(2 * nn);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        const std::size_t j = static_cast<std::size_t>(r) * n + c;
        y[j] = x[static_cast<std::size_t>((r + 1) % n) * n + c] - x[j];
        y[nn + j] = x[static_cast<std::size_t>(r) * n + (c + 1) % n] - x[j];
      }
    return y;
  };
  d.apply_h = [n, nn](const cvec& y) {
    cvec x(nn, cplx(0.0, 0.0));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        const std::size_t j = static_cast<std::size_t>(r) * n + c;
        x[static_cast<std::size_t>((r + 1) % n) * n + c] += y[j];
        x[j] -= y[j];
        x[static_cast<std::size_t>(r) * n + (c + 1) % n] += y[nn + j];
        x[j] -= y[nn + j];
      }
    return x;
  };
  return d;
}

LinearOperator phase_diag(const cvec& f0) {
  auto phases = std::make_shared<cvec>(f0.size());
  for (std::size_t j = 0; j < f0.size(); ++j)
    (*phases)[j] = (f0[j] == cplx(0.0, 0.0)) ? cplx(1.0, 0.0)
                                             : std::polar(1.0, -std::arg(f0[j]));
  LinearOperator d;
  d.rows = d.cols = f0.size();
  d.apply = [phases](const cvec& x) {
    cvec y(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) y[j] = (*phases)[j] * x[j];
    return y;
  };
  d.apply_h = [phases](const cvec& y) {
    cvec x(y.size());
    for (std::size_t j = 0; j < y.size(); ++j) x[j] = std::conj((*phases)[j]) * y[j];
    return x;
  };
  return d;
}

LinearOperator compose(const LinearOperator& a, const LinearOperator& b) {
  check_operator(a, "compose(a)");
  check_operator(b, "compose(b)");
  if (a.cols != b.rows) throw std::invalid_argument("compose: inner dimensions disagree");
  LinearOperator d;
  d.rows = a.rows;
  d.cols = b.cols;
  d.apply = [a, b](const cvec& x) { return a.apply(b.apply(x)); };
  d.apply_h = [a, b](const cvec& y) { return b.apply_h(a.apply_h(y)); };
  return d;
}

cvec tikhonov_solve(const LinearOperator& A, const cvec& b, double lambda,
                    const LinearOperator& D, double cg_tol, int cg_maxit) {
  check_operator(A, "tikhonov_solve(A)");
  check_operator(D, "tikhonov_solve(D)");
  if (b.size() != A.rows) throw std::invalid_argument("tikhonov_solve: b length mismatch");
  if (A.cols != D.cols) throw std::invalid_argument("tikhonov_solve: A and D input dims differ");
  if (!(lambda >= 0.0)) throw std::invalid_argument("tikhonov_solve: lambda must be >= 0");

  auto normal = [&](const cvec& x) {
    cvec y = A.apply_h(A.apply(x));
    if (lambda > 0.0) {
      const cvec d = D.apply_h(D.apply(x));
      for (std::size_t j = 0; j < y.size(); ++j) y[j] += lambda * d[j];
    }
    return y;
  };

  const cvec rhs = A.apply_h(b);
  const double rhs_norm = norm2(rhs);
  cvec f(A.cols, cplx(0.0, 0.0));
  if (rhs_norm == 0.0) return f;

  cvec r = rhs;  // residual rhs - M f, f = 0
  cvec p = r;
  double rs = norm2sq(r);
  for (int it = 0; it < cg_maxit; ++it) {
    if (std::sqrt(rs) <= cg_tol * rhs_norm) return f;
    const cvec mp = normal(p);
    const double denom = dot_re(p, mp);
    if (!(denom > 0.0)) throw std::runtime_error("tikhonov_solve: CG lost positive-definiteness");
    const double alpha = rs / denom;
    for (std::size_t j = 0; j < f.size(); ++j) {
      f[j] += alpha * p[j];
      r[j] -= alpha * mp[j];
    }
    const double rs_new = norm2sq(r);
    for (std::size_t j = 0; j < p.size(); ++j) p[j] = r[j] + (rs_new / rs) * p[j];
    rs = rs_new;
  }
  if (std::sqrt(rs) <= cg_tol * rhs_norm) return f;
  throw std::runtime_error("tikhonov_solve: CG did not converge in " + std::to_string(cg_maxit) +
                           " iterations");
}

cplx shrink(cplx z, double tau) {
  if (!(tau >= 0.0)) throw std::invalid_argument("shrink: tau must be >= 0");
  const double r = std::abs(z);
  if (r <= tau || r == 0.0) return {0.0, 0.0};
  return z * ((r - tau) / r);
}

cvec shrink(const cvec& z, double tau) {
  cvec out(z.size());
  for (std::size_t j = 0; j < z.size(); ++j) out[j] = shrink(z[j], tau);
  return out;
}

double objective(const LinearOperator& A, const LinearOperator& T, const cvec& b, const cvec& f,
                 double lambda) {
  const cvec af = A.apply(f);
  double fit = 0.0;
  for (std::size_t j = 0; j < af.size(); ++j) fit += std::norm(af[j] - b[j]);
  double l1 = 0.0;
  for (const auto& z : T.apply(f)) l1 += std::abs(z);
  return fit + lambda * l1;
}

cvec gradient_f(const LinearOperator& A, const LinearOperator& T, const cvec& b, const cvec& f,
                const cvec& g, const cvec& sigma, double beta) {
  const cvec af = A.apply(f);
  cvec resid(af.size());
  for (std::size_t j = 0; j < af.size(); ++j) resid[j] = af[j] - b[j];
  cvec grad = A.apply_h(resid);
  for (auto& z : grad) z *= 2.0;

  cvec tf = T.apply(f);
  for (std::size_t j = 0; j < tf.size(); ++j) tf[j] = beta * (tf[j] - g[j]) - sigma[j];
  const cvec tpart = T.apply_h(tf);
  for (std::size_t j = 0; j < grad.size(); ++j) grad[j] += tpart[j];
  return grad;
}

double spectral_step(const cvec& f_prev, const cvec& f_cur, const cvec& grad_prev,
                     const cvec& grad_cur, double fallback) {
  if (f_prev.size() != f_cur.size() || grad_prev.size() != grad_cur.size())
    throw std::invalid_argument("spectral_step: length mismatch");
  cvec df(f_cur.size()), dg(grad_cur.size());
  for (std::size_t j = 0; j < df.size(); ++j) {
    df[j] = f_cur[j] - f_prev[j];
    dg[j] = grad_cur[j] - grad_prev[j];
  }
  const double num = norm2sq(df);
  const double den = dot_re(df, dg);
  if (!(num > 0.0) || !(den > 0.0)) return fallback;
  return std::clamp(num / den, 1e-12, 1e6);
}

SolverState admm_l1(const LinearOperator& A, const LinearOperator& T, const cvec& b,
                    const SolverConfig& config, const cvec* f_init) {
  check_operator(A, "admm_l1(A)");
  check_operator(T, "admm_l1(T)");
  if (A.cols != T.cols) throw std::invalid_argument("admm_l1: A and T input dims differ");
  if (b.size() != A.rows) throw std::invalid_argument("admm_l1: b length mismatch");
  if (!(config.lambda > 0.0)) throw std::invalid_argument("admm_l1: lambda must be positive");
  if (!(config.beta > 0.0)) throw std::invalid_argument("admm_l1: beta must be positive");
  if (config.max_iters < 1) throw std::invalid_argument("admm_l1: max_iters must be >= 1");

  SolverState st;
  st.f = f_init ? *f_init : A.apply_h(b);
  if (st.f.size() != A.cols) throw std::invalid_argument("admm_l1: f_init length mismatch");
  st.g.assign(T.rows, cplx(0.0, 0.0));
  st.sigma.assign(T.rows, cplx(0.0, 0.0));

  double tau_fb = config.step.fixed_tau;
  if (!(tau_fb > 0.0))
    tau_fb = 1.0 / (2.0 * norm_sq_estimate(A) + config.beta * norm_sq_estimate(T));

  st.objective_history.reserve(static_cast<std::size_t>(config.max_iters) + 1);
  st.objective_history.push_back(objective(A, T, b, st.f, config.lambda));
  st.residual_history.reserve(static_cast<std::size_t>(config.max_iters));

  cvec f_prev, grad_prev;
  st.stop_reason = "max_iters";
  for (int k = 0; k < config.max_iters; ++k) {
    cvec grad = gradient_f(A, T, b, st.f, st.g, st.sigma, config.beta);
    double tau = tau_fb;
    if (config.step.spectral && k > 0)
      tau = spectral_step(f_prev, st.f, grad_prev, grad, tau_fb);

    f_prev = st.f;
    grad_prev = grad;
    for (std::size_t j = 0; j < st.f.size(); ++j) st.f[j] -= tau * grad[j];

    cvec tf = T.apply(st.f);
    cvec v(tf.size());
    for (std::size_t j = 0; j < tf.size(); ++j) v[j] = tf[j] - st.sigma[j] / config.beta;
    st.g = shrink(v, config.lambda / config.beta);
    for (std::size_t j = 0; j < tf.size(); ++j)
      st.sigma[j] -= config.beta * (tf[j] - st.g[j]);

    st.iterations = k + 1;
    st.objective_history.push_back(objective(A, T, b, st.f, config.lambda));
    double cnorm = 0.0;
    for (std::size_t j = 0; j < tf.size(); ++j) cnorm += std::norm(tf[j] - st.g[j]);
    st.residual_history.push_back(std::sqrt(cnorm));

    if (!all_finite(st.f) || !std::isfinite(st.objective_history.back()))
      throw std::runtime_error("admm_l1: non-finite iterate at iteration " + std::to_string(k + 1));

    if (config.tol > 0.0) {
      double dn = 0.0;
      for (std::size_t j = 0; j < st.f.size(); ++j) dn += std::norm(st.f[j] - f_prev[j]);
      const double fn = std::max(norm2(f_prev), 1e-300);
      if (std::sqrt(dn) / fn < config.tol) {
        st.stop_reason = "tol";
        break;
      }
    }
  }
  return st;
}

OptimalityResiduals optimality_residuals(const LinearOperator& A, const LinearOperator& T,
                                         const cvec& b, const SolverState& state, double lambda,
                                         double beta) {
  const cvec grad = gradient_f(A, T, b, state.f, state.g, state.sigma, beta);
  const cvec tf = T.apply(state.f);

  double r_sub = 0.0;
  for (std::size_t j = 0; j < tf.size(); ++j) {
    const cplx v = beta * (state.g[j] - tf[j]) + state.sigma[j];
    double d;
    if (state.g[j] != cplx(0.0, 0.0))
      d = std::abs(v + lambda * state.g[j] / std::abs(state.g[j]));
    else
      d = std::max(std::abs(v) - lambda, 0.0);
    r_sub = std::max(r_sub, d);
  }

  double r_con = 0.0;
  for (std::size_t j = 0; j < tf.size(); ++j) r_con = std::max(r_con, std::abs(tf[j] - state.g[j]));

  return {norm_inf(grad), r_sub, r_con};
}

double subgradient_certificate(const LinearOperator& A, const LinearOperator& T, const cvec& b,
                               const cvec& f, double lambda, double support_tol) {
  check_operator(A, "subgradient_certificate(A)");
  check_operator(T, "subgradient_certificate(T)");
  if (!(lambda > 0.0)) throw std::invalid_argument("subgradient_certificate: lambda must be > 0");
  if (T.cols > 2048)
    throw std::invalid_argument("subgradient_certificate: problem too large for dense diagnostics");

  const cvec tf = T.apply(f);
  std::vector<std::size_t> restricted;
  cvec sgn(tf.size(), cplx(0.0, 0.0));
  for (std::size_t j = 0; j < tf.size(); ++j) {
    if (std::abs(tf[j]) > support_tol)
      sgn[j] = tf[j] / std::abs(tf[j]);
    else
      restricted.push_back(j);
  }
  if (restricted.empty())
    throw std::invalid_argument("subgradient_certificate: empty off-support set");

  const cvec af = A.apply(f);
  cvec resid(af.size());
  for (std::size_t j = 0; j < af.size(); ++j) resid[j] = af[j] - b[j];
  cvec r = A.apply_h(resid);
  const cvec ts = T.apply_h(sgn);
  for (std::size_t j = 0; j < r.size(); ++j) r[j] = (2.0 / lambda) * r[j] + ts[j];

  // Dense T_R^H: one adjoint application per restricted row.
  Eigen::MatrixXcd trh(static_cast<Eigen::Index>(T.cols),
                       static_cast<Eigen::Index>(restricted.size()));
  cvec e(tf.size(), cplx(0.0, 0.0));
  for (std::size_t c = 0; c < restricted.size(); ++c) {
    e[restricted[c]] = 1.0;
    const cvec col = T.apply_h(e);
    e[restricted[c]] = 0.0;
    for (std::size_t j = 0; j < col.size(); ++j)
      trh(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(c)) = col[j];
  }

  Eigen::VectorXcd rhs(static_cast<Eigen::Index>(r.size()));
  for (std::size_t j = 0; j < r.size(); ++j) rhs(static_cast<Eigen::Index>(j)) = -r[j];

  const Eigen::VectorXcd u = trh.completeOrthogonalDecomposition().solve(rhs);
  double v = 0.0;
  for (Eigen::Index j = 0; j < u.size(); ++j) v = std::max(v, std::abs(u(j)));
  return v;
}

}  // namespace sarkit::solver

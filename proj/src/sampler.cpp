#include "riw/sampler.hpp"

#include <gsl/gsl_sf_bessel.h>

#include <cmath>
#include <stdexcept>
#include <string>

namespace riw {

Matrix ChainSamples::node_cov(int k) const {
  if (kept < 2)
    throw std::runtime_error("node_cov: need at least 2 streamed draws");
  return node_moments[static_cast<std::size_t>(k)].cov_raw / double(kept - 1);
}

Hyperparameters default_hyperparameters(int n, int p) {
  if (n < 2 || p < 2)
    throw std::invalid_argument("default_hyperparameters: need n,p >= 2");
  Hyperparameters h;
  h.b = 3.0;
  h.a_lambda = Vector(p);
  h.b_lambda = Vector::Ones(p);
  const double lo = std::max(n / 2.0, double(p));
  if (lo >= double(n)) {
    h.a_lambda.setConstant(lo);  // degenerate schedule: clamp, keep positive
  } else {
    for (int k = 0; k < p; ++k)
      h.a_lambda(k) = n + (lo - n) * double(k) / double(p - 1);
  }
  return h;
}

double group_quantity(const SpdMatrix& omega, int k) { return omega(k, k); }

double group_quantity_reference(const SpdMatrix& omega, int k) {
  const int p = omega.dim();
  const Matrix sigma = spd_inverse(omega.matrix());
  // omega_{m,..} = inverse of the m x m leading block of Sigma; the identity
  // sums the sequential-regression contributions of node k.
  double g = spd_inverse(Matrix(sigma.topLeftCorner(k + 1, k + 1)))(k, k);
  for (int m = k + 2; m <= p; ++m) {
    const Matrix block = spd_inverse(Matrix(sigma.topLeftCorner(m, m)));
    g += block(k, m - 1) * block(k, m - 1) / block(m - 1, m - 1);
  }
  return g;
}

Matrix step_update_omega(const ChainState& state, const Matrix& xtx, int n,
                         const Hyperparameters& hyper, RngStream& rng) {
  const int p = state.p();
  Matrix m = xtx;
  m.diagonal() += state.d;
  const Matrix L = cholesky_lower(m);  // (D + X'X) = L L'
  // scale = (D + X'X)^{-1} = L^{-T} L^{-1}; factor C = L^{-T}
  const Matrix C = L.transpose().triangularView<Eigen::Upper>().solve(
      Matrix::Identity(p, p));
  const double df = hyper.b + n + p - 1;
  return sample_wishart_from_factor(df, C, rng);
}

Vector step_update_d(const ChainState& state, const Hyperparameters& hyper,
                     RngStream& rng) {
  const int p = state.p();
  Vector d(p);
  for (int k = 0; k < p; ++k) {
    const double g = state.omega(k, k);
    const double lam = state.lambda(k);
    if (hyper.conditional_d == ConditionalD::PAPER_IG) {
      d(k) = rng.inverse_gaussian(lam / g, lam * lam);
    } else {
      d(k) = rng.gig((p - 3) / 2.0, g, lam * lam);
    }
  }
  return d;
}

Vector step_update_lambda(const ChainState& state, const Hyperparameters& hyper,
                          RngStream& rng) {
  const int p = state.p();
  Vector lam(p);
  for (int k = 0; k < p; ++k) {
    const double a = hyper.a_lambda(k);
    const double bl = hyper.b_lambda(k);
    if (hyper.lambda_shape == LambdaShape::EXACT_CONDITIONAL) {
      // lambda_k | d_k has density ~ lambda^{a+b+1}
      // exp(-bl*lambda - lambda^2/(2 d_k)) — log-concave on (0, inf).
      const double dk = state.d(k);
      const double s = a + hyper.b + 1.0;
      auto h = [s, bl, dk](double x) {
        return s * std::log(x) - bl * x - x * x / (2.0 * dk);
      };
      const double mode =
          0.5 * dk * (-bl + std::sqrt(bl * bl + 4.0 * s / dk));
      lam(k) = sample_log_concave(rng, h, mode, 0.0,
                                  std::numeric_limits<double>::infinity());
    } else {
      const double g = state.omega(k, k);
      const double shape = hyper.b + a +
                           (hyper.lambda_shape == LambdaShape::PAPER_PLUS_ONE
                                ? 1.0
                                : 0.0);
      lam(k) = rng.gamma(shape, bl + std::sqrt(g));
    }
  }
  return lam;
}

double step_update_d_iw_baseline(const ChainState& state,
                                 const Hyperparameters& hyper, RngStream& rng) {
  if (hyper.variant != Variant::IW_BASELINE)
    throw std::logic_error("step_update_d_iw_baseline: variant is not IW");
  const int p = state.p();
  // |D|^{(b+p-1)/2} = d^{p(b+p-1)/2} from the IW kernel, times the Ga(1,1)
  // prior, gives Ga(p(b+p-1)/2 + 1, 1 + tr(Omega)/2).
  const double shape = p * (hyper.b + p - 1) / 2.0 + 1.0;
  const double rate = 1.0 + state.omega.trace() / 2.0;
  return rng.gamma(shape, rate);
}

ChainSamples run_chain(const DataMatrix& data, const Hyperparameters& hyper,
                       int iters, int burnin, int thin, RngStream& rng,
                       bool store_draws) {
  if (!(iters > burnin && burnin >= 0 && thin >= 1))
    throw std::invalid_argument("run_chain: need iters > burnin >= 0, thin >= 1");
  const int n = data.n(), p = data.p();
  const Matrix xtx = data.x.transpose() * data.x;

  ChainState state;
  state.omega = spd_inverse(Matrix(xtx / double(n) +
                                   0.01 * Matrix::Identity(p, p)));
  state.d = Vector::Ones(p);
  state.lambda = hyper.a_lambda.cwiseQuotient(hyper.b_lambda);  // prior means

  ChainSamples out;
  out.p = p;
  out.iters = iters;
  out.burnin = burnin;
  out.thin = thin;
  out.seed = rng.master_seed();
  out.stream = rng.stream_id();
  out.hyper = hyper;
  out.omega_mean = Matrix::Zero(p, p);
  out.node_moments.resize(p);
  for (auto& nm : out.node_moments) {
    nm.mean = Vector::Zero(p - 1);
    nm.cov_raw = Matrix::Zero(p - 1, p - 1);
  }

  Vector beta(p - 1), delta(p - 1);
  for (int it = 0; it < iters; ++it) {
    try {
      state.omega = step_update_omega(state, xtx, n, hyper, rng);
      if (hyper.variant == Variant::IW_BASELINE) {
        state.d.setConstant(step_update_d_iw_baseline(state, hyper, rng));
      } else {
        state.d = step_update_d(state, hyper, rng);
        state.lambda = step_update_lambda(state, hyper, rng);
      }
    } catch (const std::exception& e) {
      throw std::runtime_error("run_chain: aborted at iteration " +
                               std::to_string(it) + ": " + e.what());
    }
    state.iteration = it + 1;
    if (it < burnin) continue;

    ++out.kept;
    out.omega_mean += (state.omega - out.omega_mean) / double(out.kept);
    for (int k = 0; k < p; ++k) {
      const double okk = state.omega(k, k);
      int idx = 0;
      for (int j = 0; j < p; ++j)
        if (j != k) beta(idx++) = -state.omega(k, j) / okk;
      NodeMoments& nm = out.node_moments[static_cast<std::size_t>(k)];
      delta = beta - nm.mean;
      nm.mean += delta / double(out.kept);
      // symmetrized Welford increment: totals equal the batch covariance
      nm.cov_raw.selfadjointView<Eigen::Lower>().rankUpdate(
          delta, beta - nm.mean, 0.5);
    }
    if (store_draws && (it - burnin) % thin == 0)
      out.stored.push_back({state.omega, state.d, state.lambda});
  }
  for (auto& nm : out.node_moments)
    nm.cov_raw = nm.cov_raw.selfadjointView<Eigen::Lower>();
  return out;
}

double log_prior_density(const SpdMatrix& sigma, const Vector& lambda,
                         double b) {
  const int p = sigma.dim();
  const Matrix omega = spd_inverse(sigma.matrix());
  const Matrix L = cholesky_lower(sigma);
  const double logdet_sigma = 2.0 * L.diagonal().array().log().sum();
  const double rho = (p - 3) / 2.0;
  double lp = -(b + 2.0 * p) / 2.0 * logdet_sigma;
  for (int k = 0; k < p; ++k) {
    const double g = omega(k, k);
    const double lam = lambda(k);
    // per-coordinate GIG integral: 2 (lam^2/g)^{rho/2} K_rho(lam sqrt(g)),
    // carrying the lam^{b+2} factor of the inverse-gamma mixing density
    lp += (b + 2.0 + rho) * std::log(lam) - 0.5 * rho * std::log(g) +
          gsl_sf_bessel_lnKnu(std::fabs(rho), lam * std::sqrt(g));
  }
  return lp;
}

double log_prior_kernel_printed(const SpdMatrix& sigma, const Vector& lambda,
                                double b) {
  const int p = sigma.dim();
  const Matrix omega = spd_inverse(sigma.matrix());
  const Matrix L = cholesky_lower(sigma);
  double lp = 0.0;
  for (int k = 0; k < p; ++k) {
    // omega_{k,kk}: reciprocal conditional variance of variable k given its
    // predecessors, = 1/L_kk^2 from the Cholesky regression factorization.
    const double okk = 1.0 / (L(k, k) * L(k, k));
    lp += b * std::log(lambda(k)) + 0.5 * (b + p - 1) * std::log(okk) -
          lambda(k) * std::sqrt(omega(k, k));
  }
  return lp;
}

}  // namespace riw

#include "riw/simbench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "riw/data.hpp"

namespace riw {

SpdMatrix fgn_covariance(const FgnSpec& spec) {
  if (!(spec.hurst >= 0.5 && spec.hurst <= 1.0))
    throw std::invalid_argument("fgn_covariance: hurst must be in [0.5, 1]");
  const double h2 = 2.0 * spec.hurst;
  Matrix sigma(spec.p, spec.p);
  for (int i = 0; i < spec.p; ++i)
    for (int j = 0; j < spec.p; ++j) {
      const double k = std::abs(i - j);
      sigma(i, j) = 0.5 * (std::pow(k + 1.0, h2) - 2.0 * std::pow(k, h2) +
                           std::pow(std::abs(k - 1.0), h2));
    }
  return SpdMatrix(sigma);  // construction re-checks positive definiteness
}

Matrix partial_correlations(const SpdMatrix& omega) {
  const int p = omega.dim();
  Matrix rho = Matrix::Zero(p, p);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j)
      if (i != j)
        rho(i, j) = -omega(i, j) / std::sqrt(omega(i, i) * omega(j, j));
  return rho;
}

Adjacency true_edge_set(const SpdMatrix& omega0, double c_m) {
  const Matrix rho = partial_correlations(omega0);
  const int p = omega0.dim();
  Adjacency adj = Adjacency::Zero(p, p);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j)
      adj(i, j) = i != j && std::abs(rho(i, j)) > c_m;
  return adj;
}

TruthSpec sparse_precision_generator(int p, int hub_count, int hub_degree_min,
                                     RngStream& rng) {
  if (hub_count < 0 || hub_count > p || hub_degree_min < 0 ||
      hub_degree_min > p - 1)
    throw std::invalid_argument("sparse_precision_generator: infeasible spec");
  Matrix m = Matrix::Zero(p, p);
  for (int h = 0; h < hub_count; ++h) {
    std::set<int> partners;
    while (static_cast<int>(partners.size()) < hub_degree_min) {
      const int j = static_cast<int>(rng.uniform() * p);
      if (j != h && j < p) partners.insert(j);
    }
    for (int j : partners) {
      if (m(h, j) != 0.0) continue;
      const double v =
          (0.3 + 0.4 * rng.uniform()) * (rng.uniform() < 0.5 ? -1.0 : 1.0);
      m(h, j) = m(j, h) = v;
    }
  }
  for (int i = 0; i < p; ++i)
    m(i, i) = m.row(i).cwiseAbs().sum() + 0.5;  // diagonal dominance
  return TruthSpec{SpdMatrix(m)};
}

ConfusionMetrics confusion(const Adjacency& estimate, const Adjacency& truth) {
  const int p = static_cast<int>(truth.rows());
  if (estimate.rows() != p || estimate.cols() != truth.cols())
    throw std::invalid_argument("confusion: shape mismatch");
  ConfusionMetrics c;
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j) {
      const bool e = estimate(i, j) != 0, t = truth(i, j) != 0;
      if (e && t)
        ++c.tp;
      else if (e)
        ++c.fp;
      else if (t)
        ++c.fn;
      else
        ++c.tn;
    }
  c.sp = c.tn + c.fp > 0 ? double(c.tn) / double(c.tn + c.fp) : 1.0;
  c.se = c.tp + c.fn > 0 ? double(c.tp) / double(c.tp + c.fn) : 1.0;
  return c;
}

std::pair<double, double> roc_point(const Adjacency& estimate,
                                    const Adjacency& truth) {
  const ConfusionMetrics c = confusion(estimate, truth);
  return {1.0 - c.sp, c.se};
}

double roc_auc(const std::vector<std::pair<double, double>>& points) {
  std::vector<std::pair<double, double>> pts = points;
  pts.emplace_back(0.0, 0.0);
  pts.emplace_back(1.0, 1.0);
  std::sort(pts.begin(), pts.end());  // by fpr, tpr breaking ties
  double auc = 0.0;
  for (std::size_t k = 1; k < pts.size(); ++k)
    auc += 0.5 * (pts[k].second + pts[k - 1].second) *
           (pts[k].first - pts[k - 1].first);
  return auc;
}

double roc_auc(const std::vector<Adjacency>& path, const Adjacency& truth) {
  std::vector<std::pair<double, double>> pts;
  pts.reserve(path.size());
  for (const auto& adj : path) pts.push_back(roc_point(adj, truth));
  return roc_auc(pts);
}

std::vector<std::pair<int, int>> hub_degrees(const Adjacency& adjacency,
                                             int threshold) {
  const int p = static_cast<int>(adjacency.rows());
  std::vector<std::pair<int, int>> hubs;
  for (int i = 0; i < p; ++i) {
    int deg = 0;
    for (int j = 0; j < p; ++j) deg += i != j && adjacency(i, j) != 0;
    if (deg > threshold) hubs.emplace_back(i, deg);
  }
  std::stable_sort(hubs.begin(), hubs.end(), [](const auto& a, const auto& b) {
    return a.second > b.second;
  });
  return hubs;
}

double bic_score(const Matrix& omega_est, const DataMatrix& data) {
  const int p = static_cast<int>(omega_est.rows());
  const int n = data.n();
  Eigen::SelfAdjointEigenSolver<Matrix> es(omega_est, Eigen::EigenvaluesOnly);
  if (!(es.eigenvalues().minCoeff() > 0.0))
    throw std::domain_error("bic_score: non-positive determinant");
  const double logdet = es.eigenvalues().array().log().sum();
  const Matrix s = data.x.transpose() * data.x / double(n);
  int nonzero = 0;
  for (int i = 0; i < p; ++i)
    for (int j = i; j < p; ++j) nonzero += omega_est(i, j) != 0.0;
  return n * (-logdet + (omega_est * s).trace()) +
         std::log(double(n)) / double(n) * nonzero;
}

BenchResult run_fgn_benchmark(int n, int p, double hurst,
                              const std::vector<std::uint64_t>& seeds,
                              const BenchConfig& cfg) {
  BenchResult res;
  res.thresholds = cfg.thresholds;
  if (res.thresholds.empty()) {
    for (int i = 0; i < 20; ++i)
      res.thresholds.push_back(0.005 + (0.26 - 0.005) * i / 19.0);
  }
  const std::size_t nt = res.thresholds.size();

  const SpdMatrix sigma0 = fgn_covariance({p, hurst});
  const SpdMatrix omega0 = spd_inverse(sigma0);
  std::vector<Adjacency> truths;
  truths.reserve(nt);
  for (double cm : res.thresholds) truths.push_back(true_edge_set(omega0, cm));
  const Adjacency truth1 = true_edge_set(omega0, 0.1);

  for (std::uint64_t seed : seeds) {
    const auto t0 = std::chrono::steady_clock::now();
    RngStream data_rng(seed, 0), chain_rng(seed, 1);
    const DataMatrix data = standardize(sample_mvn_zero(sigma0, n, data_rng));

    Hyperparameters hyper = default_hyperparameters(n, p);
    hyper.variant = cfg.variant;
    hyper.conditional_d = cfg.conditional_d;
    hyper.lambda_shape = cfg.lambda_shape;
    const ChainSamples samples =
        run_chain(data, hyper, cfg.iters, cfg.burnin, 1, chain_rng);
    const PathEnsemble ens = build_ensemble(samples);

    // fine Delta grid at (just below) every homotopy knot: the complete
    // ordering of graphs the paths can produce
    std::set<double> knots;
    for (const auto& node : ens.nodes)
      for (const auto& seg : node.path.segments) knots.insert(2.0 * seg.mu_hi);
    std::vector<double> fine{0.0, ens.max_terminal_delta * 1.05};
    for (double kn : knots) fine.push_back(kn * 0.999);

    std::vector<std::vector<std::pair<double, double>>> pts(nt);
    for (double delta : fine) {
      const Adjacency adj = ensemble_adjacency(ens, delta, cfg.rule);
      for (std::size_t t = 0; t < nt; ++t)
        pts[t].push_back(roc_point(adj, truths[t]));
    }

    ReplicateMetrics rm;
    rm.seed = seed;
    for (std::size_t t = 0; t < nt; ++t) rm.auc.push_back(roc_auc(pts[t]));

    const DeltaGrid grid = calibrate_grid(ens, cfg.grid_size);
    const SelectionPath path = build_path(ens, grid, cfg.rule);
    const InclusionMatrix incl = inclusion_matrix(path);
    const FdrThreshold th = fdr_threshold(incl, cfg.eta);
    const GraphEstimate ge =
        point_estimate(incl, th.c_eta, samples.omega_mean);
    const ConfusionMetrics c = confusion(ge.adjacency, truth1);
    rm.sp1 = c.sp;
    rm.se1 = c.se;
    rm.zeta = th.zeta;
    rm.c_eta = th.c_eta;
    rm.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    res.reps.push_back(std::move(rm));
  }

  const double nr = double(res.reps.size());
  res.auc_mean.assign(nt, 0.0);
  res.auc_se.assign(nt, 0.0);
  for (const auto& rm : res.reps)
    for (std::size_t t = 0; t < nt; ++t) res.auc_mean[t] += rm.auc[t] / nr;
  for (const auto& rm : res.reps)
    for (std::size_t t = 0; t < nt; ++t) {
      const double dev = rm.auc[t] - res.auc_mean[t];
      res.auc_se[t] += dev * dev;
    }
  for (std::size_t t = 0; t < nt; ++t)
    res.auc_se[t] =
        nr > 1 ? std::sqrt(res.auc_se[t] / (nr - 1.0) / nr) : 0.0;
  for (const auto& rm : res.reps) {
    res.sp1_mean += rm.sp1 / nr;
    res.se1_mean += rm.se1 / nr;
  }
  return res;
}

}  // namespace riw

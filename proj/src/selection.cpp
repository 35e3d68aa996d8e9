#include "riw/selection.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace riw {

Vector extract_betas(const SpdMatrix& omega, int k) {
  const int p = omega.dim();
  Vector beta(p - 1);
  int idx = 0;
  for (int j = 0; j < p; ++j)
    if (j != k) beta(idx++) = -omega(k, j) / omega(k, k);
  return beta;
}

NodePosterior node_posterior(const ChainSamples& samples, int k) {
  if (samples.kept < samples.p)
    throw std::runtime_error(
        "node_posterior: fewer draws than nodes, covariance rank-deficient");
  NodePosterior np;
  np.node = k;
  np.beta_hat = samples.node_moments[static_cast<std::size_t>(k)].mean;
  np.sigma_hat = samples.node_cov(k);

  Eigen::SelfAdjointEigenSolver<Matrix> es(np.sigma_hat,
                                           Eigen::EigenvaluesOnly);
  const double lo = es.eigenvalues().minCoeff();
  const double hi = es.eigenvalues().maxCoeff();
  if (!(lo > 0.0) || hi / lo > 1e12) {
    const int m = static_cast<int>(np.beta_hat.size());
    np.ridge_applied = 1e-8 * np.sigma_hat.trace() / double(m);
    np.sigma_hat.diagonal().array() += np.ridge_applied;
  }
  return np;
}

NodeSelection solve_node_path(const NodePosterior& np) {
  const int m = static_cast<int>(np.beta_hat.size());
  NodeSelection sel;
  sel.node = np.node;
  sel.coord_to_node.resize(m);
  for (int j = 0; j < m; ++j)
    sel.coord_to_node[j] = j < np.node ? j : j + 1;

  Matrix l;
  try {
    l = cholesky_lower(np.sigma_hat);
  } catch (const DecompositionError&) {
    throw std::runtime_error("solve_node_path: singular Sigma_hat after ridge");
  }
  // A = L^{-1} so that A'A = Sigma_hat^{-1}
  const Matrix a =
      l.triangularView<Eigen::Lower>().solve(Matrix::Identity(m, m));
  const Vector y = a * np.beta_hat;
  Matrix z = a;
  for (int j = 0; j < m; ++j)
    z.col(j) *= np.beta_hat(j) * np.beta_hat(j);  // zero column if beta_hat=0
  sel.path = lasso_path(z, y);
  return sel;
}

std::vector<int> NodeSelection::neighborhood_at(double delta) const {
  std::vector<int> out;
  for (int j : path.support_at(0.5 * delta)) out.push_back(coord_to_node[j]);
  return out;
}

std::vector<std::vector<int>> solve_credible_path(const NodePosterior& np,
                                                  const DeltaGrid& grid) {
  const NodeSelection sel = solve_node_path(np);
  std::vector<std::vector<int>> supports;
  supports.reserve(grid.values.size());
  for (double delta : grid.values)
    supports.push_back(sel.path.support_at(0.5 * delta));
  return supports;
}

Adjacency combine_edges(const std::vector<std::vector<int>>& neighborhoods,
                        CombineRule rule) {
  const int p = static_cast<int>(neighborhoods.size());
  Adjacency sel = Adjacency::Zero(p, p);
  for (int k = 0; k < p; ++k)
    for (int j : neighborhoods[static_cast<std::size_t>(k)]) sel(k, j) = 1;
  Adjacency adj(p, p);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j)
      adj(i, j) = i != j && (rule == CombineRule::AND
                                 ? (sel(i, j) && sel(j, i))
                                 : (sel(i, j) || sel(j, i)));
  return adj;
}

GraphEstimate estimate_precision(const Matrix& omega_mean,
                                 const Adjacency& adjacency) {
  const int p = static_cast<int>(omega_mean.rows());
  if (adjacency.rows() != p || adjacency.cols() != p)
    throw std::invalid_argument("estimate_precision: shape mismatch");
  GraphEstimate ge;
  ge.adjacency = adjacency;
  ge.omega_est = Matrix::Zero(p, p);
  ge.omega_est.diagonal() = omega_mean.diagonal();
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j)
      if (adjacency(i, j)) {
        ge.omega_est(i, j) = ge.omega_est(j, i) = omega_mean(i, j);
        ge.edges.emplace_back(i, j);
      }
  ge.min_eigenvalue = min_eigenvalue(ge.omega_est);
  return ge;
}

PathEnsemble build_ensemble(const ChainSamples& samples) {
  PathEnsemble ens;
  ens.p = samples.p;
  ens.nodes.reserve(samples.p);
  for (int k = 0; k < samples.p; ++k) {
    ens.nodes.push_back(solve_node_path(node_posterior(samples, k)));
    ens.max_terminal_delta =
        std::max(ens.max_terminal_delta, ens.nodes.back().terminal_delta());
  }
  return ens;
}

Adjacency ensemble_adjacency(const PathEnsemble& ens, double delta,
                             CombineRule rule) {
  std::vector<std::vector<int>> nbr;
  nbr.reserve(ens.nodes.size());
  for (const auto& sel : ens.nodes) nbr.push_back(sel.neighborhood_at(delta));
  return combine_edges(nbr, rule);
}

DeltaGrid calibrate_grid(const PathEnsemble& ens, int r) {
  DeltaGrid grid;
  grid.values.push_back(0.0);
  const double dm = ens.max_terminal_delta;
  if (!(dm > 0.0) || r < 2) return grid;
  const double lo = std::log(dm * 1e-5), hi = std::log(dm * 1.05);
  if (r == 2) {
    grid.values.push_back(std::exp(hi));
    return grid;
  }
  for (int i = 0; i < r - 1; ++i)
    grid.values.push_back(std::exp(lo + (hi - lo) * double(i) / double(r - 2)));
  return grid;
}

SelectionPath build_path(const PathEnsemble& ens, const DeltaGrid& grid,
                         CombineRule rule) {
  SelectionPath path;
  path.grid = grid;
  path.rule = rule;
  path.p = ens.p;
  path.adjacency_at.reserve(grid.values.size());
  for (double delta : grid.values)
    path.adjacency_at.push_back(ensemble_adjacency(ens, delta, rule));
  return path;
}

SelectionPath build_path(const ChainSamples& samples, const DeltaGrid& grid,
                         CombineRule rule) {
  return build_path(build_ensemble(samples), grid, rule);
}

}  // namespace riw

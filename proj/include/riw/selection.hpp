#pragma once

#include <utility>
#include <vector>

#include "riw/lasso.hpp"
#include "riw/sampler.hpp"

namespace riw {

enum class CombineRule { AND, OR };

using Adjacency = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;

struct NodePosterior {
  int node = 0;
  Vector beta_hat;        // length p-1, ascending j != node
  Matrix sigma_hat;       // (p-1) x (p-1)
  double ridge_applied = 0.0;
};

struct DeltaGrid {
  std::vector<double> values;  // increasing; first entry 0
  int size() const { return static_cast<int>(values.size()); }
};

struct SelectionPath {
  DeltaGrid grid;
  std::vector<Adjacency> adjacency_at;  // one per grid value
  CombineRule rule = CombineRule::AND;
  int p = 0;
};

struct GraphEstimate {
  Adjacency adjacency;
  std::vector<std::pair<int, int>> edges;  // i < j, 0-based
  Matrix omega_est;
  double min_eigenvalue = 0.0;
};

// One node's solved credible-region path: the weighted-L1 homotopy in
// gamma_j = beta_j / beta_hat_j^2 coordinates, with Delta = 2 mu.
struct NodeSelection {
  int node = 0;
  std::vector<int> coord_to_node;  // beta coordinate -> node index
  LassoPath path;

  double terminal_delta() const { return 2.0 * path.mu_max; }
  std::vector<int> neighborhood_at(double delta) const;  // node indices
};

// All node paths of one chain, ready for support read-off at any Delta.
struct PathEnsemble {
  int p = 0;
  std::vector<NodeSelection> nodes;
  double max_terminal_delta = 0.0;
};

/// beta_kj = -Omega_kj / Omega_kk for j != k, ascending j.
Vector extract_betas(const SpdMatrix& omega, int k);

/// Streamed posterior mean/covariance of beta_k; adds the ridge
/// eps * tr(Sigma_hat)/(p-1), eps = 1e-8, when the condition number
/// exceeds 1e12 (recorded in ridge_applied).
NodePosterior node_posterior(const ChainSamples& samples, int k);

/// Solve one node's homotopy. Factor Sigma_hat^{-1} = A'A with A = L^{-1},
/// response y = A beta_hat, design Z = A diag(beta_hat^2); coordinates with
/// beta_hat_j = 0 are excluded outright (infinite adaptive weight).
NodeSelection solve_node_path(const NodePosterior& np);

/// Supports (beta coordinates) at each grid Delta, from the exact path.
std::vector<std::vector<int>> solve_credible_path(const NodePosterior& np,
                                                  const DeltaGrid& grid);

/// Neighborhoods are node-index sets, one per node.
Adjacency combine_edges(const std::vector<std::vector<int>>& neighborhoods,
                        CombineRule rule);

GraphEstimate estimate_precision(const Matrix& omega_mean,
                                 const Adjacency& adjacency);

PathEnsemble build_ensemble(const ChainSamples& samples);

Adjacency ensemble_adjacency(const PathEnsemble& ens, double delta,
                             CombineRule rule);

/// Global grid {0} followed by r-1 log-spaced points from
/// max_terminal_delta*1e-5 to max_terminal_delta*1.05, spanning the
/// full-support to empty-support range for every node.
DeltaGrid calibrate_grid(const PathEnsemble& ens, int r = 50);

SelectionPath build_path(const PathEnsemble& ens, const DeltaGrid& grid,
                         CombineRule rule);
SelectionPath build_path(const ChainSamples& samples, const DeltaGrid& grid,
                         CombineRule rule);

}  // namespace riw

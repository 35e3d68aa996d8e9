#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "riw/fdr.hpp"
#include "riw/selection.hpp"

namespace riw {

struct FgnSpec {
  int p = 0;
  double hurst = 0.7;
};

struct TruthSpec {
  SpdMatrix omega0;
};

struct ConfusionMetrics {
  long tp = 0, tn = 0, fp = 0, fn = 0;
  double sp = 0.0, se = 0.0;
};

/// Toeplitz fGn covariance:
/// sigma_ij = 0.5 (||i-j|+1|^{2H} - 2|i-j|^{2H} + ||i-j|-1|^{2H}).
SpdMatrix fgn_covariance(const FgnSpec& spec);

/// rho_ij = -omega_ij / sqrt(omega_ii omega_jj); zero diagonal by convention.
Matrix partial_correlations(const SpdMatrix& omega);

/// Edges where |partial correlation| exceeds c_m.
Adjacency true_edge_set(const SpdMatrix& omega0, double c_m);

/// Random SPD precision with hub_count hub nodes of degree >=
/// hub_degree_min; SPD by diagonal dominance, exact zeros elsewhere.
TruthSpec sparse_precision_generator(int p, int hub_count, int hub_degree_min,
                                     RngStream& rng);

ConfusionMetrics confusion(const Adjacency& estimate, const Adjacency& truth);

/// One ROC point (fpr, tpr) of an adjacency against the truth.
std::pair<double, double> roc_point(const Adjacency& estimate,
                                    const Adjacency& truth);

/// Trapezoidal area of ROC points augmented with (0,0) and (1,1), sorted by
/// (fpr, tpr); tied FPRs contribute zero width.
double roc_auc(const std::vector<std::pair<double, double>>& points);
double roc_auc(const std::vector<Adjacency>& path, const Adjacency& truth);

/// Nodes with degree > threshold, sorted by descending degree.
std::vector<std::pair<int, int>> hub_degrees(const Adjacency& adjacency,
                                             int threshold);

/// n(-log|Omega| + tr(Omega X'X/n)) + (log n / n) * #{(i,j): i<=j, w_ij != 0}.
double bic_score(const Matrix& omega_est, const DataMatrix& data);

struct BenchConfig {
  int iters = 15000, burnin = 5000;
  int grid_size = 50;
  double eta = 0.2;
  std::vector<double> thresholds;  // c_m sweep; empty -> 20 even in [.005,.26]
  Variant variant = Variant::RIW;
  ConditionalD conditional_d = ConditionalD::EXACT_GIG;
  LambdaShape lambda_shape = LambdaShape::PAPER_PLUS_ONE;
  CombineRule rule = CombineRule::AND;
};

struct ReplicateMetrics {
  std::uint64_t seed = 0;
  std::vector<double> auc;  // one per threshold
  double sp1 = 0.0, se1 = 0.0;  // point estimate vs c_m = 0.1 truth
  int zeta = 0;
  double c_eta = 0.0;
  double seconds = 0.0;
};

struct BenchResult {
  std::vector<double> thresholds;
  std::vector<ReplicateMetrics> reps;
  std::vector<double> auc_mean, auc_se;
  double sp1_mean = 0.0, se1_mean = 0.0;
};

/// One benchmark sweep: per replicate, fGn data -> chain -> credible paths ->
/// AUC at each threshold (fine knot grid) and the FDR point estimate's
/// SP/SE against the c_m = 0.1 truth.
BenchResult run_fgn_benchmark(int n, int p, double hurst,
                              const std::vector<std::uint64_t>& seeds,
                              const BenchConfig& cfg);

}  // namespace riw

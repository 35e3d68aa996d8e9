#pragma once

#include "riw/selection.hpp"

namespace riw {

struct InclusionMatrix {
  Matrix p_mat;       // symmetric, zero diagonal, entries in [0,1]
  int grid_size = 0;  // R
};

struct FdrThreshold {
  double c_eta = 0.0;  // inclusion cutoff; > 1 when nothing qualifies
  int zeta = 0;        // selected count
};

/// P_ij = fraction of grid Deltas at which edge (i,j) is present.
InclusionMatrix inclusion_matrix(const SelectionPath& path);

/// Sort upper-triangular inclusion probabilities descending (ties broken by
/// row-major index) into P~; zeta = max{ j* : (1/j*) sum_{k<=j*} q_k <= eta }
/// with q_k = 1 - P~_k, and c_eta = P~_zeta. printed_rule uses the literal
/// running mean of P~ itself instead of its complement.
FdrThreshold fdr_threshold(const InclusionMatrix& incl, double eta,
                           bool printed_rule = false);

/// Edges with P_ij >= c_eta; precision masked through estimate_precision.
GraphEstimate point_estimate(const InclusionMatrix& incl, double c_eta,
                             const Matrix& omega_mean);

}  // namespace riw

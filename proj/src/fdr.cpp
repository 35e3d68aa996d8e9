#include "riw/fdr.hpp"

#include <algorithm>
#include <stdexcept>

namespace riw {

InclusionMatrix inclusion_matrix(const SelectionPath& path) {
  if (path.adjacency_at.empty())
    throw std::invalid_argument("inclusion_matrix: empty selection path");
  const int p = path.p;
  InclusionMatrix incl;
  incl.grid_size = static_cast<int>(path.adjacency_at.size());
  incl.p_mat = Matrix::Zero(p, p);
  for (const auto& adj : path.adjacency_at)
    incl.p_mat += adj.cast<double>();
  incl.p_mat /= double(incl.grid_size);
  incl.p_mat.diagonal().setZero();
  return incl;
}

FdrThreshold fdr_threshold(const InclusionMatrix& incl, double eta,
                           bool printed_rule) {
  if (!(eta > 0.0 && eta < 1.0))
    throw std::invalid_argument("fdr_threshold: eta must be in (0,1)");
  const int p = static_cast<int>(incl.p_mat.rows());
  if (p < 2)
    throw std::invalid_argument("fdr_threshold: need at least one edge slot");

  // stable sort keeps row-major order among ties
  std::vector<double> pt;
  pt.reserve(std::size_t(p) * (p - 1) / 2);
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j) pt.push_back(incl.p_mat(i, j));
  std::stable_sort(pt.begin(), pt.end(), std::greater<double>());

  FdrThreshold th;
  double run = 0.0;
  for (std::size_t k = 0; k < pt.size(); ++k) {
    run += printed_rule ? pt[k] : 1.0 - pt[k];
    if (run / double(k + 1) <= eta) th.zeta = static_cast<int>(k + 1);
  }
  th.c_eta = th.zeta > 0 ? pt[std::size_t(th.zeta - 1)] : 2.0;
  return th;
}

GraphEstimate point_estimate(const InclusionMatrix& incl, double c_eta,
                             const Matrix& omega_mean) {
  const int p = static_cast<int>(incl.p_mat.rows());
  Adjacency adj = Adjacency::Zero(p, p);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j)
      adj(i, j) = i != j && incl.p_mat(i, j) >= c_eta;
  return estimate_precision(omega_mean, adj);
}

}  // namespace riw

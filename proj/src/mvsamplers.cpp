#include "riw/mvsamplers.hpp"

#include <cmath>
#include <stdexcept>

namespace riw {

Matrix sample_wishart_from_factor(double df, const Matrix& factor,
                                  RngStream& rng) {
  const int p = static_cast<int>(factor.rows());
  if (!(df > p - 1))
    throw std::domain_error("sample_wishart: df must exceed dim - 1");
  Matrix A = Matrix::Zero(p, p);
  for (int i = 0; i < p; ++i) {
    A(i, i) = std::sqrt(rng.chi_square(df - i));
    for (int j = 0; j < i; ++j) A(i, j) = rng.normal();
  }
  const Matrix W = factor * A;
  Matrix out = W * W.transpose();
  return 0.5 * (out + out.transpose());
}

Matrix sample_wishart_std(double df, const SpdMatrix& scale, RngStream& rng) {
  return sample_wishart_from_factor(df, cholesky_lower(scale), rng);
}

Matrix sample_mvn_zero(const SpdMatrix& cov, int n, RngStream& rng) {
  const int p = cov.dim();
  const Matrix L = cholesky_lower(cov);
  Matrix X(n, p);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < p; ++j) X(i, j) = rng.normal();
  return X * L.transpose();
}

}  // namespace riw

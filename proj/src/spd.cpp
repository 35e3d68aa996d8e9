#include "riw/spd.hpp"

#include <cmath>

namespace riw {

namespace {

// Plain left-looking Cholesky so we can report the failing pivot index.
Matrix cholesky_or_throw(const Matrix& m) {
  const int p = static_cast<int>(m.rows());
  Matrix L = Matrix::Zero(p, p);
  for (int j = 0; j < p; ++j) {
    double s = m(j, j);
    for (int k = 0; k < j; ++k) s -= L(j, k) * L(j, k);
    if (!(s > 0.0) || !std::isfinite(s))
      throw DecompositionError(
          "cholesky: matrix not positive definite at pivot " +
              std::to_string(j),
          j);
    L(j, j) = std::sqrt(s);
    for (int i = j + 1; i < p; ++i) {
      double t = m(i, j);
      for (int k = 0; k < j; ++k) t -= L(i, k) * L(j, k);
      L(i, j) = t / L(j, j);
    }
  }
  return L;
}

}  // namespace

SpdMatrix::SpdMatrix(const Matrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw std::invalid_argument("SpdMatrix: matrix must be square, nonempty");
  const double scale = m.cwiseAbs().maxCoeff();
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (scale > 0.0 && asym > 1e-12 * scale)
    throw std::invalid_argument("SpdMatrix: matrix not symmetric");
  m_ = 0.5 * (m + m.transpose());
  cholesky_or_throw(m_);  // positive definiteness check
}

SpdMatrix SpdMatrix::identity(int dim) {
  return SpdMatrix(Matrix::Identity(dim, dim));
}

Matrix cholesky_lower(const Matrix& m) { return cholesky_or_throw(m); }

Matrix spd_inverse(const Matrix& m) {
  const Matrix L = cholesky_or_throw(m);
  const int p = static_cast<int>(m.rows());
  // m^{-1} = L^{-T} L^{-1}
  Matrix Linv = L.triangularView<Eigen::Lower>().solve(Matrix::Identity(p, p));
  Matrix inv = Linv.transpose() * Linv;
  return 0.5 * (inv + inv.transpose());
}

double min_eigenvalue(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (m + m.transpose()),
                                           Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

}  // namespace riw

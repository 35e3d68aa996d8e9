#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace riw {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

struct DecompositionError : std::runtime_error {
  explicit DecompositionError(const std::string& what, int pivot = -1)
      : std::runtime_error(what), failing_pivot(pivot) {}
  int failing_pivot;
};

// Symmetric positive definite matrix. Construction symmetrizes via
// (M + M^T)/2, rejects asymmetry beyond 1e-12 relative and verifies
// positive definiteness through a Cholesky pivot check.
class SpdMatrix {
 public:
  explicit SpdMatrix(const Matrix& m);
  static SpdMatrix identity(int dim);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& matrix() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }

 private:
  Matrix m_;
};

/// Lower Cholesky factor L with L L^T = m. Throws DecompositionError naming
/// the failing pivot on non-SPD input.
Matrix cholesky_lower(const Matrix& m);
inline Matrix cholesky_lower(const SpdMatrix& m) {
  return cholesky_lower(m.matrix());
}

/// Inverse of an SPD matrix via its Cholesky factorization.
Matrix spd_inverse(const Matrix& m);
inline SpdMatrix spd_inverse(const SpdMatrix& m) {
  return SpdMatrix(spd_inverse(m.matrix()));
}

/// Smallest eigenvalue of a symmetric matrix.
double min_eigenvalue(const Matrix& m);

}  // namespace riw

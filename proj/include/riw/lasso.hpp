#pragma once

#include <vector>

#include "riw/spd.hpp"

namespace riw {

// Full homotopy path of min_g 0.5 ||y - Z g||^2 + mu ||g||_1 over mu >= 0.
// Segment m covers mu in [knot(m+1), knot(m)) (knot(M) := 0) where the
// active set is constant and g_A(mu) = u_A - mu * w_A.
struct LassoPath {
  struct Segment {
    double mu_hi;             // upper knot of the segment
    std::vector<int> active;  // ascending column indices
    Vector u;                 // aligned with active
    Vector w;
  };
  std::vector<Segment> segments;  // ordered by decreasing mu_hi
  double mu_max = 0.0;            // support is empty for mu >= mu_max

  std::vector<int> support_at(double mu) const;
  Vector coef_at(double mu, int ncols) const;  // dense coefficient vector
};

/// Least-angle homotopy with drops. Zero columns never activate; coincident
/// knots are processed in ascending column order for determinism.
LassoPath lasso_path(const Matrix& z, const Vector& y);

}  // namespace riw

#pragma once

#include "riw/rng.hpp"
#include "riw/spd.hpp"

namespace riw {

/// Draw from the standard Wishart W_p(df, scale) with density
/// |W|^{(df-p-1)/2} exp(-tr(scale^{-1} W)/2), df > p-1, via the Bartlett
/// construction. `factor` is any matrix C with C C^T = scale.
Matrix sample_wishart_from_factor(double df, const Matrix& factor,
                                  RngStream& rng);

Matrix sample_wishart_std(double df, const SpdMatrix& scale, RngStream& rng);

/// n i.i.d. rows from N(0, cov); returns an n x p matrix (possibly n = 0).
Matrix sample_mvn_zero(const SpdMatrix& cov, int n, RngStream& rng);

}  // namespace riw

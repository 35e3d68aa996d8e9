#pragma once

#include "riw/spd.hpp"

namespace riw {

// Observation matrix with standardization bookkeeping. Column moments are
// retained so estimates can be mapped back to the original scale.
struct DataMatrix {
  Matrix x;
  bool standardized = false;
  Vector column_means;
  Vector column_sds;

  int n() const { return static_cast<int>(x.rows()); }
  int p() const { return static_cast<int>(x.cols()); }
};

/// Center each column and scale to unit sample SD (n-1 denominator).
/// Throws std::invalid_argument naming the (1-based) column if one is
/// constant or n < 2.
DataMatrix standardize(const Matrix& raw);

}  // namespace riw

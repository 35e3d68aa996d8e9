#include "riw/data.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace riw {

DataMatrix standardize(const Matrix& raw) {
  const int n = static_cast<int>(raw.rows());
  const int p = static_cast<int>(raw.cols());
  if (n < 2) throw std::invalid_argument("standardize: need at least 2 rows");

  DataMatrix out;
  out.x = raw;
  out.column_means = Vector(p);
  out.column_sds = Vector(p);
  for (int j = 0; j < p; ++j) {
    const double mean = raw.col(j).mean();
    const double ss = (raw.col(j).array() - mean).square().sum();
    const double sd = std::sqrt(ss / (n - 1));
    if (!(sd > 0.0))
      throw std::invalid_argument("standardize: column " + std::to_string(j + 1) +
                                  " is constant");
    out.column_means(j) = mean;
    out.column_sds(j) = sd;
    out.x.col(j) = (raw.col(j).array() - mean) / sd;
  }
  out.standardized = true;
  return out;
}

}  // namespace riw

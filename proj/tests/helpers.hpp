#pragma once

#include <gsl/gsl_sf_gamma.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "riw/rng.hpp"
#include "riw/spd.hpp"

namespace testutil {

inline riw::Matrix random_spd(int p, riw::RngStream& rng, double bump = 0.5) {
  riw::Matrix a(p, p);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) a(i, j) = rng.normal();
  riw::Matrix s = a * a.transpose() / double(p);
  s.diagonal().array() += bump;
  return s;
}

// One-sample Kolmogorov-Smirnov p-value against a given CDF.
inline double ks_pvalue(std::vector<double> x,
                        const std::function<double(double)>& cdf) {
  std::sort(x.begin(), x.end());
  const double n = double(x.size());
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double f = cdf(x[i]);
    d = std::max(d, std::abs(f - double(i) / n));
    d = std::max(d, std::abs(double(i + 1) / n - f));
  }
  const double t = (std::sqrt(n) + 0.12 + 0.11 / std::sqrt(n)) * d;
  double q = 0.0;
  for (int k = 1; k <= 100; ++k)
    q += 2.0 * (k % 2 ? 1.0 : -1.0) * std::exp(-2.0 * k * k * t * t);
  return std::clamp(q, 0.0, 1.0);
}

inline double gamma_cdf(double x, double shape, double rate) {
  return x <= 0.0 ? 0.0 : gsl_sf_gamma_inc_P(shape, rate * x);
}

// log of integral_lo^hi exp(logf(t)) dt by the trapezoid rule on m points.
inline double log_integral(const std::function<double(double)>& logf,
                           double lo, double hi, int m = 20000) {
  const double h = (hi - lo) / (m - 1);
  double peak = -1e308;
  std::vector<double> vals(m);
  for (int i = 0; i < m; ++i) {
    vals[std::size_t(i)] = logf(lo + i * h);
    peak = std::max(peak, vals[std::size_t(i)]);
  }
  double s = 0.0;
  for (int i = 0; i < m; ++i)
    s += std::exp(vals[std::size_t(i)] - peak) * (i == 0 || i == m - 1 ? 0.5 : 1.0);
  return peak + std::log(s * h);
}

// Mean and standard error of a sample.
struct MeanSe {
  double mean, se;
};
inline MeanSe mean_se(const std::vector<double>& x) {
  const double n = double(x.size());
  double m = 0.0;
  for (double v : x) m += v / n;
  double var = 0.0;
  for (double v : x) var += (v - m) * (v - m) / (n - 1.0);
  return {m, std::sqrt(var / n)};
}

// Batch-means standard error for autocorrelated chains.
inline MeanSe batch_mean_se(const std::vector<double>& x, int batches = 30) {
  const std::size_t len = x.size() / std::size_t(batches);
  std::vector<double> bm;
  for (int b = 0; b < batches; ++b) {
    double s = 0.0;
    for (std::size_t i = 0; i < len; ++i) s += x[std::size_t(b) * len + i];
    bm.push_back(s / double(len));
  }
  return mean_se(bm);
}

}  // namespace testutil

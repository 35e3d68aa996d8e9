#pragma once

#include <cstdint>
#include <random>

namespace riw {

// Deterministic, splittable random stream. A (master seed, stream id) pair
// fully determines the sequence; distinct stream ids give independent
// streams for replicate-level parallelism. All distribution sampling is
// implemented here rather than with std:: distributions so that output is
// bit-identical across standard library implementations.
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::uint64_t stream_id);

  std::uint64_t master_seed() const { return master_seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  /// Uniform on (0,1), never returning exactly 0 or 1.
  double uniform();

  /// Standard normal via the polar method.
  double normal();

  /// Gamma(shape, rate); mean shape/rate. Marsaglia-Tsang.
  double gamma(double shape, double rate);

  /// Chi-square with df degrees of freedom (df need not be integral).
  double chi_square(double df);

  double exponential(double rate);

  /// Inverse gamma with the usual (shape, scale) parametrization:
  /// density ~ x^{-shape-1} exp(-scale/x).
  double inverse_gamma(double shape, double scale);

  /// Inverse Gaussian with mean mu and shape lambda (Michael-Schucany-Haas).
  double inverse_gaussian(double mu, double lambda);

  /// Generalized inverse Gaussian: density ~ x^{order-1} exp(-(a x + b/x)/2),
  /// a > 0, b > 0, any real order. Order +-1/2 takes the inverse-Gaussian
  /// fast path; the general case uses log-concave rejection in log space.
  double gig(double order, double a, double b);

 private:
  double gig_general(double order, double omega);  // two-parameter form

  std::uint64_t master_seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 gen_;
  bool have_spare_normal_ = false;
  double spare_normal_ = 0.0;
};

// Rejection sampler for a density exp(h(x)) with h concave on (lo, hi),
// given the mode. Used by the GIG sampler and the exact lambda update.
// h need not be normalized.
template <typename LogDensity>
double sample_log_concave(RngStream& rng, const LogDensity& h, double mode,
                          double lo, double hi);

}  // namespace riw

#include "riw/rng_impl.hpp"

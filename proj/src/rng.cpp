#include "riw/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace riw {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream_id)
    : master_seed_(master_seed), stream_id_(stream_id) {
  // Mix seed and stream through splitmix64 so that nearby (seed, stream)
  // pairs land far apart in mt19937_64 state space.
  std::uint64_t s = master_seed ^ (0x632be59bd9b4e019ULL * (stream_id + 1));
  std::seed_seq seq{static_cast<std::uint32_t>(splitmix64(s)),
                    static_cast<std::uint32_t>(splitmix64(s) >> 32),
                    static_cast<std::uint32_t>(splitmix64(s)),
                    static_cast<std::uint32_t>(splitmix64(s) >> 32),
                    static_cast<std::uint32_t>(splitmix64(s)),
                    static_cast<std::uint32_t>(splitmix64(s) >> 32)};
  gen_.seed(seq);
  have_spare_normal_ = false;
}

double RngStream::uniform() {
  // 53-bit mantissa; strictly inside (0,1).
  const double u = ((gen_() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
  return u;
}

double RngStream::normal() {
  if (have_spare_normal_) {
    have_spare_normal_ = false;
    return spare_normal_;
  }
  double u, v, s;
  do {
    u = 2.0 * uniform() - 1.0;
    v = 2.0 * uniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double f = std::sqrt(-2.0 * std::log(s) / s);
  spare_normal_ = v * f;
  have_spare_normal_ = true;
  return u * f;
}

double RngStream::gamma(double shape, double rate) {
  if (!(shape > 0.0) || !(rate > 0.0))
    throw std::domain_error("gamma: shape and rate must be positive");
  if (shape < 1.0) {
    // Boost trick: Ga(shape) = Ga(shape+1) * U^{1/shape}
    const double u = uniform();
    return gamma(shape + 1.0, rate) * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v / rate;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v)))
      return d * v / rate;
  }
}

double RngStream::chi_square(double df) {
  if (!(df > 0.0)) throw std::domain_error("chi_square: df must be positive");
  return gamma(0.5 * df, 0.5);
}

double RngStream::exponential(double rate) {
  return -std::log(uniform()) / rate;
}

double RngStream::inverse_gamma(double shape, double scale) {
  return scale / gamma(shape, 1.0);
}

double RngStream::inverse_gaussian(double mu, double lambda) {
  if (!(mu > 0.0) || !(lambda > 0.0))
    throw std::domain_error("inverse_gaussian: parameters must be positive");
  const double nu = normal();
  const double y = nu * nu;
  const double x = mu + mu * mu * y / (2.0 * lambda) -
                   mu / (2.0 * lambda) *
                       std::sqrt(4.0 * mu * lambda * y + mu * mu * y * y);
  if (uniform() <= mu / (mu + x)) return x;
  return mu * mu / x;
}

double RngStream::gig(double order, double a, double b) {
  if (!(a > 0.0) || !(b > 0.0))
    throw std::domain_error("gig: a and b must be positive");
  const double eta = std::sqrt(b / a);  // scale
  if (order == -0.5) return inverse_gaussian(eta, b);
  if (order == 0.5) return 1.0 / inverse_gaussian(1.0 / eta, a);
  const double omega = std::sqrt(a * b);
  return eta * gig_general(order, omega);
}

double RngStream::gig_general(double order, double omega) {
  // Two-parameter GIG: density ~ y^{order-1} exp(-omega (y + 1/y)/2).
  // In t = log y the log density order*t - omega*cosh(t) is concave for
  // every order, so the universal log-concave sampler applies.
  const double mode_t = std::asinh(order / omega);
  auto h = [order, omega](double t) {
    return order * t - omega * std::cosh(t);
  };
  const double inf = std::numeric_limits<double>::infinity();
  const double t = sample_log_concave(*this, h, mode_t, -inf, inf);
  return std::exp(t);
}

}  // namespace riw

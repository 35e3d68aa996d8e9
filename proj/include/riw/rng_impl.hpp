#pragma once

#include <cmath>
#include <limits>

namespace riw {

template <typename LogDensity>
double sample_log_concave(RngStream& rng, const LogDensity& h, double mode,
                          double lo, double hi) {
  const double hm = h(mode);

  // Locate the points left/right of the mode where h drops by 1,
  // by doubling then bisection. Concavity makes h monotone on each side.
  auto drop_point = [&](double dir) {
    double step = 0.1 * (1.0 + std::abs(mode));
    double x = mode + dir * step;
    int guard = 0;
    while ((dir > 0 ? x < hi : x > lo) && h(x) > hm - 1.0 && guard++ < 200) {
      step *= 2.0;
      x = mode + dir * step;
    }
    double inner = mode, outer = x;
    for (int i = 0; i < 80; ++i) {
      double mid = 0.5 * (inner + outer);
      if (h(mid) > hm - 1.0)
        inner = mid;
      else
        outer = mid;
    }
    return 0.5 * (inner + outer);
  };
  const double a = drop_point(-1.0);
  const double b = drop_point(+1.0);

  const double wl = mode - a, wr = b - mode;
  const double area_center = b - a;
  const double area_left = wl * std::exp(-1.0);
  const double area_right = wr * std::exp(-1.0);
  const double total = area_center + area_left + area_right;

  for (;;) {
    const double u = rng.uniform() * total;
    double x, env;
    if (u < area_center) {
      x = a + rng.uniform() * (b - a);
      env = hm;
    } else if (u < area_center + area_right) {
      const double e = -std::log(rng.uniform());
      x = b + e * wr;
      env = hm - 1.0 - e;
    } else {
      const double e = -std::log(rng.uniform());
      x = a - e * wl;
      env = hm - 1.0 - e;
    }
    if (x <= lo || x >= hi) continue;
    if (std::log(rng.uniform()) <= h(x) - env) return x;
  }
}

}  // namespace riw

#include "riw/lasso.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace riw {

std::vector<int> LassoPath::support_at(double mu) const {
  if (segments.empty() || mu >= mu_max) return {};
  // last segment whose upper knot exceeds mu holds the active set there
  const Segment* seg = &segments.front();
  for (const auto& s : segments) {
    if (s.mu_hi > mu)
      seg = &s;
    else
      break;
  }
  return seg->active;
}

Vector LassoPath::coef_at(double mu, int ncols) const {
  Vector g = Vector::Zero(ncols);
  if (segments.empty() || mu >= mu_max) return g;
  const Segment* seg = &segments.front();
  for (const auto& s : segments) {
    if (s.mu_hi > mu)
      seg = &s;
    else
      break;
  }
  for (std::size_t i = 0; i < seg->active.size(); ++i)
    g(seg->active[i]) = seg->u(i) - mu * seg->w(i);
  return g;
}

LassoPath lasso_path(const Matrix& z, const Vector& y) {
  const int m = static_cast<int>(z.cols());
  LassoPath path;

  const Vector zty = z.transpose() * y;
  std::vector<bool> usable(m);
  for (int j = 0; j < m; ++j) usable[j] = z.col(j).squaredNorm() > 0.0;

  double mu = 0.0;
  int first = -1;
  for (int j = 0; j < m; ++j)
    if (usable[j] && std::abs(zty(j)) > mu) {
      mu = std::abs(zty(j));
      first = j;
    }
  path.mu_max = mu;
  if (first < 0) return path;  // y orthogonal to every usable column

  const double tol = 1e-10 * mu;
  std::vector<int> active{first};
  std::vector<double> sign{zty(first) > 0 ? 1.0 : -1.0};

  const int max_events = 1000 + 50 * m;
  for (int ev = 0; ev < max_events; ++ev) {
    const int na = static_cast<int>(active.size());
    Matrix za(z.rows(), na);
    Vector s(na);
    for (int i = 0; i < na; ++i) {
      za.col(i) = z.col(active[i]);
      s(i) = sign[i];
    }
    const Matrix g = za.transpose() * za;
    Eigen::LDLT<Matrix> ldlt(g);
    const Vector u = ldlt.solve(za.transpose() * y);
    const Vector w = ldlt.solve(s);

    // event candidates below the current mu: activations of inactive
    // columns (|c_j(mu)| reaches mu) and zero-crossings of active ones
    const Vector zau = za * u, zaw = za * w;
    double best = -1.0;
    int best_j = -1;
    bool best_join = false;
    double best_sign = 0.0;
    auto consider = [&](double cand, int j, bool join, double sgn) {
      if (!(cand > tol) || cand >= mu - tol) return;
      if (cand > best + tol ||
          (std::abs(cand - best) <= tol && j < best_j)) {
        best = cand;
        best_j = j;
        best_join = join;
        best_sign = sgn;
      }
    };
    std::vector<bool> is_active(m, false);
    for (int j : active) is_active[j] = true;
    for (int j = 0; j < m; ++j) {
      if (!usable[j] || is_active[j]) continue;
      const double a = zty(j) - z.col(j).dot(zau);
      const double b = z.col(j).dot(zaw);
      if (std::abs(1.0 - b) > 1e-14) consider(a / (1.0 - b), j, true, 1.0);
      if (std::abs(1.0 + b) > 1e-14) consider(-a / (1.0 + b), j, true, -1.0);
    }
    for (int i = 0; i < na; ++i) {
      if (std::abs(w(i)) > 1e-14)
        consider(u(i) / w(i), active[i], false, 0.0);
    }

    path.segments.push_back({mu, active, u, w});
    if (best_j < 0) break;  // segment extends to mu = 0

    mu = best;
    if (best_join) {
      const auto pos = std::lower_bound(active.begin(), active.end(), best_j);
      const auto off = pos - active.begin();
      active.insert(pos, best_j);
      sign.insert(sign.begin() + off, best_sign);
    } else {
      const auto pos = std::find(active.begin(), active.end(), best_j);
      const auto off = pos - active.begin();
      active.erase(pos);
      sign.erase(sign.begin() + off);
      if (active.empty()) break;  // path ends early (cannot happen for mu>0)
    }
  }
  return path;
}

}  // namespace riw

#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "riw/mvsamplers.hpp"
#include "riw/rng.hpp"
#include "riw/spd.hpp"

using namespace riw;
using testutil::gamma_cdf;
using testutil::ks_pvalue;
using testutil::log_integral;
using testutil::random_spd;

TEST_CASE("rng streams are reproducible and distinct") {
  RngStream a(42, 0), b(42, 0), c(42, 1);
  for (int i = 0; i < 100; ++i) {
    const double x = a.uniform();
    CHECK(x == b.uniform());
    CHECK(x > 0.0);
    CHECK(x < 1.0);
  }
  bool same = true;
  RngStream a2(42, 0);
  for (int i = 0; i < 10; ++i) same = same && a2.uniform() == c.uniform();
  CHECK_FALSE(same);
}

TEST_CASE("gamma sampler") {
  RngStream rng(7, 0);
  SUBCASE("Ga(1,1) is Exp(1)") {
    std::vector<double> x(100000);
    for (auto& v : x) v = rng.gamma(1.0, 1.0);
    CHECK(ks_pvalue(x, [](double t) { return 1.0 - std::exp(-t); }) > 0.01);
  }
  SUBCASE("mean of Ga(3,2)") {
    const int n = 1000000;
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += rng.gamma(3.0, 2.0);
    // variance 3/4 => se = sqrt(0.75/n)
    CHECK(std::abs(s / n - 1.5) < 3.0 * std::sqrt(0.75 / n));
  }
  SUBCASE("Ga(0.5,1) density histogram") {
    const int n = 200000, bins = 40;
    const double hi = 4.0, w = hi / bins;
    std::vector<double> count(bins, 0.0);
    for (int i = 0; i < n; ++i) {
      const double x = rng.gamma(0.5, 1.0);
      if (x < hi) count[std::size_t(x / w)] += 1.0;
    }
    double sup = 0.0;
    for (int b = 0; b < bins; ++b) {
      const double mass =
          gamma_cdf((b + 1) * w, 0.5, 1.0) - gamma_cdf(b * w, 0.5, 1.0);
      // compare average densities over the bin
      sup = std::max(sup, std::abs(count[std::size_t(b)] / n - mass) / w);
    }
    CHECK(sup < 0.02);
  }
  SUBCASE("KS against the gamma law") {
    std::vector<double> x(50000);
    for (auto& v : x) v = rng.gamma(2.5, 1.5);
    CHECK(ks_pvalue(x, [](double t) { return gamma_cdf(t, 2.5, 1.5); }) > 0.01);
  }
  SUBCASE("domain errors") {
    CHECK_THROWS_AS((void)rng.gamma(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS((void)rng.gamma(1.0, -1.0), std::domain_error);
  }
}

TEST_CASE("normal sampler moments") {
  RngStream rng(9, 0);
  const int n = 500000;
  double m = 0.0, s2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = rng.normal();
    m += x / n;
    s2 += x * x / n;
  }
  CHECK(std::abs(m) < 3.0 / std::sqrt(double(n)));
  CHECK(std::abs(s2 - 1.0) < 3.0 * std::sqrt(2.0 / n));
}

TEST_CASE("gig sampler") {
  RngStream rng(11, 0);
  SUBCASE("order -1/2 is inverse-Gaussian, mean mu") {
    // IG(mu, lam): gig(-1/2, lam/mu^2, lam)
    const double mu = 2.0, lam = 4.0;
    const int n = 1000000;
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += rng.gig(-0.5, lam / (mu * mu), lam);
    const double var = mu * mu * mu / lam;
    CHECK(std::abs(s / n - mu) < 3.0 * std::sqrt(var / n));
  }
  SUBCASE("order -1 mean against quadrature") {
    auto logf = [](double x) { return -2.0 * std::log(x) - 0.5 * (x + 1.0 / x); };
    auto logxf = [&](double x) { return std::log(x) + logf(x); };
    const double mean_q =
        std::exp(log_integral(logxf, 1e-8, 60.0) - log_integral(logf, 1e-8, 60.0));
    const int n = 1000000;
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += rng.gig(-1.0, 1.0, 1.0);
    CHECK(s / n == doctest::Approx(mean_q).epsilon(0.01));
  }
  SUBCASE("order -1 median against quadrature") {
    auto logf = [](double x) {
      return -2.0 * std::log(x) - 0.5 * (4.0 * x + 1.0 / x);
    };
    const double total = log_integral(logf, 1e-8, 30.0);
    // bisect for the median of the density
    double lo = 1e-6, hi = 30.0;
    for (int it = 0; it < 60; ++it) {
      const double mid = 0.5 * (lo + hi);
      (std::exp(log_integral(logf, 1e-8, mid, 4000) - total) < 0.5 ? lo : hi) =
          mid;
    }
    const double median = 0.5 * (lo + hi);
    const int n = 200000;
    double below = 0.0;
    for (int i = 0; i < n; ++i) below += rng.gig(-1.0, 4.0, 1.0) < median;
    CHECK(std::abs(below / n - 0.5) < 3.0 * std::sqrt(0.25 / n));
  }
  SUBCASE("general order matches the +1/2 fast path in law") {
    // gig(0.3, 2, 3) via rejection: check mean against quadrature
    auto logf = [](double x) {
      return -0.7 * std::log(x) - 0.5 * (2.0 * x + 3.0 / x);
    };
    auto logxf = [&](double x) { return std::log(x) + logf(x); };
    const double mean_q =
        std::exp(log_integral(logxf, 1e-8, 60.0) - log_integral(logf, 1e-8, 60.0));
    const int n = 300000;
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += rng.gig(0.3, 2.0, 3.0);
    CHECK(s / n == doctest::Approx(mean_q).epsilon(0.01));
  }
  SUBCASE("domain errors") {
    CHECK_THROWS_AS((void)rng.gig(-1.0, 0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS((void)rng.gig(-1.0, 1.0, -2.0), std::domain_error);
  }
}

TEST_CASE("cholesky_lower") {
  SUBCASE("identity") {
    CHECK((cholesky_lower(Matrix(Matrix::Identity(3, 3))) -
           Matrix::Identity(3, 3))
              .norm() == doctest::Approx(0.0));
  }
  SUBCASE("hand 2x2") {
    Matrix m(2, 2);
    m << 4, 2, 2, 3;
    const Matrix l = cholesky_lower(m);
    CHECK(l(0, 0) == doctest::Approx(2.0));
    CHECK(l(0, 1) == 0.0);
    CHECK(l(1, 0) == doctest::Approx(1.0));
    CHECK(l(1, 1) == doctest::Approx(std::sqrt(2.0)));
  }
  SUBCASE("round trip p=6") {
    RngStream rng(3, 0);
    const Matrix m = random_spd(6, rng);
    const Matrix l = cholesky_lower(m);
    CHECK((l * l.transpose() - m).norm() / m.norm() < 1e-10);
  }
  SUBCASE("failing pivot is named") {
    Matrix m = Matrix::Identity(3, 3);
    m(2, 2) = -1.0;
    try {
      cholesky_lower(m);
      FAIL("expected DecompositionError");
    } catch (const DecompositionError& e) {
      CHECK(e.failing_pivot == 2);
    }
  }
}

TEST_CASE("SpdMatrix invariants") {
  Matrix m(2, 2);
  m << 1, 0.9, 0.2, 1;  // grossly asymmetric
  CHECK_THROWS_AS(SpdMatrix{m}, std::invalid_argument);
  Matrix bad = Matrix::Identity(2, 2);
  bad(1, 1) = 0.0;
  CHECK_THROWS_AS(SpdMatrix{bad}, DecompositionError);
  // near-symmetric drift is absorbed
  RngStream r(5, 0);
  Matrix drift = random_spd(4, r);
  drift(0, 1) += 1e-14;
  const SpdMatrix s(drift);
  CHECK((s.matrix() - s.matrix().transpose()).norm() == 0.0);
}

TEST_CASE("spd_inverse") {
  SUBCASE("identity and diagonal") {
    CHECK((spd_inverse(Matrix(Matrix::Identity(3, 3))) - Matrix::Identity(3, 3))
              .norm() < 1e-14);
    Matrix d = Matrix::Zero(2, 2);
    d.diagonal() << 2, 4;
    const Matrix inv = spd_inverse(d);
    CHECK(inv(0, 0) == doctest::Approx(0.5));
    CHECK(inv(1, 1) == doctest::Approx(0.25));
  }
  SUBCASE("round trip p=8") {
    RngStream rng(13, 0);
    const Matrix m = random_spd(8, rng);
    CHECK((m * spd_inverse(m) - Matrix::Identity(8, 8)).norm() < 1e-8);
  }
}

TEST_CASE("wishart sampler") {
  SUBCASE("p=1 is chi-square") {
    RngStream rng(17, 0);
    const SpdMatrix one = SpdMatrix::identity(1);
    std::vector<double> x(100000);
    for (auto& v : x) v = sample_wishart_std(5.0, one, rng)(0, 0);
    CHECK(ks_pvalue(x, [](double t) { return gamma_cdf(t, 2.5, 0.5); }) > 0.01);
  }
  SUBCASE("mean and diagonal variance") {
    RngStream rng(19, 0);
    const Matrix s0 = random_spd(3, rng);
    const SpdMatrix scale(s0);
    const double df = 7.0;
    const int n = 100000;
    Matrix mean = Matrix::Zero(3, 3);
    Vector m2 = Vector::Zero(3);
    for (int i = 0; i < n; ++i) {
      const Matrix w = sample_wishart_std(df, scale, rng);
      mean += w / double(n);
      m2 += w.diagonal().cwiseAbs2() / double(n);
    }
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const double target = df * s0(i, j);
        const double var =
            df * (s0(i, j) * s0(i, j) + s0(i, i) * s0(j, j));  // Var(W_ij)
        CHECK(std::abs(mean(i, j) - target) < 3.0 * std::sqrt(var / n));
      }
    for (int i = 0; i < 3; ++i) {
      const double var = 2.0 * df * s0(i, i) * s0(i, i);
      const double sample_var = m2(i) - mean(i, i) * mean(i, i);
      // MC SE of a variance estimate ~ var * sqrt(2/ (n-1)) * kurtosis slack
      CHECK(std::abs(sample_var - var) < 6.0 * var * std::sqrt(2.0 / n));
    }
  }
  SUBCASE("diagonal marginals pass KS for p up to 4") {
    RngStream rng(23, 0);
    for (int p = 2; p <= 4; ++p) {
      const Matrix s0 = random_spd(p, rng);
      const SpdMatrix scale(s0);
      const double df = p + 2.5;
      std::vector<std::vector<double>> diag;
      diag.resize(std::size_t(p));
      for (int i = 0; i < 50000; ++i) {
        const Matrix w = sample_wishart_std(df, scale, rng);
        for (int k = 0; k < p; ++k) diag[std::size_t(k)].push_back(w(k, k));
      }
      for (int k = 0; k < p; ++k) {
        const double rate = 0.5 / s0(k, k);  // W_kk ~ Ga(df/2, 1/(2 s_kk))
        CHECK(ks_pvalue(diag[std::size_t(k)], [&](double t) {
                return gamma_cdf(t, df / 2.0, rate);
              }) > 0.01);
      }
    }
  }
  SUBCASE("df domain error") {
    RngStream rng(29, 0);
    CHECK_THROWS_AS((void)sample_wishart_std(1.5, SpdMatrix::identity(3), rng),
                    std::domain_error);
  }
}

TEST_CASE("mvn sampler") {
  RngStream rng(31, 0);
  SUBCASE("independence under identity covariance") {
    const Matrix x = sample_mvn_zero(SpdMatrix::identity(3), 100000, rng);
    const Matrix c = x.transpose() * x / double(x.rows());
    CHECK(std::abs(c(0, 1)) < 0.02);
    CHECK(std::abs(c(0, 2)) < 0.02);
    CHECK(std::abs(c(1, 2)) < 0.02);
  }
  SUBCASE("target correlation") {
    Matrix s(2, 2);
    s << 1, 0.5, 0.5, 1;
    const Matrix x = sample_mvn_zero(SpdMatrix(s), 100000, rng);
    const double r = (x.col(0).dot(x.col(1))) /
                     std::sqrt(x.col(0).squaredNorm() * x.col(1).squaredNorm());
    CHECK(r == doctest::Approx(0.5).epsilon(0.02));
  }
  SUBCASE("n = 0") {
    const Matrix x = sample_mvn_zero(SpdMatrix::identity(4), 0, rng);
    CHECK(x.rows() == 0);
    CHECK(x.cols() == 4);
  }
}

TEST_CASE("min_eigenvalue") {
  Matrix m = Matrix::Identity(3, 3);
  m(0, 0) = 0.25;
  CHECK(min_eigenvalue(m) == doctest::Approx(0.25));
}

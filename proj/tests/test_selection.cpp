#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "riw/data.hpp"
#include "riw/selection.hpp"

using namespace riw;
using testutil::random_spd;

TEST_CASE("extract_betas") {
  SUBCASE("hand 2x2") {
    Matrix m(2, 2);
    m << 2, -1, -1, 2;
    CHECK(extract_betas(SpdMatrix(m), 0)(0) == doctest::Approx(0.5));
  }
  SUBCASE("identity gives zeros") {
    const Vector b = extract_betas(SpdMatrix::identity(4), 2);
    CHECK(b.cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("matches the node regression coefficients") {
    RngStream rng(73, 0);
    const SpdMatrix omega(random_spd(5, rng));
    const Matrix x = sample_mvn_zero(spd_inverse(omega), 100000, rng);
    for (int k = 0; k < 5; ++k) {
      Matrix others(x.rows(), 4);
      int idx = 0;
      for (int j = 0; j < 5; ++j)
        if (j != k) others.col(idx++) = x.col(j);
      const Vector ols =
          (others.transpose() * others)
              .ldlt()
              .solve(others.transpose() * x.col(k));
      const Vector beta = extract_betas(omega, k);
      for (int j = 0; j < 4; ++j)
        CHECK(std::abs(ols(j) - beta(j)) <
              0.02 * std::max(1.0, std::abs(beta(j))));
    }
  }
}

namespace {

// minimal ChainSamples wrapper around explicit draws
ChainSamples samples_from_draws(const std::vector<Matrix>& omegas) {
  const int p = static_cast<int>(omegas.front().rows());
  ChainSamples s;
  s.p = p;
  s.kept = static_cast<long>(omegas.size());
  s.omega_mean = Matrix::Zero(p, p);
  s.node_moments.resize(p);
  for (auto& nm : s.node_moments) {
    nm.mean = Vector::Zero(p - 1);
    nm.cov_raw = Matrix::Zero(p - 1, p - 1);
  }
  long n = 0;
  for (const auto& om : omegas) {
    ++n;
    s.omega_mean += (om - s.omega_mean) / double(n);
    for (int k = 0; k < p; ++k) {
      const Vector beta = extract_betas(SpdMatrix(om), k);
      auto& nm = s.node_moments[std::size_t(k)];
      const Vector delta = beta - nm.mean;
      nm.mean += delta / double(n);
      nm.cov_raw += 0.5 * (delta * (beta - nm.mean).transpose() +
                           (beta - nm.mean) * delta.transpose());
    }
  }
  return s;
}

}  // namespace

TEST_CASE("node_posterior") {
  SUBCASE("constant draws: zero covariance, ridge recorded") {
    Matrix om(3, 3);
    om << 2, -0.5, 0, -0.5, 2, -0.5, 0, -0.5, 2;
    const ChainSamples s = samples_from_draws(std::vector<Matrix>(5, om));
    const NodePosterior np = node_posterior(s, 0);
    CHECK(np.beta_hat(0) == doctest::Approx(0.25));
    CHECK(np.beta_hat(1) == doctest::Approx(0.0));
    CHECK(np.ridge_applied == 0.0);  // eps * tr(0)/2
    CHECK(np.sigma_hat.cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("hand moments from two alternating draws") {
    Matrix a(2, 2), b(2, 2);
    a << 2, -1, -1, 2;  // beta_1 = 0.5
    b << 2, -0.5, -0.5, 2;  // beta_1 = 0.25
    const ChainSamples s = samples_from_draws({a, b, a, b});
    const NodePosterior np = node_posterior(s, 0);
    CHECK(np.beta_hat(0) == doctest::Approx(0.375));
    // sample variance of {.5,.25,.5,.25} = 0.015625 * 4/3
    CHECK(s.node_cov(0)(0, 0) == doctest::Approx(0.0625 * 0.25 / 3.0 * 4.0));
  }
  SUBCASE("too few draws is an error") {
    Matrix om = Matrix::Identity(4, 4);
    const ChainSamples s = samples_from_draws({om, om, om});
    CHECK_THROWS(node_posterior(s, 0));
  }
}

TEST_CASE("solve_credible_path") {
  RngStream rng(79, 0);
  const int p = 7;
  NodePosterior np;
  np.node = 2;
  np.beta_hat = Vector(p - 1);
  for (int j = 0; j < p - 1; ++j) np.beta_hat(j) = rng.normal();
  np.sigma_hat = random_spd(p - 1, rng, 0.2);

  const NodeSelection sel = solve_node_path(np);
  SUBCASE("no penalty keeps every nonzero beta_hat") {
    DeltaGrid g0{{0.0}};
    const auto sup = solve_credible_path(np, g0).front();
    CHECK(sup.size() == std::size_t(p - 1));
  }
  SUBCASE("beyond the terminal knot everything is dropped") {
    DeltaGrid g{{sel.terminal_delta(), 2.0 * sel.terminal_delta()}};
    for (const auto& sup : solve_credible_path(np, g)) CHECK(sup.empty());
  }
  SUBCASE("scaling invariance") {
    const double c = 3.7;
    NodePosterior scaled = np;
    scaled.beta_hat *= c;
    scaled.sigma_hat *= c * c;
    const NodeSelection sel2 = solve_node_path(scaled);
    for (double f : {0.03, 0.2, 0.5, 0.8}) {
      const double delta = f * sel.terminal_delta();
      CHECK(sel.path.support_at(0.5 * delta) ==
            sel2.path.support_at(0.5 * c * delta));
    }
  }
  SUBCASE("exact zero weight excludes the coordinate") {
    NodePosterior z = np;
    z.beta_hat(3) = 0.0;
    const auto sup = solve_credible_path(z, DeltaGrid{{0.0}}).front();
    CHECK(std::find(sup.begin(), sup.end(), 3) == sup.end());
  }
}

TEST_CASE("combine_edges") {
  SUBCASE("hand case") {
    const std::vector<std::vector<int>> nbr{{1}, {}, {}};
    const Adjacency a = combine_edges(nbr, CombineRule::AND);
    const Adjacency o = combine_edges(nbr, CombineRule::OR);
    CHECK(a.sum() == 0);
    CHECK(o(0, 1) == 1);
    CHECK(o(1, 0) == 1);
    CHECK(o.sum() == 2);
  }
  SUBCASE("symmetric neighborhoods make AND equal OR") {
    const std::vector<std::vector<int>> nbr{{1, 2}, {0}, {0}};
    CHECK(combine_edges(nbr, CombineRule::AND) ==
          combine_edges(nbr, CombineRule::OR));
  }
  SUBCASE("complete neighborhoods give the complete graph") {
    const std::vector<std::vector<int>> nbr{{1, 2}, {0, 2}, {0, 1}};
    const Adjacency a = combine_edges(nbr, CombineRule::AND);
    CHECK(a.sum() == 6);
    CHECK(a.diagonal().sum() == 0);
  }
}

TEST_CASE("estimate_precision") {
  RngStream rng(83, 0);
  const Matrix om = random_spd(3, rng);
  SUBCASE("complete mask is the identity operation") {
    Adjacency full = Adjacency::Ones(3, 3);
    full.diagonal().setZero();
    const GraphEstimate ge = estimate_precision(om, full);
    CHECK((ge.omega_est - om).cwiseAbs().maxCoeff() < 1e-15);
    CHECK(ge.edges.size() == 3);
  }
  SUBCASE("empty mask keeps the diagonal") {
    const GraphEstimate ge = estimate_precision(om, Adjacency::Zero(3, 3));
    CHECK((ge.omega_est - Matrix(om.diagonal().asDiagonal()))
              .cwiseAbs()
              .maxCoeff() < 1e-15);
  }
  SUBCASE("hand case with one masked edge") {
    Adjacency adj = Adjacency::Zero(3, 3);
    adj(0, 1) = adj(1, 0) = 1;
    const GraphEstimate ge = estimate_precision(om, adj);
    CHECK(ge.omega_est(0, 1) == om(0, 1));
    CHECK(ge.omega_est(0, 2) == 0.0);
    CHECK(ge.omega_est(1, 2) == 0.0);
    CHECK(ge.edges == std::vector<std::pair<int, int>>{{0, 1}});
  }
}

TEST_CASE("build_path on a small chain") {
  RngStream data_rng(89, 0);
  Matrix om0 = Matrix::Identity(6, 6);
  for (int i = 0; i + 1 < 6; ++i) om0(i, i + 1) = om0(i + 1, i) = 0.45;
  const DataMatrix data =
      standardize(sample_mvn_zero(spd_inverse(SpdMatrix(om0)), 400, data_rng));
  Hyperparameters h = default_hyperparameters(data.n(), data.p());
  h.conditional_d = ConditionalD::EXACT_GIG;
  RngStream rng(97, 1);
  const ChainSamples s = run_chain(data, h, 600, 100, 1, rng);

  const PathEnsemble ens = build_ensemble(s);
  const DeltaGrid grid = calibrate_grid(ens, 25);
  REQUIRE(grid.size() == 25);
  CHECK(grid.values.front() == 0.0);
  CHECK(grid.values.back() == doctest::Approx(ens.max_terminal_delta * 1.05));

  const SelectionPath pand = build_path(ens, grid, CombineRule::AND);
  const SelectionPath por = build_path(ens, grid, CombineRule::OR);
  for (int m = 0; m < grid.size(); ++m) {
    const Adjacency &a = pand.adjacency_at[std::size_t(m)],
                    &o = por.adjacency_at[std::size_t(m)];
    CHECK(a == a.transpose().eval());
    CHECK(a.diagonal().sum() == 0);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) CHECK(a(i, j) <= o(i, j));  // AND within OR
  }
  // endpoints: complete-ish at 0, empty at the top
  CHECK(pand.adjacency_at.front().sum() > 0);
  CHECK(pand.adjacency_at.back().sum() == 0);
  CHECK(por.adjacency_at.front().sum() == 30);  // OR at Delta=0 is complete
}

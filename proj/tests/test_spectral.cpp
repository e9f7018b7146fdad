#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "cliquespec/families.hpp"
#include "cliquespec/spectral.hpp"
#include "oracles.hpp"

using namespace cliquespec;
using doctest::Approx;

namespace {

Graph random_connected_graph(int n, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.35);
  while (true) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) g.add_edge(u, v);
    if (is_connected(g)) return g;
  }
}

double det3(const SymMatrix& m, double lambda) {
  auto a = [&](int i, int j) { return m(i, j) - (i == j ? lambda : 0.0); };
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) - a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

}  // namespace

TEST_CASE("adjacency and distance matrices") {
  auto k2 = adjacency_matrix(complete_graph(2));
  CHECK(k2(0, 1) == 1.0);
  CHECK(k2(0, 0) == 0.0);
  CHECK(adjacency_matrix(Graph(1))(0, 0) == 0.0);

  auto p3 = adjacency_matrix(path_graph(3));
  CHECK(p3(0, 1) == 1.0);
  CHECK(p3(1, 2) == 1.0);
  CHECK(p3(0, 2) == 0.0);

  auto dk3 = distance_matrix(complete_graph(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(dk3(i, j) == (i == j ? 0.0 : 1.0));

  auto dp3 = distance_matrix(path_graph(3));
  CHECK(dp3(0, 2) == 2.0);
  CHECK(dp3(0, 1) == 1.0);
  CHECK(distance_matrix(path_graph(2)) == adjacency_matrix(path_graph(2)));

  CHECK_THROWS_AS(distance_matrix(Graph::from_edge_list(4, {{0, 1}, {2, 3}})), GraphError);
}

TEST_CASE("SymMatrix symmetry and TSV") {
  std::vector<double> bad{0, 1, 2, 0};
  CHECK_THROWS_AS(SymMatrix::from_dense(2, bad), std::invalid_argument);
  std::vector<double> good{0, 0.1, 0.1, 2};
  auto m = SymMatrix::from_dense(2, good);
  CHECK(m.to_tsv() == "0\t0.10000000000000001\n0.10000000000000001\t2\n");
}

TEST_CASE("dominant eigenpair closed forms") {
  auto k5 = dominant_eigenpair(adjacency_matrix(complete_graph(5)));
  CHECK(k5.value == Approx(4.0).epsilon(1e-12));
  for (double x : k5.vector) CHECK(x == Approx(1.0 / std::sqrt(5.0)).epsilon(1e-10));

  auto ap3 = adjacency_matrix(path_graph(3));
  auto p3 = dominant_eigenpair(ap3);
  CHECK(std::abs(p3.value - std::sqrt(2.0)) < 1e-10);
  CHECK(std::abs(det3(ap3, p3.value)) < 1e-9);

  auto dp3 = distance_matrix(path_graph(3));
  auto d = dominant_eigenpair(dp3);
  CHECK(std::abs(d.value - (1.0 + std::sqrt(3.0))) < 1e-10);
  // lambda^3 - 6 lambda - 4 = -det(D - lambda I)
  CHECK(std::abs(d.value * d.value * d.value - 6 * d.value - 4) < 1e-9);
  CHECK(std::abs(det3(dp3, d.value)) < 1e-9);

  auto star = dominant_eigenpair(adjacency_matrix(star_graph(5)));
  CHECK(std::abs(star.value - 2.0) < 1e-10);
  CHECK(star.vector[0] / star.vector[1] == Approx(2.0).epsilon(1e-9));
}

TEST_CASE("eigenpair contract on random graphs") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = random_connected_graph(2 + trial % 11, rng);
    for (auto kind : {MatrixKind::adjacency, MatrixKind::distance}) {
      auto m = build_matrix(g, kind);
      auto pair = dominant_eigenpair(m);
      double norm = 0;
      for (double x : pair.vector) norm += x * x;
      CHECK(std::abs(std::sqrt(norm) - 1.0) < 1e-12);
      CHECK(pair.residual <= kDefaultTolerance);
      for (double x : pair.vector) CHECK(x > 1e-12);
      CHECK(std::abs(pair.value - oracle::largest_eigenvalue(m)) < 1e-9);
    }
  }
}

TEST_CASE("power iteration and Jacobi agree on 500 random graphs") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 500; ++trial) {
    Graph g = random_connected_graph(1 + trial % 12, rng);
    auto m = adjacency_matrix(g);
    double power = dominant_eigenpair(m).value;
    double jacobi = jacobi_eigensolve(m).values.front();
    CHECK(std::abs(power - jacobi) <= 10 * kDefaultTolerance);
  }
}

TEST_CASE("Jacobi full spectrum matches Eigen") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = random_connected_graph(3 + trial % 9, rng);
    auto m = distance_matrix(g);
    auto jac = jacobi_eigensolve(m);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(oracle::to_eigen(m), Eigen::EigenvaluesOnly);
    const int n = m.order();
    for (int k = 0; k < n; ++k) CHECK(std::abs(jac.values[k] - es.eigenvalues()[n - 1 - k]) < 1e-9);
    CHECK(jac.sweeps <= 30);
  }
}

TEST_CASE("fallback path handles slow power convergence") {
  // Top two eigenvalues 1 and 1 - 1e-7: power iteration cannot separate
  // them within its step budget, so Jacobi takes over.
  std::vector<double> a{1.0, 0.0, 0.0, 0.0, 1.0 - 1e-7, 0.0, 0.0, 0.0, 0.5};
  auto m = SymMatrix::from_dense(3, a);
  CHECK_FALSE(power_iteration(m, kDefaultTolerance, 100 * 3).has_value());
  auto pair = dominant_eigenpair(m);
  CHECK(std::abs(pair.value - 1.0) < 1e-12);
  CHECK(pair.residual <= kDefaultTolerance);

  auto p50 = adjacency_matrix(path_graph(50));
  CHECK_FALSE(power_iteration(p50, kDefaultTolerance, 10).has_value());
  auto path = dominant_eigenpair(p50);
  CHECK(std::abs(path.value - 2 * std::cos(std::numbers::pi / 51)) < 1e-9);
  CHECK(path.residual <= kDefaultTolerance);
  for (double x : path.vector) CHECK(x > 0);
}

TEST_CASE("general symmetric input gives the largest algebraic eigenvalue") {
  std::vector<double> a{-3, 0, 0, 1};
  auto pair = dominant_eigenpair(SymMatrix::from_dense(2, a));
  CHECK(pair.value == Approx(1.0).epsilon(1e-10));
}

TEST_CASE("Rayleigh quotient") {
  std::vector<double> ones{1, 1};
  CHECK(rayleigh_quotient(adjacency_matrix(complete_graph(2)), ones) == Approx(1.0));
  auto ap3 = adjacency_matrix(path_graph(3));
  auto pair = dominant_eigenpair(ap3);
  CHECK(std::abs(rayleigh_quotient(ap3, pair.vector) - std::sqrt(2.0)) < 1e-10);

  auto dp4 = distance_matrix(path_graph(4));
  std::vector<double> e0{1, 0, 0, 0};
  CHECK(rayleigh_quotient(dp4, e0) == dp4(0, 0));
  std::vector<double> zero(4, 0.0);
  CHECK_THROWS_AS(rayleigh_quotient(dp4, zero), std::invalid_argument);
}

TEST_CASE("Rayleigh bound over random unit vectors") {
  std::mt19937_64 rng(31);
  std::normal_distribution<double> gauss;
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_connected_graph(4 + trial % 8, rng);
    for (auto kind : {MatrixKind::adjacency, MatrixKind::distance}) {
      auto m = build_matrix(g, kind);
      double lambda = dominant_eigenpair(m).value;
      for (int k = 0; k < 1000; ++k) {
        std::vector<double> y(g.order());
        for (double& v : y) v = gauss(rng);
        CHECK(rayleigh_quotient(m, y) <= lambda + 10 * kDefaultTolerance);
      }
    }
  }
}

TEST_CASE("quadratic form of A(G) is twice the edge sum") {
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> unit(-1, 1);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = random_connected_graph(2 + trial % 10, rng);
    std::vector<double> x(g.order());
    for (double& v : x) v = unit(rng);
    auto ax = adjacency_matrix(g).multiply(x);
    double form = 0;
    for (int i = 0; i < g.order(); ++i) form += x[i] * ax[i];
    double edges = 0;
    for (const auto& [u, v] : g.edges()) edges += x[u] * x[v];
    CHECK(std::abs(form - 2 * edges) < 1e-10);
  }
}

TEST_CASE("complement distance matrix") {
  // P5 has diameter 4: adjacent pairs at distance 2 in the complement,
  // non-adjacent pairs at distance 1.
  Graph p5 = path_graph(5);
  auto dc = complement_distance_matrix(p5);
  CHECK(dc == shifted_adjacency(p5));
  CHECK(dc(0, 1) == 2.0);
  CHECK(dc(0, 2) == 1.0);

  // P4 has diameter 3; its complement is the path 2-0-3-1.
  Graph p4 = path_graph(4);
  auto dc4 = complement_distance_matrix(p4);
  CHECK(dc4(1, 2) == 3.0);
  CHECK(shifted_adjacency(p4)(1, 2) == 2.0);
  for (int u = 0; u < 4; ++u)
    for (int v = 0; v < 4; ++v) CHECK(dc4(u, v) >= shifted_adjacency(p4)(u, v));

  // K_{1,3} with one edge subdivided: diameter 3.
  Graph spider = Graph::from_edge_list(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}});
  REQUIRE(diameter(spider) == 3);
  auto ds = complement_distance_matrix(spider);
  auto base = shifted_adjacency(spider);
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) CHECK(ds(u, v) >= base(u, v));

  CHECK_THROWS_AS(complement_distance_matrix(path_graph(3)), GraphError);
  CHECK_THROWS_AS(complement_distance_matrix(complete_graph(4)), GraphError);
}

TEST_CASE("spectral_radius by kind") {
  for (int n = 2; n <= 8; ++n) {
    CHECK(std::abs(spectral_radius(complete_graph(n), MatrixKind::adjacency).value - (n - 1)) < 1e-9);
    CHECK(std::abs(spectral_radius(path_graph(n), MatrixKind::adjacency).value -
                   2 * std::cos(std::numbers::pi / (n + 1))) < 1e-9);
  }
  CHECK(std::abs(spectral_radius(complete_graph(5), MatrixKind::distance).value - 4.0) < 1e-9);
  CHECK_THROWS_AS(spectral_radius(path_graph(3), MatrixKind::complement_distance), GraphError);
  CHECK(parse_matrix_kind("cdistance") == MatrixKind::complement_distance);
  CHECK_THROWS_AS(parse_matrix_kind("laplacian"), std::invalid_argument);
}

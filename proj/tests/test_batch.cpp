#include <doctest.h>

#include <cstring>
#include <stdexcept>

#include "cliquespec/batch.hpp"
#include "cliquespec/families.hpp"

using namespace cliquespec;

namespace {

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

}  // namespace

TEST_CASE("parallel spectral radii match the serial reference bit for bit") {
  auto graphs = enumerate_clique_trees(7);
  REQUIRE(graphs.size() > 20);
  for (auto kind : {MatrixKind::adjacency, MatrixKind::distance}) {
    auto serial = spectral_radii_serial(graphs, kind);
    for (int jobs : {2, 4}) {
      auto parallel = spectral_radii_parallel(graphs, kind, kDefaultTolerance, jobs);
      REQUIRE(parallel.size() == serial.size());
      for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(same_bits(serial[i].value, parallel[i].value));
        CHECK(serial[i].vector == parallel[i].vector);
      }
    }
  }
}

TEST_CASE("parallel distance matrices match the serial reference") {
  auto graphs = enumerate_connected_graphs(6);
  auto serial = distance_matrices_serial(graphs);
  auto parallel = distance_matrices_parallel(graphs, 3);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) CHECK(serial[i] == parallel[i]);
}

TEST_CASE("map_indices keeps index order and rethrows the lowest failing index") {
  auto squares = map_indices<long>(100, 4, [](std::size_t i) { return static_cast<long>(i * i); });
  for (std::size_t i = 0; i < squares.size(); ++i) CHECK(squares[i] == static_cast<long>(i * i));

  auto fail = [](std::size_t i) -> int {
    if (i == 7 || i == 40) throw std::runtime_error("index " + std::to_string(i));
    return 0;
  };
  for (int jobs : {1, 4}) {
    try {
      map_indices<int>(64, jobs, fail);
      FAIL("expected an exception");
    } catch (const std::runtime_error& e) {
      CHECK(std::string(e.what()) == "index 7");
    }
  }
  CHECK(map_indices<int>(0, 4, fail).empty());
  CHECK(default_jobs() >= 1);
}

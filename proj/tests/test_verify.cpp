#include <doctest.h>

#include <nlohmann/json.hpp>

#include "cliquespec/families.hpp"
#include "cliquespec/transforms.hpp"
#include "cliquespec/verify.hpp"
#include "oracles.hpp"

using namespace cliquespec;

namespace {

nlohmann::json strip_elapsed(const TheoremReport& r) {
  auto j = nlohmann::json::parse(to_json_string(r));
  j.erase("elapsed_ms");
  return j;
}

}  // namespace

TEST_CASE("complement distance identity") {
  auto p5 = complement_distance_gap(path_graph(5));
  CHECK(p5.diameter == 4);
  CHECK(p5.min_gap == 0);
  CHECK(p5.max_gap == 0);

  auto p4 = complement_distance_gap(path_graph(4));
  CHECK(p4.diameter == 3);
  CHECK(p4.min_gap == 0);
  CHECK(p4.max_gap == 1);
  CHECK(p4.strict_entries == 1);

  CHECK_THROWS(complement_distance_gap(complete_graph(3)));

  auto r = check_lemma_complement_distance(6);
  CHECK(r.violations.empty());
  CHECK(r.checked > 0);
  CHECK(r.witness.has_value());
}

TEST_CASE("clique moves on P6") {
  for (auto kind : {SpectrumKind::adjacency, SpectrumKind::distance}) {
    auto rows = clique_moves(path_graph(6), kind);
    REQUIRE_FALSE(rows.empty());
    int identity = 0;
    for (const auto& row : rows) {
      CHECK(row.status != Status::violation);
      if (row.margin == 0.0) ++identity;
    }
    CHECK(identity == 2);  // one per end clique
  }

  // Every qualifying move of the end edge {4,5}, recomputed with Eigen.
  const Graph p6 = path_graph(6);
  for (auto kind : {SpectrumKind::adjacency, SpectrumKind::distance}) {
    const auto base = complement_spectrum(p6, kind);
    const double before = oracle::largest_eigenvalue(kind == SpectrumKind::adjacency
                                                         ? adjacency_matrix(complement(p6))
                                                         : complement_distance_matrix(p6));
    CHECK(std::abs(before - base.value) < 1e-9);
    int moves = 0;
    for (Vertex to : {1, 2, 3}) {
      const bool ok = kind == SpectrumKind::adjacency ? base.vector[4] >= base.vector[to]
                                                      : base.vector[to] >= base.vector[4];
      if (!ok) continue;
      Graph moved = move_clique(p6, {4, 5}, 4, to);
      if (kind == SpectrumKind::distance && diameter(moved).value() < 3) continue;
      const double after = oracle::largest_eigenvalue(kind == SpectrumKind::adjacency
                                                          ? adjacency_matrix(complement(moved))
                                                          : complement_distance_matrix(moved));
      CHECK(after >= before - kMargin);
      ++moves;
    }
    CHECK(moves > 0);
  }
}

TEST_CASE("clique move checks over random trees") {
  auto adj = check_clique_move_adjacency(60, 5, 9);
  CHECK(adj.violations.empty());
  CHECK(adj.checked > 0);
  auto dist = check_clique_move_distance(60, 5, 9);
  CHECK(dist.violations.empty());
}

TEST_CASE("diameter monotonicity for clique trees") {
  auto r = check_diameter_monotonicity(Family::clique_tree, SpectrumKind::adjacency, 7, 3);
  CHECK(r.violations.empty());
  CHECK_FALSE(r.vacuous);
  CHECK(r.details["classes"][0]["max_d"] >= r.details["classes"][0]["max_d_plus_1"]);

  auto empty = check_diameter_monotonicity(Family::clique_tree, SpectrumKind::adjacency, 5, 4);
  CHECK(empty.vacuous);
  CHECK(empty.violations.empty());
}

TEST_CASE("comparators tie with themselves") {
  for (const auto& sizes : std::vector<std::vector<int>>{{2, 2, 2, 2}, {3, 2, 2}, {3, 3, 3}}) {
    auto row = evaluate_extremal(clique_path(sizes), SpectrumKind::adjacency, Bound::path_lower);
    CHECK(row.status != Status::violation);
    CHECK(std::abs(row.margin) <= kMargin);
  }
  auto star = evaluate_extremal(clique_star({3}, 3, 3), SpectrumKind::distance, Bound::star_upper_distance);
  CHECK(star.status == Status::tie);
  auto other = evaluate_extremal(clique_star({3}, 2, 2), SpectrumKind::distance, Bound::star_upper_distance);
  CHECK(other.margin >= -kMargin);
  CHECK_THROWS(evaluate_extremal(path_graph(5), SpectrumKind::distance, Bound::path_lower));
}

TEST_CASE("extremal checks on small orders") {
  for (auto [kind, bound] : std::vector<std::pair<SpectrumKind, Bound>>{
           {SpectrumKind::adjacency, Bound::star_upper},
           {SpectrumKind::adjacency, Bound::path_lower},
           {SpectrumKind::distance, Bound::path_lower_distance},
           {SpectrumKind::distance, Bound::star_upper_distance}}) {
    auto r = check_extremal(Family::clique_tree, kind, bound, 1, 6, std::nullopt);
    CHECK(r.violations.empty());
    CHECK(r.checked > 0);
  }
}

TEST_CASE("tree chain at n = 7 checks every tree of diameter above 3") {
  auto r = check_tree_chain(SpectrumKind::adjacency, 7);
  long expected = 0;
  for (const auto& t : enumerate_trees(7))
    if (diameter(t).value() > 3) ++expected;
  CHECK(r.checked == expected);
  CHECK(r.violations.empty());
}

TEST_CASE("block completion") {
  // Two C4's sharing a vertex complete to two K4's sharing it; that vertex
  // is isolated in the complement, so D(C_B^c) does not exist.
  Graph two_c4 = Graph::from_edge_list(7, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}, {5, 6}, {6, 0}});
  CHECK_THROWS_AS(complement_spectrum(complete_blocks(two_c4), SpectrumKind::distance), GraphError);

  // Joined through a middle vertex instead, cut vertices 3 and 4 share no block.
  Graph bridged = Graph::from_edge_list(9, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 8}, {8, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 4}});
  REQUIRE(has_separated_cut_vertices(bridged));
  const double b = complement_spectrum(bridged, SpectrumKind::distance).value;
  const double c = complement_spectrum(complete_blocks(bridged), SpectrumKind::distance).value;
  CHECK(b <= c + kMargin);
  CHECK(oracle::largest_eigenvalue(complement_distance_matrix(bridged)) == doctest::Approx(b).epsilon(1e-9));

  auto adj = check_block_completion(SpectrumKind::adjacency, 5);
  CHECK(adj.violations.empty());
  auto dist = check_block_completion(SpectrumKind::distance, 5);
  CHECK(dist.violations.empty());
  CHECK(dist.ties > 0);  // clique trees equal their completion
}

TEST_CASE("report JSON layout") {
  auto r = check_lemma_complement_distance(5);
  auto j = nlohmann::ordered_json::parse(to_json_string(r));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys.front() == "theorem");
  CHECK(keys.back() == "elapsed_ms");
  for (const char* k : {"params", "checked", "excluded", "violations", "ties", "witness", "tolerance", "vacuous"})
    CHECK(j.contains(k));
  CHECK(j["theorem"] == "L4.1");
  CHECK(j["tolerance"] == kMargin);

  auto csv = to_csv(r);
  CHECK(csv.rfind("theorem,index,graph,lhs,rhs,margin,status,note\n", 0) == 0);
}

TEST_CASE("reports do not depend on the worker count") {
  VerifyOptions serial;
  serial.jobs = 1;
  VerifyOptions parallel;
  parallel.jobs = 4;
  TheoremParams p;
  p.n = 6;
  p.trials = 40;
  for (const char* id : {"L4.1", "T2.4", "L2.1", "L5.1"})
    CHECK(strip_elapsed(run_theorem(id, p, serial)) == strip_elapsed(run_theorem(id, p, parallel)));
}

TEST_CASE("theorem registry") {
  CHECK(theorem_ids().size() == 16);
  CHECK(is_theorem_id("L4.1"));
  CHECK(is_theorem_id("L4.4"));
  CHECK_FALSE(is_theorem_id("X9.9"));
  CHECK_THROWS_AS(run_theorem("X9.9", {}), std::invalid_argument);
  TheoremParams p;
  p.n = 5;
  CHECK(run_theorem("L4.4", p).theorem == "T4.4");
}

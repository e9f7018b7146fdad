#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cliquespec/report.hpp"
#include "cliquespec/spectral.hpp"

namespace cliquespec {

/// Comparison margin for every spectral inequality; two orders of magnitude
/// above the eigensolver residual.
inline constexpr double kMargin = 1e-8;

struct VerifyOptions {
  double margin = kMargin;
  double solver_tol = kDefaultTolerance;
  int jobs = 0;  // <= 0: default_jobs()
};

enum class Family { clique_tree, block_graph, tree };
enum class SpectrumKind { adjacency, distance };
enum class Bound { star_upper, path_lower, star_upper_distance, path_lower_distance, block_min, block_max };

// Spectral radius of A(g^c) or D(g^c).
EigenPair complement_spectrum(const Graph& g, SpectrumKind kind, double tol = kDefaultTolerance);

/// D(g^c) checked against J - I + A(g): equality when diameter(g) > 3,
/// entrywise >= when diameter(g) == 3. Over all connected graphs of order
/// 1..n_max; graphs of diameter < 3 are excluded.
TheoremReport check_lemma_complement_distance(int n_max, const VerifyOptions& opts = {});

/// Single-graph form. `min_gap`/`max_gap` are the extreme entries of
/// D(g^c) - (J - I + A(g)) off the diagonal.
struct ComplementDistanceGap {
  int diameter;
  int min_gap;
  int max_gap;
  int strict_entries;  // unordered pairs with a positive gap
};
ComplementDistanceGap complement_distance_gap(const Graph& g);

/// Every admissible end-clique move on `g` whose Perron-entry condition
/// holds: x(from) >= x(to) for adjacency, x(to) >= x(from) for distance.
/// Rows compare lambda(base) <= lambda(moved).
std::vector<InstanceRow> clique_moves(const Graph& g, SpectrumKind kind, const VerifyOptions& opts = {},
                                      long* moves_excluded = nullptr);

/// Samples `trials` random clique trees of order 5..n_max that have two
/// nonadjacent cut vertices and checks every qualifying move.
TheoremReport check_clique_move_adjacency(int trials, std::uint64_t seed, int n_max = 10,
                                          const VerifyOptions& opts = {});
TheoremReport check_clique_move_distance(int trials, std::uint64_t seed, int n_max = 10,
                                         const VerifyOptions& opts = {});

/// Compares the maxima of lambda(M(g^c)) over the diameter-d and
/// diameter-(d+1) classes of order n. Clique trees: max(d) >= max(d+1).
/// Block graphs: max(d+1) >= max(d). With no `d`, every d in [3, n-2].
TheoremReport check_diameter_monotonicity(Family family, SpectrumKind kind, int n, std::optional<int> d,
                                          const VerifyOptions& opts = {});

/// Extremal comparison against clique paths / clique stars built from the
/// instance's own block-size multiset, minimised (lower bounds) or
/// maximised (upper bounds) over all distinct orderings.
TheoremReport check_extremal(Family family, SpectrumKind kind, Bound bound, int n_min, int n_max,
                             std::optional<int> s, const VerifyOptions& opts = {});

/// Lower bound by P_n and upper bound by T(n-3,1) over all trees of order n
/// with diameter > 3.
TheoremReport check_tree_chain(SpectrumKind kind, int n, const VerifyOptions& opts = {});

/// Single-instance form of the extremal comparison.
InstanceRow evaluate_extremal(const Graph& g, SpectrumKind kind, Bound bound, const VerifyOptions& opts = {});

/// lambda(A(B^c)) >= lambda(A(C_B^c)) (adjacency) or
/// lambda(D(B^c)) <= lambda(D(C_B^c)) (distance), C_B = complete_blocks(B),
/// over connected graphs of order 1..n_max with two cut vertices in no
/// common block.
TheoremReport check_block_completion(SpectrumKind kind, int n_max, const VerifyOptions& opts = {});

// Theorem registry used by the CLI.

struct TheoremParams {
  std::optional<int> n;
  std::optional<int> s;
  std::optional<int> d;
  int trials = 1000;
  std::uint64_t seed = 1;
};

/// Stable theorem identifiers, in registry order.
const std::vector<std::string>& theorem_ids();
bool is_theorem_id(std::string_view id);

/// Throws std::invalid_argument for an unknown id.
TheoremReport run_theorem(std::string_view id, const TheoremParams& params, const VerifyOptions& opts = {});

}  // namespace cliquespec

#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cliquespec/graph.hpp"

namespace cliquespec {

inline constexpr double kDefaultTolerance = 1e-10;

class EigenSolveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense real symmetric matrix. Writes go to both (i,j) and (j,i), so the
/// symmetry invariant holds exactly.
class SymMatrix {
 public:
  explicit SymMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}

  /// Validates exact symmetry of a row-major n*n buffer.
  static SymMatrix from_dense(int n, std::span<const double> row_major);

  int order() const { return n_; }
  double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  void set(int i, int j, double v) {
    a_[static_cast<std::size_t>(i) * n_ + j] = v;
    a_[static_cast<std::size_t>(j) * n_ + i] = v;
  }
  std::span<const double> row(int i) const { return {a_.data() + static_cast<std::size_t>(i) * n_, static_cast<std::size_t>(n_)}; }

  std::vector<double> multiply(std::span<const double> x) const;
  double max_abs_row_sum() const;

  bool operator==(const SymMatrix&) const = default;

  /// One row per line, tab separated, 17 significant digits.
  std::string to_tsv() const;

 private:
  int n_;
  std::vector<double> a_;
};

struct EigenPair {
  double value = 0.0;
  std::vector<double> vector;  // unit 2-norm
  double residual = 0.0;       // ||M x - value x||_2
};

SymMatrix adjacency_matrix(const Graph& g);

/// Throws GraphError when g is disconnected.
SymMatrix distance_matrix(const Graph& g);

/// J - I + A(g).
SymMatrix shifted_adjacency(const Graph& g);

/// Exact D(complement(g)), computed by BFS on the complement. Requires
/// diameter(g) >= 3 (a disconnected g counts as infinite diameter).
SymMatrix complement_distance_matrix(const Graph& g);

/// Largest eigenvalue with a unit eigenvector.
///
/// Runs power iteration on M + cI, c = max absolute row sum, from the
/// normalised all-ones vector. Stops once successive Rayleigh quotients and
/// the residual are both below `tol`. After 100*n steps without convergence
/// it falls back to cyclic Jacobi (at most 30 sweeps). For a nonnegative
/// matrix the vector is returned with nonnegative entries.
EigenPair dominant_eigenpair(const SymMatrix& m, double tol = kDefaultTolerance);

/// Power-iteration stage only; nullopt when the step cap is exhausted.
std::optional<EigenPair> power_iteration(const SymMatrix& m, double tol, int max_steps);

/// Full symmetric eigensolve by cyclic Jacobi rotations.
struct JacobiResult {
  std::vector<double> values;                // descending
  std::vector<std::vector<double>> vectors;  // vectors[k] pairs with values[k]
  int sweeps = 0;
};
JacobiResult jacobi_eigensolve(const SymMatrix& m, double tol = 1e-14, int max_sweeps = 30);

/// x^T M x / x^T x. Throws std::invalid_argument for the zero vector.
double rayleigh_quotient(const SymMatrix& m, std::span<const double> x);

enum class MatrixKind { adjacency, distance, complement_adjacency, complement_distance };

MatrixKind parse_matrix_kind(std::string_view name);
std::string_view to_string(MatrixKind kind);

SymMatrix build_matrix(const Graph& g, MatrixKind kind);
EigenPair spectral_radius(const Graph& g, MatrixKind kind, double tol = kDefaultTolerance);

}  // namespace cliquespec

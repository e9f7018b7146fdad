#pragma once

#include <exception>
#include <span>
#include <vector>

#include <omp.h>

#include "cliquespec/spectral.hpp"

namespace cliquespec {

/// Worker count used when a caller passes jobs <= 0.
int default_jobs();

/// Evaluates fn(i) for i in [0, count) and returns the results in index
/// order. jobs == 1 runs the plain serial loop; otherwise an OpenMP team of
/// `jobs` threads shares the indices dynamically. The first exception thrown
/// by any index (lowest index wins) is rethrown after the loop.
template <class Result, class Fn>
std::vector<Result> map_indices(std::size_t count, int jobs, Fn&& fn) {
  std::vector<Result> out(count);
  if (jobs <= 0) jobs = default_jobs();
  if (jobs == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::exception_ptr> errors(count);
  const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
  for (long long i = 0; i < n; ++i) {
    try {
      out[i] = fn(static_cast<std::size_t>(i));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

// Batched spectral radii. The serial version is the reference the parallel
// kernel is tested against; both must agree bit for bit.
std::vector<EigenPair> spectral_radii_serial(std::span<const Graph> graphs, MatrixKind kind,
                                             double tol = kDefaultTolerance);
std::vector<EigenPair> spectral_radii_parallel(std::span<const Graph> graphs, MatrixKind kind,
                                               double tol = kDefaultTolerance, int jobs = 0);

// All-pairs distance matrices for a batch of graphs.
std::vector<SymMatrix> distance_matrices_serial(std::span<const Graph> graphs);
std::vector<SymMatrix> distance_matrices_parallel(std::span<const Graph> graphs, int jobs = 0);

}  // namespace cliquespec

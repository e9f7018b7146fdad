#include "cliquespec/batch.hpp"

#include <algorithm>
#include <thread>

namespace cliquespec {

int default_jobs() {
  return std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
}

std::vector<EigenPair> spectral_radii_serial(std::span<const Graph> graphs, MatrixKind kind, double tol) {
  std::vector<EigenPair> out;
  out.reserve(graphs.size());
  for (const auto& g : graphs) out.push_back(spectral_radius(g, kind, tol));
  return out;
}

std::vector<EigenPair> spectral_radii_parallel(std::span<const Graph> graphs, MatrixKind kind, double tol,
                                               int jobs) {
  return map_indices<EigenPair>(graphs.size(), jobs,
                                [&](std::size_t i) { return spectral_radius(graphs[i], kind, tol); });
}

std::vector<SymMatrix> distance_matrices_serial(std::span<const Graph> graphs) {
  std::vector<SymMatrix> out;
  out.reserve(graphs.size());
  for (const auto& g : graphs) out.push_back(distance_matrix(g));
  return out;
}

std::vector<SymMatrix> distance_matrices_parallel(std::span<const Graph> graphs, int jobs) {
  // SymMatrix has no default constructor; wrap the slot.
  struct Slot {
    SymMatrix m{1};
  };
  auto slots = map_indices<Slot>(graphs.size(), jobs, [&](std::size_t i) { return Slot{distance_matrix(graphs[i])}; });
  std::vector<SymMatrix> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(s.m));
  return out;
}

}  // namespace cliquespec

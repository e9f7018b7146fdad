// Serial reference vs OpenMP batch kernels on enumerated clique trees.

#include <chrono>
#include <cstdio>

#include <CLI11.hpp>

#include "cliquespec/batch.hpp"
#include "cliquespec/families.hpp"

using namespace cliquespec;

template <class Fn>
double time_ms(int repeats, Fn&& fn) {
  auto start = std::chrono::steady_clock::now();
  for (int r = 0; r < repeats; ++r) fn();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count() / repeats;
}

int main(int argc, char** argv) {
  CLI::App app{"Serial vs OpenMP batch kernels"};
  int n = 9, repeats = 3, jobs = 0;
  app.add_option("--n", n, "Clique tree order")->check(CLI::Range(1, 12));
  app.add_option("--repeats", repeats, "Timing repeats")->check(CLI::PositiveNumber);
  app.add_option("--jobs", jobs, "Threads for the parallel kernels (default: available parallelism)");
  CLI11_PARSE(app, argc, argv);
  if (jobs <= 0) jobs = default_jobs();

  const auto graphs = enumerate_clique_trees(n);
  std::printf("clique trees on %d vertices: %zu, threads: %d\n", n, graphs.size(), jobs);

  for (auto kind : {MatrixKind::adjacency, MatrixKind::distance, MatrixKind::complement_adjacency}) {
    std::vector<EigenPair> serial, parallel;
    double ts = time_ms(repeats, [&] { serial = spectral_radii_serial(graphs, kind); });
    double tp = time_ms(repeats, [&] { parallel = spectral_radii_parallel(graphs, kind, kDefaultTolerance, jobs); });
    bool same = serial.size() == parallel.size();
    for (std::size_t i = 0; same && i < serial.size(); ++i) same = serial[i].value == parallel[i].value;
    std::printf("%-11s serial %9.2f ms  parallel %9.2f ms  speedup %5.2fx  identical=%s\n",
                std::string(to_string(kind)).c_str(), ts, tp, ts / tp, same ? "yes" : "no");
  }

  std::vector<SymMatrix> ds, dp;
  double ts = time_ms(repeats, [&] { ds = distance_matrices_serial(graphs); });
  double tp = time_ms(repeats, [&] { dp = distance_matrices_parallel(graphs, jobs); });
  std::printf("%-11s serial %9.2f ms  parallel %9.2f ms  speedup %5.2fx  identical=%s\n", "bfs", ts, tp, ts / tp,
              ds == dp ? "yes" : "no");
  return 0;
}

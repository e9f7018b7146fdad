#include "cliquespec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>

namespace cliquespec {

SymMatrix SymMatrix::from_dense(int n, std::span<const double> row_major) {
  if (n < 1 || row_major.size() != static_cast<std::size_t>(n) * n) {
    throw std::invalid_argument("matrix buffer does not hold n*n entries");
  }
  SymMatrix m(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      double a = row_major[static_cast<std::size_t>(i) * n + j];
      double b = row_major[static_cast<std::size_t>(j) * n + i];
      if (a != b) {
        throw std::invalid_argument("matrix is not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
      m.set(i, j, a);
    }
  }
  return m;
}

std::vector<double> SymMatrix::multiply(std::span<const double> x) const {
  std::vector<double> y(n_, 0.0);
  for (int i = 0; i < n_; ++i) {
    auto r = row(i);
    double s = 0.0;
    for (int j = 0; j < n_; ++j) s += r[j] * x[j];
    y[i] = s;
  }
  return y;
}

double SymMatrix::max_abs_row_sum() const {
  double best = 0.0;
  for (int i = 0; i < n_; ++i) {
    double s = 0.0;
    for (double v : row(i)) s += std::abs(v);
    best = std::max(best, s);
  }
  return best;
}

std::string SymMatrix::to_tsv() const {
  std::string out;
  char buf[40];
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", (*this)(i, j));
      if (j) out += '\t';
      out += buf;
    }
    out += '\n';
  }
  return out;
}

SymMatrix adjacency_matrix(const Graph& g) {
  SymMatrix m(g.order());
  for (const auto& [u, v] : g.edges()) m.set(u, v, 1.0);
  return m;
}

namespace {

SymMatrix from_distances(const DistanceMatrix& d) {
  SymMatrix m(d.order());
  for (int u = 0; u < d.order(); ++u) {
    for (int v = u + 1; v < d.order(); ++v) {
      auto duv = d.at(u, v);
      if (!duv) throw GraphError("distance matrix requires a connected graph");
      m.set(u, v, static_cast<double>(*duv));
    }
  }
  return m;
}

double norm2(std::span<const double> x) {
  return std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
}

void normalize(std::vector<double>& x) {
  double s = norm2(x);
  for (double& v : x) v /= s;
}

double residual_norm(const SymMatrix& m, std::span<const double> x, double lambda) {
  auto mx = m.multiply(x);
  double r = 0.0;
  for (std::size_t i = 0; i < mx.size(); ++i) r += (mx[i] - lambda * x[i]) * (mx[i] - lambda * x[i]);
  return std::sqrt(r);
}

bool is_nonnegative(const SymMatrix& m) {
  for (int i = 0; i < m.order(); ++i)
    for (double v : m.row(i))
      if (v < 0) return false;
  return true;
}

// Fix the sign so the entry sum is positive; for a nonnegative matrix the
// Perron vector then has nonnegative entries.
void orient(std::vector<double>& x, bool clamp_nonnegative) {
  double s = std::accumulate(x.begin(), x.end(), 0.0);
  if (s < 0)
    for (double& v : x) v = -v;
  if (clamp_nonnegative) {
    bool changed = false;
    for (double& v : x) {
      if (v < 0 && v > -1e-13) {
        v = 0.0;
        changed = true;
      }
    }
    if (changed) normalize(x);
  }
}

}  // namespace

SymMatrix distance_matrix(const Graph& g) { return from_distances(bfs_distances(g)); }

SymMatrix shifted_adjacency(const Graph& g) {
  const int n = g.order();
  SymMatrix m(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) m.set(u, v, g.adjacent(u, v) ? 2.0 : 1.0);
  return m;
}

SymMatrix complement_distance_matrix(const Graph& g) {
  auto d = diameter(g);
  if (d && *d < 3) {
    throw GraphError("complement distance matrix requires diameter >= 3, got " + std::to_string(*d));
  }
  return from_distances(bfs_distances(complement(g)));
}

std::optional<EigenPair> power_iteration(const SymMatrix& m, double tol, int max_steps) {
  const int n = m.order();
  const double shift = m.max_abs_row_sum();
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::mt19937_64 rng(0x5eed);
  double previous = rayleigh_quotient(m, x);

  for (int step = 0; step < max_steps; ++step) {
    auto y = m.multiply(x);
    for (int i = 0; i < n; ++i) y[i] += shift * x[i];
    double len = norm2(y);
    if (!(len > 1e-300)) {
      // Start vector orthogonal to everything reachable; restart randomly.
      std::uniform_real_distribution<double> unit(0.5, 1.5);
      for (double& v : x) v = unit(rng);
      normalize(x);
      continue;
    }
    for (double& v : y) v /= len;
    x.swap(y);
    double lambda = rayleigh_quotient(m, x);
    double res = residual_norm(m, x, lambda);
    if (std::abs(lambda - previous) < tol && res < tol) {
      return EigenPair{lambda, std::move(x), res};
    }
    previous = lambda;
  }
  return std::nullopt;
}

JacobiResult jacobi_eigensolve(const SymMatrix& m, double tol, int max_sweeps) {
  const int n = m.order();
  std::vector<std::vector<double>> a(n, std::vector<double>(n));
  std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
  double scale = 0.0;
  for (int i = 0; i < n; ++i) {
    v[i][i] = 1.0;
    for (int j = 0; j < n; ++j) {
      a[i][j] = m(i, j);
      scale += a[i][j] * a[i][j];
    }
  }
  scale = std::sqrt(scale);

  auto off_norm = [&] {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s += 2.0 * a[i][j] * a[i][j];
    return std::sqrt(s);
  };

  int sweeps = 0;
  while (off_norm() > tol * std::max(scale, 1.0)) {
    if (sweeps == max_sweeps) throw EigenSolveError("Jacobi eigensolve did not converge within " + std::to_string(max_sweeps) + " sweeps");
    ++sweeps;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (a[p][q] == 0.0) continue;
        double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          double vkp = v[k][p], vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int i, int j) { return a[i][i] > a[j][j]; });
  JacobiResult out;
  out.sweeps = sweeps;
  for (int k : idx) {
    out.values.push_back(a[k][k]);
    std::vector<double> col(n);
    for (int i = 0; i < n; ++i) col[i] = v[i][k];
    out.vectors.push_back(std::move(col));
  }
  return out;
}

EigenPair dominant_eigenpair(const SymMatrix& m, double tol) {
  const int n = m.order();
  const bool nonneg = is_nonnegative(m);
  if (auto pair = power_iteration(m, tol, 100 * n)) {
    orient(pair->vector, nonneg);
    return *std::move(pair);
  }

  JacobiResult full;
  try {
    full = jacobi_eigensolve(m);
  } catch (const EigenSolveError& e) {
    throw EigenSolveError(std::string("dominant eigenpair: power iteration hit its ") + std::to_string(100 * n) +
                          "-step cap and " + e.what());
  }
  EigenPair pair{full.values.front(), std::move(full.vectors.front()), 0.0};
  normalize(pair.vector);
  orient(pair.vector, nonneg);
  pair.value = rayleigh_quotient(m, pair.vector);
  pair.residual = residual_norm(m, pair.vector, pair.value);
  if (!(pair.residual <= tol)) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "dominant eigenpair: residual %.3e exceeds tolerance %.3e after both solvers",
                  pair.residual, tol);
    throw EigenSolveError(buf);
  }
  return pair;
}

double rayleigh_quotient(const SymMatrix& m, std::span<const double> x) {
  double xx = std::inner_product(x.begin(), x.end(), x.begin(), 0.0);
  if (!(xx > 0.0)) throw std::invalid_argument("Rayleigh quotient of the zero vector");
  auto mx = m.multiply(x);
  return std::inner_product(x.begin(), x.end(), mx.begin(), 0.0) / xx;
}

MatrixKind parse_matrix_kind(std::string_view name) {
  if (name == "adjacency") return MatrixKind::adjacency;
  if (name == "distance") return MatrixKind::distance;
  if (name == "cadjacency" || name == "complement_adjacency") return MatrixKind::complement_adjacency;
  if (name == "cdistance" || name == "complement_distance") return MatrixKind::complement_distance;
  throw std::invalid_argument("unknown matrix kind '" + std::string(name) + "'");
}

std::string_view to_string(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::adjacency: return "adjacency";
    case MatrixKind::distance: return "distance";
    case MatrixKind::complement_adjacency: return "cadjacency";
    case MatrixKind::complement_distance: return "cdistance";
  }
  return "?";
}

SymMatrix build_matrix(const Graph& g, MatrixKind kind) {
  switch (kind) {
    case MatrixKind::adjacency: return adjacency_matrix(g);
    case MatrixKind::distance: return distance_matrix(g);
    case MatrixKind::complement_adjacency: return adjacency_matrix(complement(g));
    case MatrixKind::complement_distance: return complement_distance_matrix(g);
  }
  throw std::invalid_argument("unknown matrix kind");
}

EigenPair spectral_radius(const Graph& g, MatrixKind kind, double tol) {
  return dominant_eigenpair(build_matrix(g, kind), tol);
}

}  // namespace cliquespec

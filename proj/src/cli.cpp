#include "cliquespec/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cliquespec/edge_list.hpp"
#include "cliquespec/families.hpp"
#include "cliquespec/spectral.hpp"
#include "cliquespec/verify.hpp"

namespace cliquespec {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;

std::string fixed12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%#.12g", x);
  return buf;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + path);
  file << text;
}

Graph load_graph(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_edge_list(buf.str());
  }
  return read_edge_list_file(path);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Clique trees, block graphs and spectral radii of their complements"};
  app.require_subcommand(1);

  std::string family_spec, out_path;
  auto* gen = app.add_subcommand("gen", "Write a named family member as an edge list");
  gen->add_option("family", family_spec, "path:n, complete:n, broom:n, cliquepath:n1,n2,..., cliquestar:e1,...;bridge;last")
      ->required();
  gen->add_option("--out", out_path, "Output file (default stdout)");

  std::string in_path = "-", matrix = "adjacency";
  double tol = kDefaultTolerance;
  auto* spectrum = app.add_subcommand("spectrum", "Print the spectral radius and Perron vector of a graph matrix");
  spectrum->add_option("input", in_path, "Edge-list file, '-' for stdin");
  spectrum->add_option("--matrix", matrix, "adjacency | distance | cadjacency | cdistance")
      ->check(CLI::IsMember({"adjacency", "distance", "cadjacency", "cdistance"}));
  spectrum->add_option("--tol", tol, "Residual tolerance")->check(CLI::PositiveNumber);

  std::string theorem, format = "json";
  TheoremParams params;
  std::optional<int> n_opt, s_opt, d_opt;
  int jobs = 0;
  auto* verify = app.add_subcommand("verify", "Run one theorem check and write its report");
  verify->add_option("theorem", theorem, "Theorem id, e.g. L4.1 or T2.5")->required();
  verify->add_option("--n", n_opt, "Order (exact for T2.5/T4.6 and diameter classes, maximum otherwise)");
  verify->add_option("--s", s_opt, "Restrict to this block count");
  verify->add_option("--d", d_opt, "Single diameter class pair (d, d+1)");
  verify->add_option("--trials", params.trials, "Random clique trees for L2.1/L4.2")->check(CLI::PositiveNumber);
  verify->add_option("--seed", params.seed, "Seed for L2.1/L4.2");
  verify->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  verify->add_option("--out", out_path, "Output file (default stdout)");
  verify->add_option("--jobs", jobs, "Worker threads (default: available parallelism)");

  std::string enum_family;
  bool count_only = false;
  auto* enumerate = app.add_subcommand("enumerate", "List one graph per isomorphism class");
  enumerate->add_option("family", enum_family, "trees | cliquetrees | connected")
      ->required()
      ->check(CLI::IsMember({"trees", "cliquetrees", "connected"}));
  enumerate->add_option("--n", n_opt, "Order")->required();
  enumerate->add_option("--s", s_opt, "Clique count (cliquetrees only)");
  enumerate->add_flag("--count-only", count_only, "Print only the number of classes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) {
      emit(to_edge_list(parse_family(family_spec)), out_path, out);
      return kExitOk;
    }

    if (*spectrum) {
      Graph g = load_graph(in_path, in);
      EigenPair pair = spectral_radius(g, parse_matrix_kind(matrix), tol);
      out << fixed12(pair.value) << "\n";
      for (std::size_t i = 0; i < pair.vector.size(); ++i) out << (i ? " " : "") << fixed12(pair.vector[i]);
      out << "\n";
      return kExitOk;
    }

    if (*verify) {
      if (!is_theorem_id(theorem)) {
        err << "unknown theorem id '" << theorem << "'; known ids:";
        for (const auto& id : theorem_ids()) err << " " << id;
        err << "\n";
        return kExitUsage;
      }
      params.n = n_opt;
      params.s = s_opt;
      params.d = d_opt;
      VerifyOptions opts;
      opts.jobs = jobs;
      TheoremReport report = run_theorem(theorem, params, opts);
      emit(format == "csv" ? to_csv(report) : to_json_string(report), out_path, out);
      if (report.vacuous) err << report.theorem << ": vacuous, no non-empty class pair to compare\n";
      if (!report.violations.empty()) {
        err << report.theorem << ": " << report.violations.size() << " violation(s)\n";
        return kExitViolation;
      }
      return kExitOk;
    }

    if (*enumerate) {
      const int n = *n_opt;
      std::vector<Graph> graphs;
      if (enum_family == "trees") graphs = enumerate_trees(n);
      else if (enum_family == "connected") graphs = enumerate_connected_graphs(n);
      else graphs = s_opt ? enumerate_clique_trees(n, *s_opt) : enumerate_clique_trees(n);
      if (count_only) {
        out << graphs.size() << "\n";
        return kExitOk;
      }
      for (std::size_t i = 0; i < graphs.size(); ++i) out << (i ? "\n" : "") << to_edge_list(graphs[i]);
      return kExitOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cliquespec

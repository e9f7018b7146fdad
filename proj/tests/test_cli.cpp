#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "cliquespec/cli.hpp"

using namespace cliquespec;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "cliquespec");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("gen") {
  auto p5 = run({"gen", "path:5"});
  CHECK(p5.code == 0);
  CHECK(p5.out == "5 4\n0 1\n1 2\n2 3\n3 4\n");

  auto bowtie = run({"gen", "cliquepath:3,3"});
  CHECK(bowtie.code == 0);
  CHECK(bowtie.out.rfind("5 6\n", 0) == 0);

  auto bad = run({"gen", "cliquepath:1,3"});
  CHECK(bad.code == 1);
  CHECK_FALSE(bad.err.empty());
}

TEST_CASE("spectrum") {
  auto k5 = run({"spectrum", "--matrix", "adjacency", "-"}, run({"gen", "complete:5"}).out);
  CHECK(k5.code == 0);
  CHECK(k5.out.rfind("4.00000000000\n", 0) == 0);

  const std::string p3 = run({"gen", "path:3"}).out;
  auto d = run({"spectrum", "--matrix", "distance"}, p3);
  CHECK(d.code == 0);
  CHECK(d.out.rfind("2.73205080757\n", 0) == 0);

  CHECK(run({"spectrum", "--matrix", "cdistance"}, p3).code == 1);
  CHECK(run({"spectrum", "--matrix", "distance"}, "4 2\n0 1\n2 3\n").code == 1);
  CHECK(run({"spectrum", "--matrix", "laplacian"}, p3).code == 1);
  CHECK(run({"spectrum"}, "3 1\n0 0\n").code == 1);
}

TEST_CASE("verify") {
  auto ok = run({"verify", "L4.1", "--n", "5"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("\"theorem\": \"L4.1\"") != std::string::npos);

  auto csv = run({"verify", "T2.5", "--n", "7", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("theorem,index,graph", 0) == 0);

  auto unknown = run({"verify", "X9.9"});
  CHECK(unknown.code == 1);
  CHECK(unknown.err.find("L4.1") != std::string::npos);

  auto vacuous = run({"verify", "L2.3", "--n", "5", "--d", "4"});
  CHECK(vacuous.code == 0);
  CHECK(vacuous.err.find("vacuous") != std::string::npos);
}

TEST_CASE("enumerate") {
  CHECK(run({"enumerate", "trees", "--n", "4", "--count-only"}).out == "2\n");
  CHECK(run({"enumerate", "cliquetrees", "--n", "4", "--s", "2", "--count-only"}).out == "1\n");
  CHECK(run({"enumerate", "trees", "--n", "8", "--count-only"}).out == "23\n");
  CHECK(run({"enumerate", "connected", "--n", "3"}).out == "3 2\n0 1\n0 2\n\n3 3\n0 1\n0 2\n1 2\n");
  CHECK(run({"enumerate", "forests", "--n", "3"}).code == 1);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cliquespec/graph.hpp"

namespace cliquespec {

enum class Status { ok, tie, violation };

/// One compared pair. `margin` is signed slack: positive when the stated
/// inequality holds strictly, within +-tolerance a tie, below -tolerance a
/// violation.
struct InstanceRow {
  Graph graph;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  Status status = Status::ok;
  std::string note{};
};

struct TheoremReport {
  std::string theorem;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  long checked = 0;
  long excluded = 0;
  long ties = 0;
  std::vector<InstanceRow> violations;
  std::optional<Graph> witness;
  double tolerance = 0.0;
  bool vacuous = false;
  std::vector<std::string> notes;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  std::vector<InstanceRow> rows;  // every compared pair, for the CSV form
  double elapsed_ms = 0.0;

  bool passed() const { return violations.empty() && checked > 0 && !vacuous; }
};

/// Rounds to 12 significant digits, the precision of every printed number.
double round12(double x);

/// JSON form. Field order is fixed; `elapsed_ms` is always the last field.
nlohmann::ordered_json to_json(const TheoremReport& report);
std::string to_json_string(const TheoremReport& report);

/// One row per compared pair. Graphs are written as their edge list with
/// newlines replaced by ';'.
std::string to_csv(const TheoremReport& report);

std::string_view to_string(Status status);

}  // namespace cliquespec

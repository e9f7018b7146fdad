#include "cliquespec/report.hpp"

#include <cstdio>
#include <cstdlib>

#include "cliquespec/edge_list.hpp"

namespace cliquespec {

double round12(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

std::string_view to_string(Status status) {
  switch (status) {
    case Status::ok: return "ok";
    case Status::tie: return "tie";
    case Status::violation: return "violation";
  }
  return "?";
}

nlohmann::ordered_json to_json(const TheoremReport& report) {
  nlohmann::ordered_json j;
  j["theorem"] = report.theorem;
  j["params"] = report.params;
  j["checked"] = report.checked;
  j["excluded"] = report.excluded;
  auto violations = nlohmann::ordered_json::array();
  for (const auto& v : report.violations) {
    nlohmann::ordered_json item;
    item["graph"] = to_edge_list(v.graph);
    item["lhs"] = round12(v.lhs);
    item["rhs"] = round12(v.rhs);
    item["margin"] = round12(v.margin);
    if (!v.note.empty()) item["note"] = v.note;
    violations.push_back(std::move(item));
  }
  j["violations"] = std::move(violations);
  j["ties"] = report.ties;
  j["witness"] = report.witness ? nlohmann::ordered_json(to_edge_list(*report.witness)) : nlohmann::ordered_json(nullptr);
  j["tolerance"] = report.tolerance;
  j["vacuous"] = report.vacuous;
  j["notes"] = report.notes;
  j["details"] = report.details;
  j["elapsed_ms"] = round12(report.elapsed_ms);
  return j;
}

std::string to_json_string(const TheoremReport& report) { return to_json(report).dump(2) + "\n"; }

namespace {

std::string inline_graph(const Graph& g) {
  std::string s = to_edge_list(g);
  s.pop_back();
  for (char& c : s)
    if (c == '\n') c = ';';
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace

std::string to_csv(const TheoremReport& report) {
  std::string out = "theorem,index,graph,lhs,rhs,margin,status,note\n";
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const auto& r = report.rows[i];
    out += csv_field(report.theorem) + "," + std::to_string(i) + "," + csv_field(inline_graph(r.graph)) + "," +
           num(r.lhs) + "," + num(r.rhs) + "," + num(r.margin) + "," + std::string(to_string(r.status)) + "," +
           csv_field(r.note) + "\n";
  }
  return out;
}

}  // namespace cliquespec

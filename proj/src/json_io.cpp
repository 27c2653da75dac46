#include "groupwalk/json_io.hpp"

#include <cstdio>

namespace groupwalk {

namespace {

std::string decimal17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

json indices_1based(const std::vector<int>& v) {
  json a = json::array();
  for (int i : v) a.push_back(i + 1);
  return a;
}

}  // namespace

json validation_report_json(const GroupValidationReport& report) {
  json j;
  j["is_group"] = report.is_group;
  j["associativity_checked"] = report.associativity_checked;
  json violations = json::array();
  for (const auto& v : report.violations) {
    json vj;
    vj["axiom"] = v.axiom;
    vj["witness"] = indices_1based(v.witness);
    vj["detail"] = v.detail;
    violations.push_back(std::move(vj));
  }
  j["violations"] = std::move(violations);
  return j;
}

json matrix_json(const StochasticMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.order(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.order(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string matrix_csv(const StochasticMatrix& m) {
  std::string out;
  for (int i = 0; i < m.order(); ++i) {
    for (int j = 0; j < m.order(); ++j) {
      if (j) out += ',';
      out += decimal17(m.at(i, j).to_double());
    }
    out += '\n';
  }
  return out;
}

json distribution_json(const GroupDistribution& x) {
  json a = json::array();
  for (int k = 0; k < x.size(); ++k) a.push_back(x.prob(k).str());
  return a;
}

json walk_report_json(const WalkReport& report) {
  json j;
  j["group_order"] = report.group_order;
  j["increment_support_full"] = report.increment_support_full;
  j["converged"] = report.converged;
  j["epsilon"] = report.epsilon;
  j["steps_to_epsilon"] =
      report.steps_to_epsilon ? json(*report.steps_to_epsilon) : json(nullptr);
  j["limit"] = report.limit ? distribution_json(*report.limit) : json(nullptr);
  j["slem"] = report.slem ? json(*report.slem) : json(nullptr);
  j["period"] = report.period ? json(*report.period) : json(nullptr);
  j["float_fallback_from"] =
      report.float_fallback_from ? json(*report.float_fallback_from) : json(nullptr);
  json tv = json::array();
  for (const auto& [m, value] : report.tv_sequence) {
    tv.push_back(json::array({m, value}));
  }
  j["tv_sequence"] = std::move(tv);
  return j;
}

std::string tv_sequence_csv(const WalkReport& report) {
  std::string out = "m,tv\n";
  for (const auto& [m, value] : report.tv_sequence) {
    out += std::to_string(m);
    out += ',';
    out += decimal17(value);
    out += '\n';
  }
  return out;
}

json simulation_json(const SimulationResult& result) {
  json j;
  j["steps"] = result.steps;
  j["trajectories"] = result.trajectories;
  j["seed"] = result.seed;
  j["counts"] = result.counts;
  json emp = json::array();
  for (const auto& e : result.empirical) emp.push_back(e.str());
  j["empirical"] = std::move(emp);
  j["tv_to_exact"] = result.tv_to_exact;
  j["tv_to_uniform"] = result.tv_to_uniform;
  return j;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace groupwalk

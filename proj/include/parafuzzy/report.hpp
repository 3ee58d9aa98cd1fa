#pragma once

// Report rendering. The column order follows the operator-facing layout:
// equipment, test/node, engineering variables read, evidence degrees and
// lattice coordinates, crisp value with logical state, operating condition.
// All numeric formatting is fixed-precision so repeated runs are
// byte-identical.

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "parafuzzy/engine.hpp"
#include "parafuzzy/pipeline.hpp"

namespace parafuzzy {

namespace detail {

inline std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  // normalize negative zero so formatting is stable across code paths
  std::string s(buf);
  if (s == "-0." + std::string(static_cast<std::size_t>(digits), '0'))
    s.erase(0, 1);
  return s;
}

inline std::string trim_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

inline std::string state_display(const NodeResult& n) {
  if (n.boundary && n.state == LogicalState::qf_bottom)
    return std::string(state_label(LogicalState::qf_bottom)) + "/⊤";
  return state_label(n.state);
}

inline std::string readings_display(const NodeResult& n) {
  std::string out;
  for (int i = 0; i < 2; ++i) {
    if (i) out += ";";
    out += n.variables[i] + "=" + trim_number(n.readings[i].r1) + "|" +
           trim_number(n.readings[i].r2);
  }
  return out;
}

}  // namespace detail

inline void write_report_csv_header(std::ostream& out) {
  out << "equipment,cycle,node,readings,mu,lambda,dc,dct,crisp,state,"
         "state_index,condition\n";
}

inline void write_report_csv(std::ostream& out, const SubsystemReport& rep) {
  using detail::fixed;
  for (const NodeResult& n : rep.nodes) {
    out << rep.equipment << ',' << rep.cycle << ',' << n.node_id << ','
        << detail::readings_display(n) << ',' << fixed(n.evidence.mu(), 4)
        << ',' << fixed(n.evidence.lambda(), 4) << ',' << fixed(n.point.dc, 4)
        << ',' << fixed(n.point.dct, 4) << ',' << fixed(n.crisp, 9) << ','
        << detail::state_display(n) << ',' << state_index(n.state) << ','
        << condition_name(rep.condition) << '\n';
  }
}

inline nlohmann::ordered_json report_to_json(const SubsystemReport& rep) {
  nlohmann::ordered_json j;
  j["equipment"] = rep.equipment;
  j["subsystem"] = subsystem_name(rep.kind);
  j["cycle"] = rep.cycle;
  j["timestamp_s"] = rep.timestamp_s;
  j["condition"] = condition_name(rep.condition);
  j["nodes"] = nlohmann::ordered_json::array();
  for (const NodeResult& n : rep.nodes) {
    nlohmann::ordered_json nj;
    nj["node"] = n.node_id;
    nj["variables"] = {n.variables[0], n.variables[1]};
    nj["readings"] = {{n.readings[0].r1, n.readings[0].r2},
                      {n.readings[1].r1, n.readings[1].r2}};
    nj["mu"] = n.evidence.mu();
    nj["lambda"] = n.evidence.lambda();
    nj["dc"] = n.point.dc;
    nj["dct"] = n.point.dct;
    nj["crisp"] = n.crisp;
    nj["state"] = detail::state_display(n);
    nj["state_index"] = state_index(n.state);
    nj["boundary"] = n.boundary;
    j["nodes"].push_back(std::move(nj));
  }
  return j;
}

inline void write_report_table(std::ostream& out, const SubsystemReport& rep) {
  using detail::fixed;
  char buf[256];
  for (std::size_t i = 0; i < rep.nodes.size(); ++i) {
    const NodeResult& n = rep.nodes[i];
    const std::string degrees = "(" + fixed(n.evidence.mu(), 4) + "," +
                                fixed(n.evidence.lambda(), 4) + ";" +
                                fixed(n.point.dc, 4) + "," +
                                fixed(n.point.dct, 4) + ")";
    const std::string crisp_state =
        "(" + fixed(n.crisp, 9) + ";" + detail::state_display(n) + ")";
    std::snprintf(buf, sizeof buf, "%-20s (%lld,%d)  %-34s %-44s %-24s %s\n",
                  i == 0 ? rep.equipment.c_str() : "",
                  static_cast<long long>(rep.cycle), n.node_id,
                  detail::readings_display(n).c_str(), degrees.c_str(),
                  crisp_state.c_str(),
                  i == 0 ? condition_name(rep.condition) : "");
    out << buf;
  }
}

inline void write_sweep_csv(std::ostream& out,
                            const std::vector<SweepRecord>& records) {
  out << "dc,dct,crisp,state_index\n";
  for (const SweepRecord& r : records) {
    out << detail::fixed(r.dc, 4) << ',' << detail::fixed(r.dct, 4) << ','
        << detail::fixed(r.crisp, 9) << ',' << r.state_index << '\n';
  }
}

}  // namespace parafuzzy
